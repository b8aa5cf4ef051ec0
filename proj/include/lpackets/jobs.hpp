// Batch front-end: JSON job configs in, JSON reports out. Lattice data
// travel as exact rational strings "p/q"; only residuals are floats.

#ifndef LPACKETS_JOBS_HPP_
#define LPACKETS_JOBS_HPP_

#include <nlohmann/json_fwd.hpp>

#include "lpackets/endoscopy.hpp"
#include "lpackets/oracle.hpp"

namespace lpk {

using Json = nlohmann::json;

struct JobConfig {
  BasedRootDatum datum;
  RatVec lambda;
  RatVec s;                 // nu_s coordinates; empty means s = 1
  bool quasisplit = true;
  IntVec form_class;        // explicit pure class when not quasisplit
  int samples = 100;
  unsigned long long seed = 1;
  double tolerance = 1e-8;
  std::string group_label;
};

// throws Error with context on malformed input
JobConfig parse_config(const Json& j);
JobConfig parse_config_text(const std::string& text);

Json describe(const JobConfig& cfg);
Json packet_report(const JobConfig& cfg);
Json endoscopy_report(const JobConfig& cfg);
Json verify_report(const JobConfig& cfg);
Json oracle_report(const std::string& family);

// exit codes: 0 pass, 1 fail, 2 config error, 3 unsupported, 4 oracle
// falsification
int exit_code_for_verify(const Json& report);
int exit_code_for_oracle(const Json& report);

}  // namespace lpk

#endif  // LPACKETS_JOBS_HPP_
