// Shared scalar types: exact integers/rationals for all lattice data,
// complex doubles only in character evaluation.

#ifndef LPACKETS_COMMON_HPP_
#define LPACKETS_COMMON_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline bool is_integral(const Rat& x) { return denominator(x) == 1; }

inline Int int_part(const Rat& x) {
  if (!is_integral(x)) throw Error("expected integral rational");
  return numerator(x);
}

// residue in [0, m)
inline Int mod_pos(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

// the pairing <.,.> : X^* x X_* -> Q is the dot product in coordinates
inline Rat pair(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw Error("pairing: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Rat pair(const IntVec& x, const RatVec& y) { return pair(to_rat(x), y); }
inline Rat pair(const RatVec& x, const IntVec& y) { return pair(x, to_rat(y)); }

inline Int pair_int(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw Error("pairing: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline RatVec vadd(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec vsub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVec smul(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

// "p/q" (or "p") with exact validation; rejects q = 0
Rat parse_rational(const std::string& s);
std::string rational_str(const Rat& x);

std::vector<double> to_doubles(const RatVec& v);

}  // namespace lpk

#endif  // LPACKETS_COMMON_HPP_
