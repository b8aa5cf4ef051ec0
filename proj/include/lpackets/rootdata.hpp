// Based root data in coordinates: X^* = Z^n and X_* = Z^n with the dot
// product as the canonical pairing. Roots live in X^*, coroots in X_*.
// Weyl groups are enumerated explicitly (desk scale, rank <= 4 targets).

#ifndef LPACKETS_ROOTDATA_HPP_
#define LPACKETS_ROOTDATA_HPP_

#include <map>
#include <optional>

#include "lpackets/lattice.hpp"

namespace lpk {

struct BasedRootDatum {
  int rank = 0;
  std::vector<IntVec> roots;    // all roots, in a fixed order
  std::vector<IntVec> coroots;  // matched: coroots[i] is roots[i]^vee
  std::vector<int> simple;      // indices into roots
  std::string name;             // builtin tag, empty for custom data

  int root_index(const IntVec& r) const;
  bool is_root(const IntVec& r) const { return root_index(r) >= 0; }
  std::size_t num_roots() const { return roots.size(); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const BasedRootDatum& d);
void require_valid(const BasedRootDatum& d);  // throws with the violation list

// swap X^* <-> X_* and roots <-> coroots; dual(dual(d)) == d
BasedRootDatum dual(const BasedRootDatum& d);

// builtin families: A1, A1xA1, B2, C2, C3, G2 with -sc / -adj lattices
// ("G2" alone is accepted: its two lattices coincide)
BasedRootDatum make_datum(const std::string& name);
std::vector<std::string> builtin_names();

struct WeylElement {
  IntMatrix m;     // action on X_*
  IntMatrix minv;  // matrix of the inverse element
  int length = 0;
  int sign = 1;    // (-1)^length = det(m)

  RatVec act_coweight(const RatVec& y) const;
  IntVec act_coweight(const IntVec& y) const;
  RatVec act_weight(const RatVec& x) const;  // dual action, (m^-1)^T
  std::vector<double> act_point(const std::vector<double>& t) const;
  bool operator==(const WeylElement& o) const { return m == o.m; }
};

// full enumeration, sorted by (length, matrix entries); throws past `bound`
std::vector<WeylElement> weyl_group(const BasedRootDatum& d,
                                    std::size_t bound = 100000);

WeylElement weyl_identity(const BasedRootDatum& d);
WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& w);
// reflection in a root (given by index into d.roots)
WeylElement reflection(const BasedRootDatum& d, int root_index);

// A positive system, represented by a regular defining weight (DESIGN:
// walls are rejected, regularity is a precondition wherever a chamber
// is used).
struct PositiveSystem {
  RatVec witness;          // regular weight defining the system
  std::vector<int> roots;  // indices of positive roots
};

bool is_regular(const BasedRootDatum& d, const RatVec& weight);
PositiveSystem chamber_of(const BasedRootDatum& d, const RatVec& weight);
PositiveSystem based_system(const BasedRootDatum& d);
// simple roots of an arbitrary positive system (indecomposable positives)
std::vector<int> simple_of_system(const BasedRootDatum& d,
                                  const PositiveSystem& pos);

RatVec rho(const BasedRootDatum& d, const PositiveSystem& pos);
RatVec rho_check(const BasedRootDatum& d, const PositiveSystem& pos);

// W-orbit and stabilizer of a rational cocharacter modulo X_*.
// Residues are normalized to [0,1)^n.
struct OrbitStabilizer {
  std::vector<RatVec> orbit;
  std::vector<std::size_t> stabilizer;  // indices into the given group list
};

RatVec mod_lattice(const RatVec& v);  // coordinatewise fractional part
OrbitStabilizer orbit_and_stabilizer(const std::vector<WeylElement>& group,
                                     const RatVec& point);

}  // namespace lpk

#endif  // LPACKETS_ROOTDATA_HPP_
