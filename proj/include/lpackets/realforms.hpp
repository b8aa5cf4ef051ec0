// Real forms of an equal-rank inner class, encoded torus-internally by
// gradings x = exp(2*pi*i*mu): a root is compact iff alpha(x) = 1.
// Galois cohomology of the elliptic torus (sigma = -1 on X_*) is
// H^1(Gamma,S) = X_*/2X_* with the Tate-Nakayama pairing against
// 2-torsion of the dual torus.

#ifndef LPACKETS_REALFORMS_HPP_
#define LPACKETS_REALFORMS_HPP_

#include "lpackets/rootdata.hpp"

namespace lpk {

struct Grading {
  RatVec mu;    // <alpha, mu> in (1/2)Z for every root
  IntVec cls;   // pure class offset relative to the quasi-split base
                // (coordinates mod 2); empty means zero
};

// mu = rho^vee/2: every simple root of `pos` is noncompact
Grading quasisplit_grading(const BasedRootDatum& d, const PositiveSystem& pos);
// mu_qs + lift(cls)/2, carrying the class
Grading twisted_grading(const BasedRootDatum& d, const Grading& qs,
                        const IntVec& cls);
// arbitrary mu (cls empty); validates half-integrality of all <alpha,mu>
Grading custom_grading(const BasedRootDatum& d, const RatVec& mu);

bool root_is_compact(const BasedRootDatum& d, const Grading& g, int root_index);
std::vector<int> compact_roots(const BasedRootDatum& d, const Grading& g);

// W_R = Stab_W(mu mod X_*); contains every compact-root reflection
std::vector<WeylElement> real_weyl_group(const BasedRootDatum& d,
                                         const std::vector<WeylElement>& w,
                                         const Grading& g);

// number of noncompact positive roots (independent of the positive system)
int q_invariant(const BasedRootDatum& d, const Grading& g,
                const PositiveSystem& pos);

// e(G) = (-1)^(q(G_qs) - q(G))
int kottwitz_sign(const BasedRootDatum& d, const Grading& g,
                  const Grading& qs, const PositiveSystem& pos);

// X_*/2X_*, order 2^rank
FiniteAbelianGroup h1_of_torus(const BasedRootDatum& d);

// class in X_*/2X_* carried by an integral lift
struct CohomologyClassS {
  IntVec lift;

  IntVec reduced() const {  // coordinates in {0,1}
    IntVec out(lift.size());
    for (std::size_t i = 0; i < lift.size(); ++i) out[i] = mod_pos(lift[i], 2);
    return out;
  }
};

CohomologyClassS class_add(const CohomologyClassS& a, const CohomologyClassS& b);

// s = exp(2*pi*i*nu) in the 2-torsion of the dual torus: 2*nu in X^*
struct DualTorsionElement {
  RatVec nu;
};

DualTorsionElement make_torsion(const BasedRootDatum& d, const RatVec& nu);

// exp(2*pi*i <nu, lift>) in {+1,-1}, computed by exact parity
int tn_pairing_sign(const CohomologyClassS& c, const DualTorsionElement& s);
Complex tn_pairing(const CohomologyClassS& c, const DualTorsionElement& s);

// Partition of X_*/2X_* into W-orbits of mu_qs + c/2 mod X_*:
// one orbit per pure inner form, orbit elements = packet members there.
struct PureFormOrbit {
  std::vector<IntVec> classes;  // reduced 0/1 coordinates, sorted
};

std::vector<PureFormOrbit> pure_forms(const BasedRootDatum& d,
                                      const std::vector<WeylElement>& w,
                                      const PositiveSystem& pos);

}  // namespace lpk

#endif  // LPACKETS_REALFORMS_HPP_
