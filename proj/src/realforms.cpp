#include "lpackets/realforms.hpp"

#include <algorithm>
#include <set>

namespace lpk {

namespace {

bool mu_admissible(const BasedRootDatum& d, const RatVec& mu) {
  for (const IntVec& r : d.roots) {
    Rat p = pair(r, mu);
    if (denominator(p) > 2) return false;
  }
  return true;
}

}  // namespace

Grading quasisplit_grading(const BasedRootDatum& d, const PositiveSystem& pos) {
  Grading g;
  g.mu = smul(Rat(1, 2), rho_check(d, pos));
  g.cls = IntVec(d.rank, Int(0));
  return g;
}

Grading twisted_grading(const BasedRootDatum& d, const Grading& qs,
                        const IntVec& cls) {
  if (static_cast<int>(cls.size()) != d.rank)
    throw Error("pure class of wrong dimension");
  Grading g;
  g.mu = qs.mu;
  for (int i = 0; i < d.rank; ++i) g.mu[i] += Rat(cls[i], 2);
  g.cls = CohomologyClassS{cls}.reduced();
  return g;
}

Grading custom_grading(const BasedRootDatum& d, const RatVec& mu) {
  if (!mu_admissible(d, mu))
    throw Error("grading must pair half-integrally with every root");
  Grading g;
  g.mu = mu;
  g.cls = {};
  return g;
}

bool root_is_compact(const BasedRootDatum& d, const Grading& g, int root_index) {
  return is_integral(pair(d.roots[root_index], g.mu));
}

std::vector<int> compact_roots(const BasedRootDatum& d, const Grading& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (root_is_compact(d, g, static_cast<int>(i)))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<WeylElement> real_weyl_group(const BasedRootDatum& d,
                                         const std::vector<WeylElement>& w,
                                         const Grading& g) {
  std::vector<WeylElement> out;
  for (const WeylElement& e : w) {
    RatVec diff = vsub(e.act_coweight(g.mu), g.mu);
    bool integral = std::all_of(diff.begin(), diff.end(),
                                [](const Rat& x) { return is_integral(x); });
    if (integral) out.push_back(e);
  }
  return out;
}

int q_invariant(const BasedRootDatum& d, const Grading& g,
                const PositiveSystem& pos) {
  int q = 0;
  for (int i : pos.roots)
    if (!root_is_compact(d, g, i)) ++q;
  return q;
}

int kottwitz_sign(const BasedRootDatum& d, const Grading& g,
                  const Grading& qs, const PositiveSystem& pos) {
  int diff = q_invariant(d, qs, pos) - q_invariant(d, g, pos);
  return (diff % 2 == 0) ? 1 : -1;
}

FiniteAbelianGroup h1_of_torus(const BasedRootDatum& d) {
  IntMatrix two = IntMatrix::identity(d.rank);
  for (int i = 0; i < d.rank; ++i) two.at(i, i) = 2;
  return quotient_group(d.rank, two);
}

CohomologyClassS class_add(const CohomologyClassS& a, const CohomologyClassS& b) {
  if (a.lift.size() != b.lift.size()) throw Error("class size mismatch");
  CohomologyClassS c;
  c.lift.resize(a.lift.size());
  for (std::size_t i = 0; i < a.lift.size(); ++i) c.lift[i] = a.lift[i] + b.lift[i];
  return c;
}

DualTorsionElement make_torsion(const BasedRootDatum& d, const RatVec& nu) {
  if (static_cast<int>(nu.size()) != d.rank)
    throw Error("s-coordinates of wrong dimension");
  for (const Rat& x : nu)
    if (denominator(x) > 2)
      throw Error("s must satisfy 2*nu in X^*: got coordinate " +
                  rational_str(x));
  return DualTorsionElement{nu};
}

int tn_pairing_sign(const CohomologyClassS& c, const DualTorsionElement& s) {
  // exp(2 pi i <nu, lift>) with 2 nu integral: sign = parity of <2 nu, lift>
  Rat twice = 0;
  for (std::size_t i = 0; i < c.lift.size(); ++i)
    twice += Rat(2) * s.nu[i] * Rat(c.lift[i]);
  Int k = int_part(twice);
  return (mod_pos(k, 2) == 0) ? 1 : -1;
}

Complex tn_pairing(const CohomologyClassS& c, const DualTorsionElement& s) {
  return Complex(tn_pairing_sign(c, s), 0.0);
}

std::vector<PureFormOrbit> pure_forms(const BasedRootDatum& d,
                                      const std::vector<WeylElement>& w,
                                      const PositiveSystem& pos) {
  // affine action on X_*/2X_*: c -> w(c) - (rho^vee - w rho^vee),
  // i.e. the W-action on the gradings mu_qs + c/2 mod X_*
  RatVec rc = rho_check(d, pos);
  std::vector<PureFormOrbit> orbits;
  std::set<IntVec> seen;
  std::vector<IntVec> all;
  IntVec c(d.rank, Int(0));
  // enumerate (Z/2)^rank in lexicographic order
  for (;;) {
    all.push_back(c);
    int i = d.rank - 1;
    while (i >= 0 && c[i] == 1) c[i--] = 0;
    if (i < 0) break;
    c[i] = 1;
  }
  for (const IntVec& start : all) {
    if (seen.count(start)) continue;
    std::set<IntVec> orbit;
    std::vector<IntVec> frontier{start};
    orbit.insert(start);
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const IntVec& x : frontier)
        for (const WeylElement& e : w) {
          RatVec shift = vsub(rc, e.act_coweight(rc));  // in X_*
          IntVec img = e.act_coweight(x);
          IntVec y(d.rank);
          for (int k = 0; k < d.rank; ++k)
            y[k] = mod_pos(img[k] - int_part(shift[k]), 2);
          if (orbit.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    PureFormOrbit o;
    o.classes.assign(orbit.begin(), orbit.end());
    orbits.push_back(o);
    seen.insert(orbit.begin(), orbit.end());
  }
  return orbits;
}

}  // namespace lpk
