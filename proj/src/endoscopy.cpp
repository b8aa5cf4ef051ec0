#include "lpackets/endoscopy.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lpk {

namespace {

const Complex kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

IntVec int_vec(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = int_part(v[i]);
  return out;
}

std::vector<std::vector<Int>> coset_key(const WeylElement& u,
                                        const std::vector<WeylElement>& sub) {
  // right coset sub*u (the H-stable class of the translate u t)
  std::vector<std::vector<Int>> key;
  key.reserve(sub.size());
  for (const WeylElement& w : sub) key.push_back(weyl_compose(w, u).m.a);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

EndoscopicSide build_endoscopic(const BasedRootDatum& d,
                                const DualTorsionElement& s,
                                const PositiveSystem& chamber) {
  for (const Rat& x : s.nu)
    if (denominator(x) > 2) throw Error("s must lie in the dual 2-torsion");
  EndoscopicSide side;
  side.s = s;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (is_integral(pair(s.nu, d.coroots[i])))
      side.h_roots.push_back(static_cast<int>(i));
  }
  std::set<int> in_h(side.h_roots.begin(), side.h_roots.end());
  for (int i : chamber.roots)
    (in_h.count(i) ? side.h_positive : side.gh_positive).push_back(i);

  side.h_datum.rank = d.rank;
  for (int i : side.h_roots) {
    side.h_datum.roots.push_back(d.roots[i]);
    side.h_datum.coroots.push_back(d.coroots[i]);
  }
  // simple roots of H: indecomposables of the induced positive system
  PositiveSystem hp;
  hp.roots = side.h_positive;
  std::vector<int> simp = simple_of_system(d, hp);
  for (int i : simp) side.h_datum.simple.push_back(side.h_datum.root_index(d.roots[i]));

  RatVec rc_h(d.rank, Rat(0));  // sum of positive H-coroots = 2 rho_H^vee
  for (int i : side.h_positive) rc_h = vadd(rc_h, to_rat(d.coroots[i]));
  side.h_qs.mu = smul(Rat(1, 4), rc_h);  // rho_H^vee / 2
  side.h_qs.cls = IntVec(d.rank, Int(0));
  side.q_h = 0;
  for (int i : side.h_positive)
    if (!is_integral(pair(d.roots[i], side.h_qs.mu))) ++side.q_h;
  side.r_g = static_cast<int>(d.roots.size());
  side.r_h = static_cast<int>(side.h_roots.size());
  // epsilon = (-1)^(q(H)-q(G0)) * i^((r_G-r_H)/2) as quarter turns mod 4
  Grading qs = quasisplit_grading(d, chamber);
  int q_g0 = q_invariant(d, qs, chamber);
  int k = 2 * (side.q_h - q_g0) + (side.r_g - side.r_h) / 2;
  side.epsilon_quarter_turns = ((k % 4) + 4) % 4;
  return side;
}

Complex epsilon_factor(const EndoscopicSide& side) {
  return kQuarter[side.epsilon_quarter_turns];
}

Complex delta_I(const BasedRootDatum& d, const EndoscopicSide& side, int q_g0,
                const TorusPoint& t) {
  if (!is_regular(d, t)) throw Error("irregular torus point");
  Complex z = epsilon_factor(side);
  if ((q_g0 - side.q_h) % 2 != 0) z = -z;
  // prod over R(S,G/H)^+ of arg(2i sin(pi <alpha,t>)) = prod of (+-i)
  z *= d_arg(d, side.gh_positive, t);
  return z;
}

Complex delta_III(const EndoscopicSide& /*side*/, const TorusPoint& /*t*/) {
  // theta_T and theta_S are the same exp(2 pi i <lambda, .>) in the
  // canonical coordinates; the quotient is exactly 1
  return Complex(1.0, 0.0);
}

CohomologyClassS inv_point_class(const BasedRootDatum& d,
                                 const PositiveSystem& chamber,
                                 const WeylElement& u) {
  RatVec rc = rho_check(d, chamber);
  IntVec v = int_vec(vsub(rc, u.act_coweight(rc)));
  for (Int& x : v) x = mod_pos(x, 2);
  return CohomologyClassS{v};
}

Complex transfer_factor(const BasedRootDatum& d, const EndoscopicSide& side,
                        const PositiveSystem& chamber, int q_g0,
                        const WeylElement& u, const TorusPoint& t) {
  TorusPoint x = act(u, t);
  Complex delta = epsilon_factor(side) / delta_I(d, side, q_g0, x);
  delta *= delta_III(side, x);
  delta *= static_cast<double>(
      tn_pairing_sign(inv_point_class(d, chamber, u), side.s));
  return delta;
}

Complex lhs(const Packet& p, const DualTorsionElement& s, const TorusPoint& t) {
  Grading qs = quasisplit_grading(p.param.datum, p.param.chamber);
  int e = kottwitz_sign(p.param.datum, p.form, qs, p.param.chamber);
  Complex sum(0.0, 0.0);
  for (const PacketMember& m : p.members)
    sum += pairing(m, s) * hc_character(p, m, t);
  return static_cast<double>(e) * sum;
}

RhsValues rhs(const DiscreteParameter& param, const EndoscopicSide& side,
              const std::vector<WeylElement>& w, const TorusPoint& t) {
  const BasedRootDatum& d = param.datum;
  Grading qs = quasisplit_grading(d, param.chamber);
  int q_g0 = q_invariant(d, qs, param.chamber);
  std::vector<WeylElement> wh;  // W(H) inside W, generated by H-reflections
  {
    std::set<std::vector<Int>> elems;
    std::vector<WeylElement> frontier{weyl_identity(d)};
    elems.insert(frontier[0].m.a);
    std::vector<WeylElement> gens;
    for (int i : side.h_roots) gens.push_back(reflection(d, i));
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const WeylElement& x : frontier)
        for (const WeylElement& g : gens) {
          WeylElement y = weyl_compose(g, x);
          if (elems.insert(y.m.a).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    for (const WeylElement& x : w)
      if (elems.count(x.m.a)) wh.push_back(x);
  }

  RhsValues out;
  out.a = Complex(0.0, 0.0);
  out.b = Complex(0.0, 0.0);

  // RHS_B: fully unfolded over W
  for (const WeylElement& u : w) {
    TorusPoint x = act(u, t);
    Complex term = transfer_factor(d, side, param.chamber, q_g0, u, t);
    term *= eval_char(param.lambda, x) / d_arg(d, side.h_positive, x);
    if (side.q_h % 2 != 0) term = -term;
    out.b += term;
  }

  // RHS_A: one term per H-stable class kappa in W_H \ W, with the stable
  // character of H at the matched point
  std::set<std::vector<std::vector<Int>>> seen;
  for (const WeylElement& u : w) {
    auto key = coset_key(u, wh);
    if (!seen.insert(key).second) continue;
    TorusPoint x = act(u, t);
    Complex delta = transfer_factor(d, side, param.chamber, q_g0, u, t);
    Complex stheta = stable_character(d, param.lambda, side.h_positive,
                                      side.q_h, wh, x);
    out.a += delta * stheta;
  }
  return out;
}

std::vector<TorusPoint> sample_points(const BasedRootDatum& d, int count,
                                      unsigned long long seed, double margin) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    // portable doubles: top 53 bits of the draw
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  };
  std::vector<TorusPoint> out;
  out.reserve(count);
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    TorusPoint t;
    t.t.resize(d.rank);
    for (int i = 0; i < d.rank; ++i) t.t[i] = uniform();
    if (wall_margin(d, t) >= margin)
      out.push_back(std::move(t));
    else if (++guard > 1000 * count)
      throw Error("sampling failed to clear the wall margin");
  }
  return out;
}

VerifyReport verify_identity(const DiscreteParameter& param,
                             const DualTorsionElement& s, const Grading& form,
                             int samples, unsigned long long seed, double tol,
                             double margin) {
  VerifyReport rep;
  rep.tolerance = tol;
  rep.samples = samples;
  rep.seed = seed;

  const BasedRootDatum& d = param.datum;
  std::vector<WeylElement> w = weyl_group(d);
  Grading qs = quasisplit_grading(d, param.chamber);

  // supported forms: the quasi-split class orbit always; explicit classes
  // outside it only where the class-shifted invariant is oracle-backed
  // (rank-1 lattices)
  bool qs_form = form.mu == qs.mu &&
                 std::all_of(form.cls.begin(), form.cls.end(),
                             [](const Int& x) { return mod_pos(x, 2) == 0; });
  if (!qs_form && d.rank != 1) {
    rep.supported = false;
    rep.unsupported_reason =
        "non-quasi-split pure form without oracle-backed invariant data";
    return rep;
  }

  EndoscopicSide side = build_endoscopic(d, s, param.chamber);
  Packet packet = enumerate_packet(param, form, w);

  std::vector<TorusPoint> pts = sample_points(d, samples, seed, margin);
  for (int i = 0; i < samples; ++i) {
    const TorusPoint& t = pts[i];
    SampleResult r;
    r.t = t.t;
    r.lhs = lhs(packet, s, t);
    RhsValues rv = rhs(param, side, w, t);
    // a non-trivial pure form shifts every rhs term by <cls, s>
    if (!form.cls.empty()) {
      double shift = tn_pairing_sign(CohomologyClassS{form.cls}, s);
      rv.a *= shift;
      rv.b *= shift;
    }
    r.rhs_a = rv.a;
    r.rhs_b = rv.b;
    r.residual = std::abs(r.lhs - r.rhs_a);
    r.rhs_consistency = std::abs(r.rhs_a - r.rhs_b);
    rep.max_residual = std::max(rep.max_residual, r.residual);
    rep.max_rhs_consistency =
        std::max(rep.max_rhs_consistency, r.rhs_consistency);
    rep.per_sample.push_back(std::move(r));
  }
  rep.pass = rep.max_residual < tol;
  return rep;
}

}  // namespace lpk
