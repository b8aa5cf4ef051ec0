#include "lpackets/packets.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lpk {

namespace {

// key for coset bookkeeping: sorted list of member matrices
std::vector<std::vector<Int>> coset_key(const WeylElement& u,
                                        const std::vector<WeylElement>& sub,
                                        bool left) {
  std::vector<std::vector<Int>> key;
  key.reserve(sub.size());
  for (const WeylElement& w : sub) {
    WeylElement p = left ? weyl_compose(u, w) : weyl_compose(w, u);
    key.push_back(p.m.a);
  }
  std::sort(key.begin(), key.end());
  return key;
}

IntVec int_vec(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = int_part(v[i]);
  return out;
}

}  // namespace

DiscreteParameter make_parameter(const BasedRootDatum& d, const RatVec& lambda) {
  require_valid(d);
  if (static_cast<int>(lambda.size()) != d.rank)
    throw Error("lambda of wrong dimension");
  DiscreteParameter p;
  p.datum = d;
  p.lambda = lambda;
  PositiveSystem base = based_system(d);
  for (std::size_t i = 0; i < d.coroots.size(); ++i) {
    Rat v = pair(lambda, d.coroots[i]);
    if (v == 0)
      throw Error("irregular lambda: <lambda, alpha^vee> = 0 for coroot index " +
                  std::to_string(i));
  }
  for (int i : base.roots)
    if (pair(lambda, d.coroots[i]) < 0)
      throw Error("lambda must be dominant for the based positive system");
  RatVec r = rho(d, base);
  RatVec diff = vsub(lambda, r);
  for (const Rat& x : diff)
    if (!is_integral(x))
      throw Error("lambda is not genuine: lambda - rho not in X^*");
  p.chamber = base;
  p.chamber.witness = lambda;
  return p;
}

Packet enumerate_packet(const DiscreteParameter& param, const Grading& form,
                        const std::vector<WeylElement>& w) {
  Packet p;
  p.param = param;
  p.form = form;
  p.real_weyl = real_weyl_group(param.datum, w, form);
  p.q_form = q_invariant(param.datum, form, param.chamber);
  RatVec rc = rho_check(param.datum, param.chamber);
  IntVec cls0(param.datum.rank, Int(0));
  if (!form.cls.empty()) cls0 = form.cls;

  std::set<std::vector<std::vector<Int>>> seen;
  for (const WeylElement& u : w) {  // already sorted by (length, lex)
    auto key = coset_key(u, p.real_weyl, /*left=*/true);
    if (!seen.insert(key).second) continue;
    PacketMember m;
    m.u = u;
    IntVec inv = int_vec(vsub(rc, u.act_coweight(rc)));
    for (int k = 0; k < param.datum.rank; ++k)
      inv[k] = mod_pos(inv[k] + cls0[k], 2);
    m.inv_class = CohomologyClassS{inv};
    p.members.push_back(std::move(m));
  }
  return p;
}

ComponentGroup component_group(const DiscreteParameter& param) {
  ComponentGroup cg;
  cg.pure = h1_of_torus(param.datum);
  // rigid part: (1/2)X^*(S) / Q(G) in the basis (e_i/2) of (1/2)X^*,
  // where a root alpha has coordinates 2*alpha
  const BasedRootDatum& d = param.datum;
  std::vector<IntVec> cols;
  for (int si : d.simple) {
    IntVec c(d.rank);
    for (int k = 0; k < d.rank; ++k) c[k] = 2 * d.roots[si][k];
    cols.push_back(c);
  }
  cg.rigid = quotient_group(d.rank, IntMatrix::from_cols(cols));
  return cg;
}

Complex hc_character(const Packet& p, const PacketMember& member,
                     const TorusPoint& t) {
  if (!is_regular(p.param.datum, t)) throw Error("irregular torus point");
  Complex sum(0.0, 0.0);
  for (const WeylElement& w : p.real_weyl) {
    TorusPoint x = act(member.u, act(w, t));
    sum += eval_char(p.param.lambda, x) / d_arg(p.param.datum, p.param.chamber, x);
  }
  return (p.q_form % 2 == 0) ? sum : -sum;
}

Complex stable_character(const BasedRootDatum& d, const RatVec& lambda,
                         const std::vector<int>& pos_roots, int q,
                         const std::vector<WeylElement>& group,
                         const TorusPoint& t) {
  Complex sum(0.0, 0.0);
  for (const WeylElement& w : group) {
    TorusPoint x = act(w, t);
    sum += eval_char(lambda, x) / d_arg(d, pos_roots, x);
  }
  return (q % 2 == 0) ? sum : -sum;
}

Complex stable_character(const DiscreteParameter& param,
                         const std::vector<WeylElement>& w,
                         const TorusPoint& t) {
  Grading qs = quasisplit_grading(param.datum, param.chamber);
  int q = q_invariant(param.datum, qs, param.chamber);
  return stable_character(param.datum, param.lambda, param.chamber.roots, q, w, t);
}

int pairing_sign(const PacketMember& member, const DualTorsionElement& s) {
  return tn_pairing_sign(member.inv_class, s);
}

Complex pairing(const PacketMember& member, const DualTorsionElement& s) {
  return Complex(pairing_sign(member, s), 0.0);
}

GenericityInfo generic_members(const Packet& p,
                               const std::vector<WeylElement>& w) {
  const BasedRootDatum& d = p.param.datum;
  Grading qs = quasisplit_grading(d, p.param.chamber);
  bool is_qs = p.form.mu == qs.mu &&
               std::all_of(p.form.cls.begin(), p.form.cls.end(),
                           [](const Int& x) { return mod_pos(x, 2) == 0; });
  if (!is_qs) throw Error("genericity is defined on the quasi-split form only");

  // W_R of the adjoint group: w(mu)-mu in the coweight lattice, i.e. all
  // pairings with simple roots integral
  std::vector<WeylElement> wr_ad;
  for (const WeylElement& e : w) {
    RatVec diff = vsub(e.act_coweight(p.form.mu), p.form.mu);
    bool ok = true;
    for (int si : d.simple)
      if (!is_integral(pair(d.roots[si], diff))) {
        ok = false;
        break;
      }
    if (ok) wr_ad.push_back(e);
  }

  GenericityInfo info;
  info.whittaker_count =
      static_cast<int>(wr_ad.size() / std::max<std::size_t>(1, p.real_weyl.size()));

  // Whittaker data = cosets of W_R in W_R^ad, labeled by minimal reps
  std::map<std::vector<std::vector<Int>>, int> coset_label;
  for (const WeylElement& u : wr_ad) {
    auto key = coset_key(u, p.real_weyl, /*left=*/true);
    if (!coset_label.count(key))
      coset_label[key] = static_cast<int>(coset_label.size());
  }

  info.member_whittaker.assign(p.members.size(), -1);
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    const PacketMember& m = p.members[i];
    // chamber criterion: every simple root of the chamber of u^{-1}(lambda)
    // is noncompact for the form's grading
    RatVec lam_u = weyl_inverse(m.u).act_weight(p.param.lambda);
    PositiveSystem ch = chamber_of(d, lam_u);
    std::vector<int> simp = simple_of_system(d, ch);
    bool generic = std::all_of(simp.begin(), simp.end(), [&](int r) {
      return !root_is_compact(d, p.form, r);
    });
    if (!generic) continue;
    auto key = coset_key(m.u, p.real_weyl, /*left=*/true);
    auto it = coset_label.find(key);
    if (it == coset_label.end())
      throw Error("generic member not aligned with a Whittaker coset "
                  "(chamber criterion and torsor structure disagree)");
    info.member_whittaker[i] = it->second;
    info.generic_members.push_back(static_cast<int>(i));
  }
  return info;
}

}  // namespace lpk
