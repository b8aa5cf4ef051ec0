#include <doctest.h>

#include <algorithm>
#include <set>

#include "lpackets/endoscopy.hpp"

using namespace lpk;

namespace {

struct Setup {
  BasedRootDatum d;
  std::vector<WeylElement> w;
  PositiveSystem base;
  Grading qs;
  DiscreteParameter param;
  Packet packet;
  int q_g0;

  Setup(const std::string& name, const RatVec& lambda)
      : d(make_datum(name)), w(weyl_group(d)), base(based_system(d)),
        qs(quasisplit_grading(d, base)), param(make_parameter(d, lambda)),
        packet(enumerate_packet(param, qs, w)),
        q_g0(q_invariant(d, qs, base)) {}

  EndoscopicSide side(const RatVec& nu) const {
    return build_endoscopic(d, make_torsion(d, nu), param.chamber);
  }
};

bool close(Complex a, Complex b, double tol = 1e-10) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("endoscopic sides") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  EndoscopicSide torus = a1.side(RatVec{Rat(1, 2)});
  CHECK(torus.h_roots.empty());  // H = anisotropic torus U(1)
  EndoscopicSide full = a1.side(RatVec{Rat(0)});
  CHECK(full.h_roots.size() == 2);  // s = 1: H = G

  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  // nu = omega2/2: the A1xA1 (SL2 x SL2 type) endoscopic side of Sp4
  EndoscopicSide ax = c2.side(RatVec{Rat(0), Rat(1, 2)});
  CHECK(ax.h_roots.size() == 4);
  CHECK(ax.h_datum.simple.size() == 2);
  CHECK(ax.q_h == 2);
  // the two A1-type sides
  CHECK(c2.side(RatVec{Rat(1, 2), Rat(0)}).h_roots.size() == 2);
  CHECK(c2.side(RatVec{Rat(1, 2), Rat(1, 2)}).h_roots.size() == 2);

  CHECK_THROWS_AS(c2.side(RatVec{Rat(1, 3), Rat(0)}), Error);

  // closedness on the coroot side (the roots of H-hat = Cent(s,G-hat)^0 are
  // the H-coroots, and the annihilator condition there is kernel-closed);
  // positives split disjointly
  for (const RatVec& nu : {RatVec{Rat(0), Rat(1, 2)}, RatVec{Rat(1, 2), Rat(0)}}) {
    EndoscopicSide side = c2.side(nu);
    std::set<IntVec> hcoroots, all_coroots(c2.d.coroots.begin(),
                                           c2.d.coroots.end());
    for (int i : side.h_roots) hcoroots.insert(c2.d.coroots[i]);
    for (const IntVec& r1 : hcoroots)
      for (const IntVec& r2 : hcoroots) {
        IntVec sum(r1.size());
        for (std::size_t k = 0; k < r1.size(); ++k) sum[k] = r1[k] + r2[k];
        if (all_coroots.count(sum)) CHECK(hcoroots.count(sum));
      }
    std::set<int> hp(side.h_positive.begin(), side.h_positive.end());
    std::set<int> gp(side.gh_positive.begin(), side.gh_positive.end());
    std::set<int> all(c2.base.roots.begin(), c2.base.roots.end());
    CHECK(hp.size() + gp.size() == all.size());
    for (int i : hp) CHECK(all.count(i));
    for (int i : gp) CHECK(!hp.count(i));
  }
}

TEST_CASE("epsilon factors") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  CHECK(close(epsilon_factor(a1.side(RatVec{Rat(0)})), Complex(1, 0)));
  // torus side: (-1)^(0-1) i^(2/2-0) = -i
  CHECK(close(epsilon_factor(a1.side(RatVec{Rat(1, 2)})), Complex(0, -1)));

  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  // A1xA1 side: q(H)=2, q(G0)=3, r_G=8, r_H=4 -> (-1)^(-1) i^2 = +1
  EndoscopicSide ax = c2.side(RatVec{Rat(0), Rat(1, 2)});
  CHECK(ax.q_h == 2);
  CHECK(ax.r_g == 8);
  CHECK(ax.r_h == 4);
  CHECK(close(epsilon_factor(ax), Complex(1, 0)));
  // recompute independently from noncompact-root counts
  int qh = 0;
  for (int i : ax.h_positive)
    if (!is_integral(pair(c2.d.roots[i], ax.h_qs.mu))) ++qh;
  CHECK(qh == ax.q_h);

  // A1-long side of C2: q(H) = 1 -> eps = (-1)^(1-3) i^(8-2)/2 = i^3 = -i
  EndoscopicSide along = c2.side(RatVec{Rat(1, 2), Rat(0)});
  CHECK(along.q_h == 1);
  CHECK(close(epsilon_factor(along), Complex(0, -1)));

  // A1xA1 with H = torus: (-1)^(0-2) i^2 = -1
  Setup aa("A1xA1-sc", RatVec{Rat(1), Rat(1)});
  CHECK(close(epsilon_factor(aa.side(RatVec{Rat(1, 2), Rat(1, 2)})),
              Complex(-1, 0)));

  // eps^4 = 1 always
  for (const RatVec& nu : {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1, 2), Rat(0)},
                           RatVec{Rat(0), Rat(1, 2)}, RatVec{Rat(1, 2), Rat(1, 2)}}) {
    Complex e = epsilon_factor(c2.side(nu));
    CHECK(close(e * e * e * e, Complex(1, 0)));
  }
}

TEST_CASE("delta_I: A1 frozen values and wall flips") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  EndoscopicSide torus = a1.side(RatVec{Rat(1, 2)});
  // on 0 < x < 1/2 the single factor is arg(2i sin) = i:
  // Delta_I = (-i) * (-1)^(1-0) * i = -1; it flips across the wall x = 1/2
  CHECK(close(delta_I(a1.d, torus, a1.q_g0, TorusPoint{{0.2}}), Complex(-1, 0)));
  CHECK(close(delta_I(a1.d, torus, a1.q_g0, TorusPoint{{0.3}}), Complex(-1, 0)));
  CHECK(close(delta_I(a1.d, torus, a1.q_g0, TorusPoint{{0.7}}), Complex(1, 0)));
  CHECK_THROWS_AS(delta_I(a1.d, torus, a1.q_g0, TorusPoint{{0.5}}), Error);

  // s = 1: empty product
  EndoscopicSide full = a1.side(RatVec{Rat(0)});
  CHECK(close(delta_I(a1.d, full, a1.q_g0, TorusPoint{{0.2}}), Complex(1, 0)));

  // local constancy between walls (C2 A1xA1 side)
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  EndoscopicSide ax = c2.side(RatVec{Rat(0), Rat(1, 2)});
  Complex v = delta_I(c2.d, ax, c2.q_g0, TorusPoint{{0.13, 0.31}});
  CHECK(close(delta_I(c2.d, ax, c2.q_g0, TorusPoint{{0.14, 0.30}}), v));
  CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
}

TEST_CASE("delta_III is 1 in canonical coordinates") {
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  EndoscopicSide ax = c2.side(RatVec{Rat(0), Rat(1, 2)});
  for (const TorusPoint& t : sample_points(c2.d, 10, 3, 1e-3))
    CHECK(close(delta_III(ax, t), Complex(1, 0)));
}

TEST_CASE("transfer factor") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  EndoscopicSide full = a1.side(RatVec{Rat(0)});
  EndoscopicSide torus = a1.side(RatVec{Rat(1, 2)});
  TorusPoint t{{0.2}};
  // u = e, s = 1: diagonal matching has Delta = 1
  CHECK(close(transfer_factor(a1.d, full, a1.param.chamber, a1.q_g0, a1.w[0], t),
              Complex(1, 0)));
  // u = s_alpha with s nontrivial: extra factor -1 relative to u = e
  Complex at_e =
      transfer_factor(a1.d, torus, a1.param.chamber, a1.q_g0, a1.w[0], t);
  Complex at_s =
      transfer_factor(a1.d, torus, a1.param.chamber, a1.q_g0, a1.w[1], t);
  Complex ratio = at_s / at_e;
  // the ratio carries the point-invariant pairing -1 and the Delta_I flip
  CHECK(close(ratio * ratio, Complex(1, 0)));
  CHECK(close(tn_pairing(inv_point_class(a1.d, a1.param.chamber, a1.w[1]),
                         torus.s),
              Complex(-1, 0)));
  // |Delta| = 1 always
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  EndoscopicSide ax = c2.side(RatVec{Rat(0), Rat(1, 2)});
  for (const TorusPoint& p : sample_points(c2.d, 10, 13, 1e-3))
    for (const WeylElement& u : c2.w)
      CHECK(std::abs(std::abs(transfer_factor(c2.d, ax, c2.param.chamber,
                                              c2.q_g0, u, p)) -
                     1.0) < 1e-12);
}

TEST_CASE("lhs: s = 1 gives the stable character") {
  for (const std::string& name : {"A1-sc", "C2-sc", "G2-sc"}) {
    BasedRootDatum d = make_datum(name);
    std::vector<WeylElement> w = weyl_group(d);
    PositiveSystem base = based_system(d);
    DiscreteParameter p = make_parameter(d, rho(d, base));
    Packet pk = enumerate_packet(p, quasisplit_grading(d, base), w);
    DualTorsionElement s0 = make_torsion(d, RatVec(d.rank, Rat(0)));
    for (const TorusPoint& t : sample_points(d, 25, 7, 1e-3))
      CHECK(close(lhs(pk, s0, t), stable_character(p, w, t)));
  }
}

TEST_CASE("lhs is W_R-invariant in t") {
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  DualTorsionElement s = make_torsion(c2.d, RatVec{Rat(0), Rat(1, 2)});
  for (const TorusPoint& t : sample_points(c2.d, 15, 19, 1e-3)) {
    Complex v = lhs(c2.packet, s, t);
    for (const WeylElement& wr : c2.packet.real_weyl)
      CHECK(close(lhs(c2.packet, s, act(wr, t)), v));
  }
}

TEST_CASE("rhs: A1 two-term structure and internal consistency") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  EndoscopicSide torus = a1.side(RatVec{Rat(1, 2)});
  // H = torus: 2 unfolded terms sum_{u in W} +-Delta_I^{-1} eps e^{2 pi i <lam, ut>}
  TorusPoint t{{0.2}};
  RhsValues rv = rhs(a1.param, torus, a1.w, t);
  Complex eps = epsilon_factor(torus);
  Complex expect(0, 0);
  for (const WeylElement& u : a1.w) {
    TorusPoint x = act(u, t);
    Complex term = eps / delta_I(a1.d, torus, a1.q_g0, x);
    term *= tn_pairing(inv_point_class(a1.d, a1.param.chamber, u), torus.s);
    term *= eval_char(a1.param.lambda, x);
    expect += term;
  }
  CHECK(close(rv.b, expect));
  CHECK(close(rv.a, rv.b));
}

TEST_CASE("deck invariance: both sides only depend on the group element") {
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  DualTorsionElement s = make_torsion(c2.d, RatVec{Rat(0), Rat(1, 2)});
  EndoscopicSide side = c2.side(RatVec{Rat(0), Rat(1, 2)});
  for (const TorusPoint& t : sample_points(c2.d, 10, 29, 1e-3))
    for (const IntVec& mu : {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)},
                             IntVec{Int(1), Int(1)}}) {
      TorusPoint t2 = shift(t, mu);
      CHECK(close(lhs(c2.packet, s, t2), lhs(c2.packet, s, t)));
      RhsValues r1 = rhs(c2.param, side, c2.w, t);
      RhsValues r2 = rhs(c2.param, side, c2.w, t2);
      CHECK(close(r1.a, r2.a));
      CHECK(close(r1.b, r2.b));
    }
}

TEST_CASE("verify_identity: quick runs") {
  Setup a1("A1-sc", RatVec{Rat(1)});
  DualTorsionElement s = make_torsion(a1.d, RatVec{Rat(1, 2)});
  VerifyReport rep = verify_identity(a1.param, s, a1.qs, 50, 1, 1e-8);
  CHECK(rep.supported);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-10);

  // degenerate tolerance semantics: a tolerance below the float noise
  // floor fails (C2: the two sides are computed along different paths)
  Setup c2n("C2-sc", RatVec{Rat(2), Rat(1)});
  DualTorsionElement sn = make_torsion(c2n.d, RatVec{Rat(0), Rat(1, 2)});
  VerifyReport tight = verify_identity(c2n.param, sn, c2n.qs, 50, 1, 1e-300);
  CHECK(!tight.pass);
  CHECK(tight.max_residual > 0.0);

  // determinism: same seed, same residual table
  VerifyReport again = verify_identity(a1.param, s, a1.qs, 50, 1, 1e-8);
  REQUIRE(rep.per_sample.size() == again.per_sample.size());
  for (std::size_t i = 0; i < rep.per_sample.size(); ++i) {
    CHECK(rep.per_sample[i].t == again.per_sample[i].t);
    CHECK(rep.per_sample[i].residual == again.per_sample[i].residual);
  }

  // unsupported: non-quasi-split class in rank 2
  Setup c2("C2-sc", RatVec{Rat(2), Rat(1)});
  Grading twisted = twisted_grading(c2.d, c2.qs, IntVec{Int(1), Int(0)});
  DualTorsionElement s2 = make_torsion(c2.d, RatVec{Rat(0), Rat(1, 2)});
  VerifyReport un = verify_identity(c2.param, s2, twisted, 10, 1, 1e-8);
  CHECK(!un.supported);

  // supported: rank-1 compact pure form (oracle-backed bookkeeping)
  BasedRootDatum pgl2 = make_datum("A1-adj");
  DiscreteParameter pp = make_parameter(pgl2, RatVec{Rat(3, 2)});
  Grading qs = quasisplit_grading(pgl2, based_system(pgl2));
  Grading compact = twisted_grading(pgl2, qs, IntVec{Int(1)});
  for (const Rat& nu : {Rat(0), Rat(1, 2)}) {
    VerifyReport rp = verify_identity(pp, make_torsion(pgl2, RatVec{nu}),
                                      compact, 30, 2, 1e-8);
    CHECK(rp.supported);
    CHECK(rp.pass);
  }
}
