#include <doctest.h>

#include <set>

#include "lpackets/rootdata.hpp"

using namespace lpk;

namespace {

Int root_lattice_index(const BasedRootDatum& d) {
  // [X^* : Q] via the quotient by the simple roots
  std::vector<IntVec> cols;
  for (int si : d.simple) cols.push_back(d.roots[si]);
  FiniteAbelianGroup q = quotient_group(d.rank, IntMatrix::from_cols(cols));
  return q.is_finite() ? q.order() : Int(-1);
}

}  // namespace

TEST_CASE("builtin data validate") {
  for (const std::string& name :
       {"A1-sc", "A1-adj", "A1xA1-sc", "B2-sc", "B2-adj", "C2-sc", "C2-adj",
        "C3-sc", "G2-sc", "G2-adj"}) {
    BasedRootDatum d = make_datum(name);
    ValidationReport rep = validate(d);
    INFO(name);
    CHECK(rep.ok);
  }
  CHECK_THROWS_AS(make_datum("E8-sc"), Error);
}

TEST_CASE("invalid pairing is rejected") {
  BasedRootDatum d;
  d.rank = 1;
  d.roots = {{Int(3)}, {Int(-3)}};
  d.coroots = {{Int(1)}, {Int(-1)}};
  d.simple = {0};
  ValidationReport rep = validate(d);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("dual swaps lattices; involution; index check") {
  BasedRootDatum sl2 = make_datum("A1-sc");
  BasedRootDatum pgl2_like = dual(sl2);
  CHECK(validate(pgl2_like).ok);
  // SL2: weight lattice strictly bigger than root lattice; dual side not
  CHECK(root_lattice_index(sl2) == 2);
  CHECK(root_lattice_index(pgl2_like) == 1);
  BasedRootDatum again = dual(pgl2_like);
  CHECK(again.roots == sl2.roots);
  CHECK(again.coroots == sl2.coroots);

  // simply connected <-> adjoint swap of center orders, e.g. C2
  CHECK(root_lattice_index(make_datum("C2-sc")) == 2);
  CHECK(root_lattice_index(make_datum("C2-adj")) == 1);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_group(make_datum("A1-sc")).size() == 2);
  CHECK(weyl_group(make_datum("A1xA1-sc")).size() == 4);
  CHECK(weyl_group(make_datum("B2-sc")).size() == 8);
  CHECK(weyl_group(make_datum("C2-sc")).size() == 8);
  CHECK(weyl_group(make_datum("G2-sc")).size() == 12);
  CHECK(weyl_group(make_datum("C3-sc")).size() == 48);
  CHECK_THROWS_AS(weyl_group(make_datum("C3-sc"), 10), Error);
}

TEST_CASE("weyl elements permute the coroots; sign is a character") {
  for (const std::string& name : {"C2-sc", "G2-sc"}) {
    BasedRootDatum d = make_datum(name);
    std::vector<WeylElement> w = weyl_group(d);
    std::set<IntVec> coroots(d.coroots.begin(), d.coroots.end());
    for (const WeylElement& e : w) {
      for (const IntVec& c : d.coroots) CHECK(coroots.count(e.act_coweight(c)));
      CHECK(e.sign == (e.m.det() == 1 ? 1 : -1));
    }
    for (std::size_t i = 0; i < w.size(); i += 3)
      for (std::size_t j = 0; j < w.size(); j += 2) {
        WeylElement p = weyl_compose(w[i], w[j]);
        CHECK(p.m.det() == w[i].sign * w[j].sign);
      }
  }
}

TEST_CASE("rho examples") {
  BasedRootDatum a1 = make_datum("A1-sc");
  PositiveSystem base = based_system(a1);
  CHECK(rho(a1, base) == RatVec{Rat(1)});  // omega = alpha/2

  BasedRootDatum c2 = make_datum("C2-sc");
  PositiveSystem bc2 = based_system(c2);
  RatVec r = rho(c2, bc2);
  for (int si : c2.simple) CHECK(pair(r, c2.coroots[si]) == 1);

  BasedRootDatum g2 = make_datum("G2-sc");
  PositiveSystem bg2 = based_system(g2);
  RatVec rg = rho(g2, bg2);
  for (int i : bg2.roots) {
    Rat p = pair(rg, g2.coroots[i]);
    CHECK(p >= 1);
    CHECK(p <= 5);
  }
}

TEST_CASE("rho - w(rho) is a sum of roots (integral weight)") {
  BasedRootDatum d = make_datum("C2-sc");
  PositiveSystem base = based_system(d);
  RatVec r = rho(d, base);
  for (const WeylElement& e : weyl_group(d)) {
    RatVec diff = vsub(r, e.act_weight(r));
    for (const Rat& x : diff) CHECK(is_integral(x));
  }
}

TEST_CASE("orbit and stabilizer") {
  BasedRootDatum a1 = make_datum("A1-sc");
  std::vector<WeylElement> w = weyl_group(a1);
  OrbitStabilizer os = orbit_and_stabilizer(w, RatVec{Rat(1, 4)});
  CHECK(os.orbit == std::vector<RatVec>{{Rat(1, 4)}, {Rat(3, 4)}});
  CHECK(os.stabilizer.size() == 1);  // identity only

  OrbitStabilizer zero = orbit_and_stabilizer(w, RatVec{Rat(0)});
  CHECK(zero.orbit.size() == 1);
  CHECK(zero.stabilizer.size() == w.size());

  BasedRootDatum c2 = make_datum("C2-sc");
  std::vector<WeylElement> wc = weyl_group(c2);
  PositiveSystem base = based_system(c2);
  RatVec pt = smul(Rat(1, 4), rho_check(c2, base));
  OrbitStabilizer oc = orbit_and_stabilizer(wc, pt);
  CHECK(oc.orbit.size() * oc.stabilizer.size() == wc.size());
  CHECK(oc.orbit.size() == 8);
}

TEST_CASE("chamber and regularity") {
  BasedRootDatum a1 = make_datum("A1-sc");
  PositiveSystem pos = chamber_of(a1, RatVec{Rat(1)});
  CHECK(pos.roots.size() == 1);
  CHECK(a1.roots[pos.roots[0]] == IntVec{Int(2)});
  CHECK(!is_regular(a1, RatVec{Rat(0)}));
  CHECK_THROWS_AS(chamber_of(a1, RatVec{Rat(0)}), Error);

  BasedRootDatum c2 = make_datum("C2-sc");
  PositiveSystem base = based_system(c2);
  RatVec lam = vadd(rho(c2, base), RatVec{Rat(1), Rat(0)});
  CHECK(is_regular(c2, lam));
  PositiveSystem ch = chamber_of(c2, lam);
  CHECK(ch.roots == base.roots);
  for (int i : ch.roots) CHECK(pair(lam, c2.coroots[i]) >= 1);
}

TEST_CASE("simple roots of translated systems") {
  BasedRootDatum c2 = make_datum("C2-sc");
  PositiveSystem base = based_system(c2);
  std::vector<int> s = simple_of_system(c2, base);
  std::set<int> want(c2.simple.begin(), c2.simple.end());
  CHECK(std::set<int>(s.begin(), s.end()) == want);
  // every W-translate again has rank-many simples
  for (const WeylElement& e : weyl_group(c2)) {
    PositiveSystem ch = chamber_of(c2, e.act_weight(base.witness));
    CHECK(simple_of_system(c2, ch).size() == 2);
  }
}
