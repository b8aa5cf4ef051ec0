#include <doctest.h>

#include "lpackets/oracle.hpp"

using namespace lpk;

TEST_CASE("Q(i) and Mat2 arithmetic") {
  GaussRat i(Rat(0), Rat(1));
  CHECK(i * i == GaussRat(Rat(-1), Rat(0)));
  CHECK(i.inv() == GaussRat(Rat(0), Rat(-1)));
  CHECK(i.conj() == i.inv());
  Mat2 m{GaussRat(Rat(1), Rat(0)), GaussRat(Rat(2), Rat(0)),
         GaussRat(Rat(0), Rat(0)), GaussRat(Rat(1), Rat(0))};
  CHECK(m * m.inv() == Mat2::identity());
}

TEST_CASE("oracle H^1 orders") {
  CHECK(oracle_h1_order(make_model(OracleFamily::SL2, OracleForm::Split)) == 2);
  CHECK(oracle_h1_order(make_model(OracleFamily::PGL2, OracleForm::Split)) == 2);
  CHECK(oracle_h1_order(make_model(OracleFamily::SL2, OracleForm::Compact)) == 2);
}

TEST_CASE("oracle real Weyl groups") {
  // SL2(R) with SO(2): no real flip; SU(2) and PGL2(R): flip is real
  CHECK(oracle_real_weyl_order(make_model(OracleFamily::SL2, OracleForm::Split)) == 1);
  CHECK(oracle_real_weyl_order(make_model(OracleFamily::SL2, OracleForm::Compact)) == 2);
  CHECK(oracle_real_weyl_order(make_model(OracleFamily::PGL2, OracleForm::Split)) == 2);
}

TEST_CASE("oracle inv classes") {
  MatrixGroupModel sl2 = make_model(OracleFamily::SL2, OracleForm::Split);
  CHECK(oracle_inv(sl2, 0).reduced() == IntVec{Int(0)});
  CHECK(oracle_inv(sl2, 1).reduced() == IntVec{Int(1)});  // alpha^vee mod 2
  MatrixGroupModel pgl2 = make_model(OracleFamily::PGL2, OracleForm::Split);
  CHECK(oracle_inv(pgl2, 0).reduced() == IntVec{Int(0)});
  CHECK(oracle_inv(pgl2, 1).reduced() == IntVec{Int(0)});  // 2 omega^vee = 0
}

TEST_CASE("oracle suite matches the combinatorial modules") {
  for (const std::string& family : {"A1-sc", "A1-adj"}) {
    OracleReport rep = run_oracle(family);
    INFO(family);
    CHECK(rep.all_match);
    for (const OracleRow& row : rep.rows) {
      INFO(row.quantity);
      CHECK(row.match);
    }
  }
  CHECK_THROWS_AS(run_oracle("G2-sc"), Error);
}

TEST_CASE("the falsification flag trips on a synthetic mismatch") {
  OracleReport rep = run_oracle("A1-sc");
  CHECK(rep.all_match);
  OracleRow bogus{"synthetic", "1", "2", false};
  rep.rows.push_back(bogus);
  rep.all_match = rep.all_match && bogus.match;
  CHECK(!rep.all_match);
}
