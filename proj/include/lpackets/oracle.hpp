// Brute-force matrix-model ground truth for SL2 and PGL2, validating the
// combinatorial rules (real Weyl groups, H^1 orders, inv classes).
//
// Models live in SL2(C) with its diagonal torus; the real structure is
// sigma(g) = B conj(g) B^{-1}. Dictionary: the torus point with angle x
// is diag(z, z^{-1}), z = exp(2 pi i x), matching <omega, x alpha^vee> = x.
// All matrix arithmetic is exact over Q(i).

#ifndef LPACKETS_ORACLE_HPP_
#define LPACKETS_ORACLE_HPP_

#include "lpackets/realforms.hpp"

namespace lpk {

// exact Gaussian rational a + b i
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat one() { return {Rat(1), Rat(0)}; }

  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat conj() const { return {re, -im}; }
  GaussRat inv() const;
  bool operator==(const GaussRat& o) const = default;
  bool is_zero() const { return re == 0 && im == 0; }
};

struct Mat2 {
  GaussRat a, b, c, d;  // [[a,b],[c,d]]

  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  Mat2 conj() const;
  GaussRat det() const;
  Mat2 inv() const;
  bool operator==(const Mat2& o) const = default;
};

enum class OracleFamily { SL2, PGL2 };
enum class OracleForm { Split, Compact };  // SL2(R)/PGL2(R) vs SU(2)/SO(3)

struct MatrixGroupModel {
  OracleFamily family;
  OracleForm form;
  Mat2 b;  // sigma(g) = b conj(g) b^{-1}
  bool projective;  // compare mod the center {+-1}

  Mat2 sigma(const Mat2& g) const;
  bool equal(const Mat2& x, const Mat2& y) const;  // mod center if projective
};

MatrixGroupModel make_model(OracleFamily family, OracleForm form);

// cocycle enumeration over torsion points of order <= 8, modulo
// torsion coboundaries
Int oracle_h1_order(const MatrixGroupModel& model);

// order of N(S,G(R))/S(R): 1 or 2 in these models (rank 1)
int oracle_real_weyl_order(const MatrixGroupModel& model);

// class of n^{-1} sigma(n) in H^1(Gamma,S) = X_*/2X_* for the flip n;
// weyl_length selects the element (0 = identity, 1 = s_alpha)
CohomologyClassS oracle_inv(const MatrixGroupModel& model, int weyl_length);

// side-by-side comparison against the combinatorial modules
struct OracleRow {
  std::string quantity;
  std::string oracle_value;
  std::string combinatorial_value;
  bool match = false;
};

struct OracleReport {
  std::string family;
  std::vector<OracleRow> rows;
  bool all_match = true;
};

// family is "A1-sc" or "A1-adj"
OracleReport run_oracle(const std::string& family);

}  // namespace lpk

#endif  // LPACKETS_ORACLE_HPP_
