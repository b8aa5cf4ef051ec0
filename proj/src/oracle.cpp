#include "lpackets/oracle.hpp"

#include <sstream>

#include "lpackets/packets.hpp"

namespace lpk {

GaussRat GaussRat::inv() const {
  Rat n = re * re + im * im;
  if (n == 0) throw Error("division by zero in Q(i)");
  return {re / n, -im / n};
}

Mat2 Mat2::identity() {
  Mat2 m;
  m.a = GaussRat::one();
  m.d = GaussRat::one();
  return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  r.a = a * o.a + b * o.c;
  r.b = a * o.b + b * o.d;
  r.c = c * o.a + d * o.c;
  r.d = c * o.b + d * o.d;
  return r;
}

Mat2 Mat2::conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }

GaussRat Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::inv() const {
  GaussRat di = det().inv();
  return {d * di, (GaussRat() - b) * di, (GaussRat() - c) * di, a * di};
}

Mat2 MatrixGroupModel::sigma(const Mat2& g) const {
  return b * g.conj() * b.inv();
}

bool MatrixGroupModel::equal(const Mat2& x, const Mat2& y) const {
  if (x == y) return true;
  if (!projective) return false;
  Mat2 neg = y;
  GaussRat m1(Rat(-1), Rat(0));
  neg.a = neg.a * m1;
  neg.b = neg.b * m1;
  neg.c = neg.c * m1;
  neg.d = neg.d * m1;
  return x == neg;
}

MatrixGroupModel make_model(OracleFamily family, OracleForm form) {
  MatrixGroupModel m;
  m.family = family;
  m.form = form;
  m.projective = (family == OracleFamily::PGL2);
  if (form == OracleForm::Split) {
    // SL2(R) with compact torus, diagonalized: sigma(g) = A conj(g) A^{-1},
    // A = antidiag(1,1)
    m.b = Mat2{GaussRat(), GaussRat::one(), GaussRat::one(), GaussRat()};
  } else {
    // SU(2): sigma(g) = (conj(g)^T)^{-1} = J conj(g) J^{-1},
    // J = [[0,-1],[1,0]]
    m.b = Mat2{GaussRat(), GaussRat(Rat(-1), Rat(0)), GaussRat::one(),
               GaussRat()};
  }
  return m;
}

namespace {

// flip representative in N(S) realizing s_alpha on the diagonal torus
Mat2 flip() {
  return Mat2{GaussRat(), GaussRat::one(), GaussRat(Rat(-1), Rat(0)),
              GaussRat()};
}

Mat2 torus_elt(const GaussRat& z) {
  return Mat2{z, GaussRat(), GaussRat(), z.inv()};
}

// the coset n * S(C) contains a real point iff c_n = n^{-1} sigma(n),
// which lies in S(C), is in the image of s -> s sigma(s)^{-1}. On the
// diagonal coordinate that image is the positive reals.
bool coset_has_real_point(const MatrixGroupModel& model, const Mat2& n) {
  Mat2 cn = n.inv() * model.sigma(n);
  if (!cn.b.is_zero() || !cn.c.is_zero())
    throw Error("oracle: sigma does not stabilize the flip coset");
  GaussRat z = cn.a;
  if (model.projective) {
    // adjoint coordinate is alpha(s) = z^2
    z = z * z;
  }
  return z.im == 0 && z.re > 0;
}

}  // namespace

Int oracle_h1_order(const MatrixGroupModel& model) {
  // Torsion points of order <= 8 sit at angles k/8 in the native torus
  // coordinate. Determine sigma's action on angles exactly from the model
  // (at the order-4 matrix point), then enumerate cocycles z sigma(z) = 1
  // and quotient by the torsion coboundaries b sigma(b)^{-1}.
  Mat2 zi = torus_elt(GaussRat(Rat(0), Rat(1)));  // angle 1/4
  int eps;
  if (model.equal(model.sigma(zi), zi))
    eps = 1;
  else if (model.equal(model.sigma(zi), zi.inv()))
    eps = -1;
  else
    throw Error("oracle: unexpected sigma action on the torus");

  std::vector<int> cocycles;
  for (int k = 0; k < 8; ++k)
    if ((k + eps * k) % 8 == 0) cocycles.push_back(k);
  std::vector<int> cob;
  for (int k = 0; k < 8; ++k) cob.push_back(((k - eps * k) % 8 + 8) % 8);
  // count cocycle classes modulo the coboundary subgroup
  std::set<int> classes;
  for (int z : cocycles) {
    int rep = z;
    for (int b : cob) rep = std::min(rep, (((z + b) % 8) + 8) % 8);
    classes.insert(rep);
  }
  return Int(classes.size());
}

int oracle_real_weyl_order(const MatrixGroupModel& model) {
  return coset_has_real_point(model, flip()) ? 2 : 1;
}

CohomologyClassS oracle_inv(const MatrixGroupModel& model, int weyl_length) {
  if (weyl_length == 0) return CohomologyClassS{IntVec{Int(0)}};
  Mat2 n = flip();
  Mat2 cn = n.inv() * model.sigma(n);
  GaussRat z = cn.a;
  if (model.projective) z = z * z;  // adjoint coordinate
  if (z.im != 0 || (z.re != 1 && z.re != -1))
    throw Error("oracle: cocycle is not 2-torsion");
  // dictionary: cocycle exp(pi i m) -> class m * (basis coweight) mod 2
  return CohomologyClassS{IntVec{Int(z.re == 1 ? 0 : 1)}};
}

namespace {

std::string int_str(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string class_str(const CohomologyClassS& c) {
  std::ostringstream os;
  os << '(';
  IntVec r = c.reduced();
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

void add_row(OracleReport& rep, const std::string& what, const std::string& o,
             const std::string& c) {
  OracleRow row{what, o, c, o == c};
  rep.all_match = rep.all_match && row.match;
  rep.rows.push_back(std::move(row));
}

}  // namespace

OracleReport run_oracle(const std::string& family) {
  if (family != "A1-sc" && family != "A1-adj")
    throw Error("no oracle model for '" + family + "'");
  OracleFamily fam =
      family == "A1-sc" ? OracleFamily::SL2 : OracleFamily::PGL2;
  OracleReport rep;
  rep.family = family;

  BasedRootDatum d = make_datum(family);
  std::vector<WeylElement> w = weyl_group(d);
  PositiveSystem base = based_system(d);
  Grading qs = quasisplit_grading(d, base);
  Grading compact = custom_grading(d, RatVec(1, Rat(0)));

  MatrixGroupModel split = make_model(fam, OracleForm::Split);
  MatrixGroupModel cpt = make_model(fam, OracleForm::Compact);

  add_row(rep, "H1(Gamma,S) order", int_str(oracle_h1_order(split)),
          int_str(h1_of_torus(d).order()));
  add_row(rep, "real Weyl order (quasi-split form)",
          std::to_string(oracle_real_weyl_order(split)),
          std::to_string(real_weyl_group(d, w, qs).size()));
  add_row(rep, "real Weyl order (compact form)",
          std::to_string(oracle_real_weyl_order(cpt)),
          std::to_string(real_weyl_group(d, w, compact).size()));

  // inv classes for every Weyl element, against (rho^vee - u rho^vee) mod 2
  RatVec rc = rho_check(d, base);
  for (const WeylElement& u : w) {
    RatVec diff = vsub(rc, u.act_coweight(rc));
    IntVec lift(d.rank);
    for (int k = 0; k < d.rank; ++k) lift[k] = int_part(diff[k]);
    add_row(rep, "inv class of w (length " + std::to_string(u.length) + ")",
            class_str(oracle_inv(split, u.length)),
            class_str(CohomologyClassS{lift}));
  }
  return rep;
}

}  // namespace lpk
