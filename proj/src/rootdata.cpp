#include "lpackets/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lpk {

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// solve A c = b exactly (A square nonsingular), Gaussian elimination over Q
RatVec solve_rat(std::vector<RatVec> A, RatVec b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    Rat p = A[col][col];
    for (std::size_t j = 0; j < n; ++j) A[col][j] /= p;
    b[col] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (std::size_t j = 0; j < n; ++j) A[r][j] -= f * A[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// coefficients of r in the basis of simple roots
RatVec simple_coeffs(const BasedRootDatum& d, const IntVec& r) {
  std::size_t n = d.rank;
  std::vector<RatVec> A(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rat(d.roots[d.simple[j]][i]);
  return solve_rat(A, to_rat(r));
}

struct RootClosure {
  std::vector<IntVec> roots, coroots;
};

RootClosure close_roots(int rank, const std::vector<IntVec>& simple,
                        const std::vector<IntVec>& simple_co) {
  std::map<IntVec, IntVec> found;
  std::vector<std::pair<IntVec, IntVec>> frontier;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    found[simple[i]] = simple_co[i];
    frontier.emplace_back(simple[i], simple_co[i]);
  }
  while (!frontier.empty()) {
    std::vector<std::pair<IntVec, IntVec>> next;
    for (const auto& [b, bc] : frontier) {
      for (std::size_t i = 0; i < simple.size(); ++i) {
        Int p = pair_int(b, simple_co[i]);
        Int p2 = pair_int(simple[i], bc);
        IntVec r2(rank), c2(rank);
        for (int k = 0; k < rank; ++k) {
          r2[k] = b[k] - p * simple[i][k];
          c2[k] = bc[k] - p2 * simple_co[i][k];
        }
        if (!found.count(r2)) {
          found[r2] = c2;
          next.emplace_back(r2, c2);
        }
      }
    }
    frontier = std::move(next);
  }
  RootClosure out;
  for (const auto& [r, c] : found) {
    out.roots.push_back(r);
    out.coroots.push_back(c);
  }
  return out;
}

BasedRootDatum from_cartan(int rank, const std::vector<std::vector<int>>& A,
                           bool adjoint) {
  // sc: X^* spanned by fundamental weights, alpha_i = row i of A;
  // adj: X^* spanned by simple roots, alpha_j^vee = column j of A.
  std::vector<IntVec> simple(rank, IntVec(rank)), simple_co(rank, IntVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (adjoint) {
        simple[i][j] = (i == j) ? 1 : 0;
        simple_co[j][i] = A[i][j];
      } else {
        simple[i][j] = A[i][j];
        simple_co[i][j] = (i == j) ? 1 : 0;
      }
    }
  RootClosure cl = close_roots(rank, simple, simple_co);
  BasedRootDatum d;
  d.rank = rank;
  d.roots = cl.roots;
  d.coroots = cl.coroots;
  for (int i = 0; i < rank; ++i) d.simple.push_back(d.root_index(simple[i]));
  return d;
}

const std::map<std::string, std::vector<std::vector<int>>>& cartan_table() {
  static const std::map<std::string, std::vector<std::vector<int>>> t = {
      {"A1", {{2}}},
      {"A1xA1", {{2, 0}, {0, 2}}},
      {"B2", {{2, -2}, {-1, 2}}},
      {"C2", {{2, -1}, {-2, 2}}},
      {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
  };
  return t;
}

}  // namespace

int BasedRootDatum::root_index(const IntVec& r) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == r) return static_cast<int>(i);
  return -1;
}

ValidationReport validate(const BasedRootDatum& d) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  if (d.roots.size() != d.coroots.size())
    fail("roots and coroots have different lengths");
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (static_cast<int>(d.roots[i].size()) != d.rank ||
        static_cast<int>(d.coroots[i].size()) != d.rank)
      fail("root/coroot of wrong dimension at index " + std::to_string(i));
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (pair_int(d.roots[i], d.coroots[i]) != 2)
      fail("<alpha, alpha^vee> != 2 for root " + vec_str(d.roots[i]));
  for (int si : d.simple)
    if (si < 0 || si >= static_cast<int>(d.roots.size()))
      fail("simple index out of range");
  if (!rep.ok) return rep;
  if (static_cast<int>(d.simple.size()) != d.rank)
    fail("expected rank-many simple roots");
  // simple roots linearly independent: Gram-style determinant over Q
  if (rep.ok && d.rank > 0 && static_cast<int>(d.simple.size()) == d.rank) {
    IntMatrix s(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) s.at(i, j) = d.roots[d.simple[i]][j];
    IntMatrix sc(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) sc.at(i, j) = d.coroots[d.simple[i]][j];
    if (s.det() == 0) fail("simple roots linearly dependent");
    if (sc.det() == 0) fail("simple coroots linearly dependent");
    // Cartan matrix sanity
    for (int i = 0; i < d.rank && rep.ok; ++i)
      for (int j = 0; j < d.rank; ++j) {
        Int c = pair_int(d.roots[d.simple[i]], d.coroots[d.simple[j]]);
        if (i == j && c != 2) fail("Cartan diagonal entry != 2");
        if (i != j && c > 0)
          fail("positive off-diagonal Cartan entry at (" + std::to_string(i) +
               "," + std::to_string(j) + ")");
      }
  }
  if (!rep.ok) return rep;
  // closure under simple reflections, matched on the coroot side
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    for (int s : d.simple) {
      Int p = pair_int(d.roots[i], d.coroots[s]);
      IntVec img(d.rank);
      for (int k = 0; k < d.rank; ++k)
        img[k] = d.roots[i][k] - p * d.roots[s][k];
      int idx = d.root_index(img);
      if (idx < 0) {
        fail("root set not closed under s_" + vec_str(d.roots[s]) + " at " +
             vec_str(d.roots[i]));
        continue;
      }
      Int p2 = pair_int(d.roots[s], d.coroots[i]);
      IntVec cimg(d.rank);
      for (int k = 0; k < d.rank; ++k)
        cimg[k] = d.coroots[i][k] - p2 * d.coroots[s][k];
      if (d.coroots[idx] != cimg)
        fail("coroot of reflected root mismatched at " + vec_str(d.roots[i]));
    }
  if (!rep.ok) return rep;
  // every root is a nonneg or nonpos combination of the simple roots
  for (const IntVec& r : d.roots) {
    RatVec c = simple_coeffs(d, r);
    bool pos = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
    bool neg = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x <= 0; });
    if (!pos && !neg)
      fail("root " + vec_str(r) + " has mixed simple-root coefficients");
  }
  return rep;
}

void require_valid(const BasedRootDatum& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok) {
    std::string msg = "invalid root datum:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw Error(msg);
  }
}

BasedRootDatum dual(const BasedRootDatum& d) {
  BasedRootDatum out;
  out.rank = d.rank;
  out.roots = d.coroots;
  out.coroots = d.roots;
  out.simple = d.simple;
  return out;
}

BasedRootDatum make_datum(const std::string& name) {
  std::string fam = name, iso = "sc";
  if (auto pos = name.find('-'); pos != std::string::npos) {
    fam = name.substr(0, pos);
    iso = name.substr(pos + 1);
  }
  auto it = cartan_table().find(fam);
  if (it == cartan_table().end() || (iso != "sc" && iso != "adj"))
    throw Error("unknown group '" + name + "'");
  BasedRootDatum d =
      from_cartan(static_cast<int>(it->second.size()), it->second, iso == "adj");
  d.name = fam + "-" + iso;
  return d;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [fam, _] : cartan_table()) {
    out.push_back(fam + "-sc");
    out.push_back(fam + "-adj");
  }
  return out;
}

RatVec WeylElement::act_coweight(const RatVec& y) const {
  RatVec out(y.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += Rat(m.at(i, j)) * y[j];
  return out;
}

IntVec WeylElement::act_coweight(const IntVec& y) const { return m * y; }

RatVec WeylElement::act_weight(const RatVec& x) const {
  // (m^-1)^T x, so that <w x, w y> = <x, y>
  RatVec out(x.size());
  for (std::size_t i = 0; i < minv.cols; ++i)
    for (std::size_t j = 0; j < minv.rows; ++j)
      out[i] += Rat(minv.at(j, i)) * x[j];
  return out;
}

std::vector<double> WeylElement::act_point(const std::vector<double>& t) const {
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out[i] += m.at(i, j).convert_to<double>() * t[j];
  return out;
}

WeylElement weyl_identity(const BasedRootDatum& d) {
  WeylElement e;
  e.m = IntMatrix::identity(d.rank);
  e.minv = e.m;
  return e;
}

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.m = a.m * b.m;
  c.minv = b.minv * a.minv;
  c.length = -1;  // unknown until looked up
  c.sign = a.sign * b.sign;
  return c;
}

WeylElement weyl_inverse(const WeylElement& w) {
  WeylElement c;
  c.m = w.minv;
  c.minv = w.m;
  c.length = w.length;
  c.sign = w.sign;
  return c;
}

WeylElement reflection(const BasedRootDatum& d, int root_index) {
  int n = d.rank;
  const IntVec& r = d.roots[root_index];
  const IntVec& c = d.coroots[root_index];
  WeylElement s;
  s.m = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.m.at(i, j) = (i == j ? Int(1) : Int(0)) - c[i] * r[j];
  s.minv = s.m;
  s.length = 1;
  s.sign = -1;
  return s;
}

std::vector<WeylElement> weyl_group(const BasedRootDatum& d,
                                    std::size_t bound) {
  std::vector<WeylElement> gens;
  for (int si : d.simple) gens.push_back(reflection(d, si));
  std::map<std::vector<Int>, std::pair<int, IntMatrix>> seen;  // m -> (len, minv)
  WeylElement e = weyl_identity(d);
  seen[e.m.a] = {0, e.minv};
  std::vector<WeylElement> frontier{e};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (const WeylElement& s : gens) {
        WeylElement w2 = weyl_compose(s, w);
        if (!seen.count(w2.m.a)) {
          w2.length = seen[w.m.a].first + 1;
          seen[w2.m.a] = {w2.length, w2.minv};
          next.push_back(w2);
          if (seen.size() > bound) throw Error("Weyl group bound exceeded");
        }
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& [ma, info] : seen) {
    WeylElement w;
    w.m = IntMatrix(d.rank, d.rank);
    w.m.a = ma;
    w.minv = info.second;
    w.length = info.first;
    w.sign = (info.first % 2 == 0) ? 1 : -1;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.m.a < b.m.a;
  });
  return out;
}

bool is_regular(const BasedRootDatum& d, const RatVec& weight) {
  for (const IntVec& c : d.coroots)
    if (pair(weight, c) == 0) return false;
  return true;
}

PositiveSystem chamber_of(const BasedRootDatum& d, const RatVec& weight) {
  PositiveSystem pos;
  pos.witness = weight;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    Rat p = pair(weight, d.coroots[i]);
    if (p == 0)
      throw Error("irregular weight: vanishes on coroot " +
                  vec_str(d.coroots[i]));
    if (p > 0) pos.roots.push_back(static_cast<int>(i));
  }
  return pos;
}

PositiveSystem based_system(const BasedRootDatum& d) {
  // positives = nonneg combinations of the simple roots; the witness is rho
  PositiveSystem pos;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    RatVec c = simple_coeffs(d, d.roots[i]);
    if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; }))
      pos.roots.push_back(static_cast<int>(i));
  }
  pos.witness = rho(d, pos);
  return pos;
}

std::vector<int> simple_of_system(const BasedRootDatum& d,
                                  const PositiveSystem& pos) {
  std::vector<int> out;
  for (int i : pos.roots) {
    bool decomposable = false;
    for (int j : pos.roots) {
      if (j == i) continue;
      IntVec diff(d.rank);
      for (int k = 0; k < d.rank; ++k) diff[k] = d.roots[i][k] - d.roots[j][k];
      int idx = d.root_index(diff);
      if (idx >= 0 &&
          std::find(pos.roots.begin(), pos.roots.end(), idx) != pos.roots.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(i);
  }
  return out;
}

RatVec rho(const BasedRootDatum& d, const PositiveSystem& pos) {
  RatVec r(d.rank, Rat(0));
  for (int i : pos.roots) r = vadd(r, to_rat(d.roots[i]));
  return smul(Rat(1, 2), r);
}

RatVec rho_check(const BasedRootDatum& d, const PositiveSystem& pos) {
  RatVec r(d.rank, Rat(0));
  for (int i : pos.roots) r = vadd(r, to_rat(d.coroots[i]));
  return smul(Rat(1, 2), r);
}

RatVec mod_lattice(const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int fl = numerator(v[i]) / denominator(v[i]);
    if (v[i] < 0 && fl * denominator(v[i]) != numerator(v[i])) fl -= 1;
    out[i] = v[i] - Rat(fl);
  }
  return out;
}

OrbitStabilizer orbit_and_stabilizer(const std::vector<WeylElement>& group,
                                     const RatVec& point) {
  OrbitStabilizer os;
  RatVec base = mod_lattice(point);
  std::set<RatVec> seen;
  for (std::size_t i = 0; i < group.size(); ++i) {
    RatVec img = mod_lattice(group[i].act_coweight(point));
    if (img == base) os.stabilizer.push_back(i);
    if (seen.insert(img).second) os.orbit.push_back(img);
  }
  std::sort(os.orbit.begin(), os.orbit.end());
  return os;
}

}  // namespace lpk
