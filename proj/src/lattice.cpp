#include "lpackets/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace lpk {

Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw Error("bad rational '" + s + "'"); };
  std::string p = s, q = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    p = s.substr(0, pos);
    q = s.substr(pos + 1);
  }
  if (p.empty() || q.empty()) bad();
  auto digits = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(p) || !digits(q)) bad();
  Int num(p), den(q);
  if (den == 0) throw Error("bad rational '" + s + "': zero denominator");
  return Rat(num, den);
}

std::string rational_str(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMatrix();
  IntMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows) throw Error("ragged matrix");
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw Error("matrix product: size mismatch");
  IntMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols != v.size()) throw Error("matrix-vector product: size mismatch");
  IntVec r(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMatrix::det() const {
  if (rows != cols) throw Error("det: not square");
  std::size_t n = rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < a.cols; ++k) a.at(dst, k) += c * a.at(src, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(dst, k) += c * u.at(src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < a.rows; ++k) a.at(k, dst) += c * a.at(k, src);
    for (std::size_t k = 0; k < v.rows; ++k) v.at(k, dst) += c * v.at(k, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: nonzero entry of least absolute value in the remaining block
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < w.a.rows; ++i)
        for (std::size_t j = t; j < w.a.cols; ++j)
          if (w.a.at(i, j) != 0 &&
              (!found || abs(w.a.at(i, j)) < abs(w.a.at(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) goto done;
      if (pi != t) w.swap_rows(t, pi);
      if (pj != t) w.swap_cols(t, pj);
      if (w.a.at(t, t) < 0) w.negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < w.a.rows; ++i)
        if (w.a.at(i, t) != 0) {
          w.add_row(i, t, -(w.a.at(i, t) / w.a.at(t, t)));
          if (w.a.at(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < w.a.cols; ++j)
        if (w.a.at(t, j) != 0) {
          w.add_col(j, t, -(w.a.at(t, j) / w.a.at(t, t)));
          if (w.a.at(t, j) != 0) clean = false;
        }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < w.a.rows && divides; ++i)
        for (std::size_t j = t + 1; j < w.a.cols && divides; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
done:
  return {w.u, w.a, w.v};
}

Int FiniteAbelianGroup::order() const {
  if (free_rank != 0) throw Error("infinite quotient has no order");
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

IntVec FiniteAbelianGroup::project(const IntVec& v) const {
  if (v.size() != ambient_rank) throw Error("project: size mismatch");
  IntVec w = u * v;
  IntVec out;
  out.reserve(torsion_rows.size());
  for (std::size_t r : torsion_rows) out.push_back(mod_pos(w[r], diag[r]));
  return out;
}

FiniteAbelianGroup quotient_group(std::size_t ambient_rank,
                                  const IntMatrix& gens) {
  if (gens.rows != ambient_rank && !(gens.rows == 0 && gens.cols == 0))
    throw Error("quotient_group: generator rows must match ambient rank");
  IntMatrix g = gens;
  if (g.rows == 0) {
    g = IntMatrix(ambient_rank, 0);
  }
  SmithDecomposition snf = smith_normal_form(g);
  FiniteAbelianGroup q;
  q.ambient_rank = ambient_rank;
  q.u = snf.u;
  q.diag.assign(ambient_rank, Int(0));
  std::size_t k = std::min(snf.d.rows, snf.d.cols);
  for (std::size_t i = 0; i < k; ++i) q.diag[i] = snf.d.at(i, i);
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (q.diag[i] == 0)
      ++q.free_rank;
    else if (q.diag[i] > 1) {
      q.invariant_factors.push_back(q.diag[i]);
      q.torsion_rows.push_back(i);
    }
  }
  return q;
}

}  // namespace lpk
