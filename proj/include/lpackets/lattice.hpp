// Exact integer linear algebra: Smith normal form and finite abelian
// quotients of Z^n. Everything here is exact; no floating point.

#ifndef LPACKETS_LATTICE_HPP_
#define LPACKETS_LATTICE_HPP_

#include "lpackets/common.hpp"

namespace lpk {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_cols(const std::vector<IntVec>& cols);

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transposed() const;
  Int det() const;  // fraction-free (Bareiss)
  bool operator==(const IntMatrix& o) const = default;
};

// U*M*V = D, U and V unimodular, D diagonal with d1 | d2 | ... (entries >= 0)
struct SmithDecomposition {
  IntMatrix u, d, v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Z^ambient / <columns of the generator matrix>, in invariant-factor form.
// Factors equal to 1 are dropped; a nonzero free_rank marks an infinite
// quotient (project() still reduces the torsion coordinates).
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., all > 1
  std::size_t free_rank = 0;
  std::size_t ambient_rank = 0;

  Int order() const;
  bool is_finite() const { return free_rank == 0; }
  // residue tuple of an ambient vector, one entry per invariant factor
  IntVec project(const IntVec& v) const;

  // internals of the projection: row transform and full SNF diagonal
  IntMatrix u;
  std::vector<Int> diag;  // length = ambient_rank, 0 marks a free coordinate
  std::vector<std::size_t> torsion_rows;  // rows of u with diag > 1
};

FiniteAbelianGroup quotient_group(std::size_t ambient_rank,
                                  const IntMatrix& sublattice_generators);

}  // namespace lpk

#endif  // LPACKETS_LATTICE_HPP_
