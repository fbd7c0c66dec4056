#pragma once

// Exact sparse linear algebra used by the homology engines: integer
// fraction-free elimination for ranks over Q, bit rows over the two-element
// field, prefix nullity profiles and bottom-pivot profiles for filtration
// bookkeeping.

#include <cstdint>
#include <vector>

#include "trisym/bigint.hpp"

namespace trisym::linalg {

struct Entry {
  int row;
  long long val;
};

// Column-major sparse integer matrix.
struct SparseMat {
  int rows = 0;
  std::vector<std::vector<Entry>> cols;

  void add_entry(int col, int row, long long v) {
    if ((int)cols.size() <= col) cols.resize(col + 1);
    cols[col].push_back({row, v});
  }
  int col_count() const { return (int)cols.size(); }
};

// Big-integer sparse column, kept sorted by row.
using BigCol = std::vector<std::pair<int, BigInt>>;

BigCol to_bigcol(const std::vector<Entry>& c);

// col -= (col[pivot_row]/piv[pivot_row]) * piv via cross multiplication and a
// gcd strip; piv must contain pivot_row.
void eliminate(BigCol& col, const BigCol& piv, int pivot_row);

// Rank over Q.
int rank_q(const SparseMat& m);

// Rank over the two-element field.
int rank_f2(const SparseMat& m);

// Nullity profile: entry k = nullity of the submatrix made of the first k
// columns (k = 0..ncols), columns processed in the given order.
std::vector<int> prefix_nullities(const SparseMat& m);

// Echelonize columns pivoting on the LARGEST row index; returns the sorted
// list of pivot rows.  Used to count column-space vectors supported in a
// prefix of the rows.
std::vector<int> bottom_pivot_rows(const SparseMat& m);

// Echelon basis of the column space, pivots on the SMALLEST row index,
// fully reduced (each basis column is zero at every other pivot row).
struct Echelon {
  std::vector<BigCol> basis;
  std::vector<int> pivot_rows;  // parallel to basis
};
Echelon column_echelon_min_pivot(const SparseMat& m);

// Fully reduce v against the echelon basis; afterwards v has no support on
// any pivot row.
void reduce_vector(BigCol& v, const Echelon& ech);

}  // namespace trisym::linalg
