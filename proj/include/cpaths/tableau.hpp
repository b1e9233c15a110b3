#pragma once

#include <utility>
#include <vector>

#include "cpaths/partition.hpp"
#include "cpaths/poly.hpp"

namespace cpaths {

// Semistandard Young tableau: rows weakly increasing, columns strictly
// increasing. Rows are stored top to bottom.
struct Ssyt {
  std::vector<Word> rows;

  Partition shape() const;
  long long size() const;
  Composition content(int nletters = 0) const;
  bool is_valid() const;
  bool operator==(const Ssyt& o) const { return rows == o.rows; }
  std::string to_text() const;  // "[[1,1,4],[2,3,5]]"
};

Ssyt parse_ssyt(const std::string& s);

// Schensted row insertion of a single letter; returns the cell (row, col)
// where the new node was created (0-based).
std::pair<int, int> row_insert_letter(Ssyt& t, int x);

// (t <- w), letters of w inserted left to right.
Ssyt row_insert(Ssyt t, const Word& w);

// Inverse bumping starting from an outer corner (0-based coordinates).
// Returns the ejected letter; t shrinks by one cell.
int inverse_bump(Ssyt& t, int row, int col);

// Ragged filling with prescribed row lengths; rows stored top to bottom.
struct Tabloid {
  std::vector<Word> rows;

  Composition shape() const;
  Composition weight(int nletters = 0) const;
  bool row_weakly_increasing() const;
  bool operator==(const Tabloid& o) const { return rows == o.rows; }
  std::string to_text() const;
};

// Reading word: right to left within each row, rows top to bottom.
Word reading_word(const Tabloid& t);

struct TransportationMatrix {
  std::vector<std::vector<int>> m;  // rows x cols

  Composition row_sums() const;
  Composition col_sums() const;
  bool operator==(const TransportationMatrix& o) const { return m == o.m; }
};

// Row i of the tabloid is 1^{m_i1} 2^{m_i2} ... n^{m_in}.
Tabloid tabloid_from_matrix(const TransportationMatrix& m);
TransportationMatrix matrix_from_tabloid(const Tabloid& t, int ncols);

// All matrices with the given margins.
std::vector<TransportationMatrix> enumerate_matrices(const Composition& alpha,
                                                     const Composition& beta);

// RSK applied to the biword of the matrix ((i,j) with multiplicity m[i][j],
// sorted lexicographically; j's inserted, i's recorded).
std::pair<Ssyt, Ssyt> rsk(const TransportationMatrix& m);

// Gelfand-Tsetlin pattern: rows[k] (0-based) is the shape of the
// restriction of the tableau to letters <= k+1, zero-padded to length k+1.
struct GTPattern {
  std::vector<std::vector<int>> rows;
  bool interlaces() const;
};

GTPattern gt_from_ssyt(const Ssyt& t, int nletters);

// Weakly decreasing (in rows and columns) filling; trailing zeros trimmed.
struct PlanePartition {
  std::vector<std::vector<int>> rows;
  long long size() const;
  bool is_valid() const;
  bool operator==(const PlanePartition& o) const { return rows == o.rows; }
};

// Glue the GT patterns of p and q (equal shapes) along the common diagonal.
PlanePartition plane_partition_from_pair(const Ssyt& p, const Ssyt& q);

// Sum of q^{|pi|} over plane partitions inside the l x m x n box, by direct
// enumeration.
QPoly macmahon_count(int l, int m, int n);
// MacMahon's product formula for the same box.
QPoly macmahon_product(int l, int m, int n);

// All SSYT of the given shape and content.
std::vector<Ssyt> enumerate_ssyt(const Partition& shape,
                                 const Composition& weight);

}  // namespace cpaths
