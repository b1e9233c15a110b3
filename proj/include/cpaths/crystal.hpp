#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpaths/tableau.hpp"

namespace cpaths {

// One element of B^{r,s}: a semistandard tableau of rectangular shape
// (s^r) over the alphabet {1..n+1}.
struct RectTableau {
  int r = 0;
  int s = 0;
  Ssyt t;

  bool is_valid(int nletters) const;
  bool operator==(const RectTableau& o) const {
    return r == o.r && s == o.s && t == o.t;
  }
  bool operator<(const RectTableau& o) const { return t.rows < o.t.rows; }
  // Row word: rows concatenated bottom to top, each left to right.
  Word row_word() const;
  // Reading word used by the tensor-product signature rule: columns right
  // to left, each column top to bottom.
  Word japanese_word() const;
  std::string to_text() const { return t.to_text(); }
};

// Highest element u^{(r)}_s: row i filled with letter i.
RectTableau highest_rect(int r, int s);
RectTableau rect_from_ssyt(const Ssyt& t);

// All of B^{r,s} over the alphabet {1..nletters}.
std::vector<RectTableau> crystal_elements(int r, int s, int nletters);

// Ordered tensor product of rectangular factors with a fixed alphabet
// bound (letters 1..nletters).
struct TensorPath {
  std::vector<RectTableau> factors;
  int nletters = 0;

  bool operator==(const TensorPath& o) const { return factors == o.factors; }
  Composition weight() const;  // length nletters
  long long size() const;
  bool all_b11() const;
  Word as_word() const;  // letters of a (B^{1,1})^L path
  std::string to_text() const;  // factors joined by "|", or digit string
};

// Parse "[[1,1],[2,3]]|[[2]]" or a digit string like "4312111" (B^{1,1}).
TensorPath parse_path(const std::string& s, int nletters = 0);
TensorPath path_from_word(const Word& w, int nletters = 0);

enum class Dir { raise, lower };

// Kashiwara operator e_i (raise) or f_i (lower) via the signature rule on
// the concatenated reading words. Returns nullopt when the operator kills p.
std::optional<TensorPath> kashiwara(const TensorPath& p, int i, Dir dir);

bool is_highest(const TensorPath& p);

// Yamanouchi test for plain words: every prefix has weakly decreasing
// letter content.
bool is_yamanouchi(const Word& w);

struct RResult {
  RectTableau first;   // element of B^{r',s'}
  RectTableau second;  // element of B^{r,s}
  int H = 0;           // energy
};

// Combinatorial R: b (x) b2 in B^{r,s} (x) B^{r',s'} maps to
// first (x) second with the energy H.
RResult combinatorial_R(const RectTableau& b, const RectTableau& b2);

int energy_H(const RectTableau& b, const RectTableau& b2);
int energy_Hbar(const RectTableau& b, const RectTableau& b2);

struct AffineElement {
  RectTableau b;
  int d = 0;
  bool operator==(const AffineElement& o) const {
    return b == o.b && d == o.d;
  }
};

std::pair<AffineElement, AffineElement> affine_R(const AffineElement& x,
                                                 const AffineElement& y);

// b_j^{(i)} for j = pos..L (1-based pos): factor j moved left to position
// pos through successive R applications. Element [j - pos] of the result.
std::vector<RectTableau> r_propagate(const TensorPath& p, int pos);

// Tabloid of a path with single-row factors: letter k in factor i
// contributes an entry i in row k.
Tabloid tabloid_from_path(const TensorPath& p);
// Inverse for B^{1,1} paths: tabloid rows list factor positions per letter.
TensorPath path_from_tabloid(const Tabloid& t, int nletters = 0);

// All paths in the tensor product of the given (r_i, s_i) factors,
// optionally restricted to a weight.
struct Rect {
  int r = 1, s = 1;
  bool operator==(const Rect& o) const { return r == o.r && s == o.s; }
};
using RectangleSequence = std::vector<Rect>;

RectangleSequence parse_rects(const std::string& s);  // "3x2,2x2,2x2"
std::string format_rects(const RectangleSequence& R);

}  // namespace cpaths
