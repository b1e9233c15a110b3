#include "cpaths/crystal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace cpaths {

bool RectTableau::is_valid(int nletters) const {
  if ((int)t.rows.size() != r) return false;
  for (auto& row : t.rows)
    if ((int)row.size() != s) return false;
  if (!t.is_valid()) return false;
  for (auto& row : t.rows)
    for (int x : row)
      if (x > nletters) return false;
  return true;
}

Word RectTableau::row_word() const {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    for (int x : *it) w.push_back(x);
  return w;
}

Word RectTableau::japanese_word() const {
  Word w;
  for (int j = s - 1; j >= 0; --j)
    for (int i = 0; i < r; ++i) w.push_back(t.rows[i][j]);
  return w;
}

RectTableau highest_rect(int r, int s) {
  RectTableau u;
  u.r = r;
  u.s = s;
  for (int i = 1; i <= r; ++i) u.t.rows.push_back(Word(s, i));
  return u;
}

RectTableau rect_from_ssyt(const Ssyt& t) {
  RectTableau b;
  b.t = t;
  b.r = (int)t.rows.size();
  b.s = t.rows.empty() ? 0 : (int)t.rows[0].size();
  for (auto& row : t.rows)
    if ((int)row.size() != b.s)
      throw std::invalid_argument("rect_from_ssyt: not rectangular");
  if (!t.is_valid())
    throw std::invalid_argument("rect_from_ssyt: not semistandard");
  return b;
}

std::vector<RectTableau> crystal_elements(int r, int s, int nletters) {
  std::vector<RectTableau> out;
  Ssyt t;
  for (int i = 0; i < r; ++i) t.rows.push_back(Word(s, 0));
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == r) {
      RectTableau b;
      b.r = r;
      b.s = s;
      b.t = t;
      out.push_back(b);
      return;
    }
    int ni = j + 1 == s ? i + 1 : i;
    int nj = j + 1 == s ? 0 : j + 1;
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
    for (int v = lo; v <= nletters; ++v) {
      t.rows[i][j] = v;
      rec(ni, nj);
    }
  };
  rec(0, 0);
  return out;
}

Composition TensorPath::weight() const {
  Composition w(nletters, 0);
  for (auto& f : factors)
    for (auto& row : f.t.rows)
      for (int x : row) {
        if (x > (int)w.size()) w.resize(x, 0);
        w[x - 1]++;
      }
  return w;
}

long long TensorPath::size() const {
  long long n = 0;
  for (auto& f : factors) n += (long long)f.r * f.s;
  return n;
}

bool TensorPath::all_b11() const {
  for (auto& f : factors)
    if (f.r != 1 || f.s != 1) return false;
  return true;
}

Word TensorPath::as_word() const {
  if (!all_b11())
    throw std::logic_error("as_word: path has a factor larger than B^{1,1}");
  Word w;
  for (auto& f : factors) w.push_back(f.t.rows[0][0]);
  return w;
}

std::string TensorPath::to_text() const {
  if (all_b11()) {
    bool digits = true;
    for (auto& f : factors)
      if (f.t.rows[0][0] > 9) digits = false;
    if (digits) {
      std::string s;
      for (auto& f : factors) s += std::to_string(f.t.rows[0][0]);
      return s;
    }
  }
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "|";
    s += factors[i].to_text();
  }
  return s;
}

TensorPath path_from_word(const Word& w, int nletters) {
  TensorPath p;
  for (int x : w) {
    RectTableau b;
    b.r = 1;
    b.s = 1;
    b.t.rows = {{x}};
    p.factors.push_back(b);
    nletters = std::max(nletters, x);
  }
  p.nletters = nletters;
  return p;
}

TensorPath parse_path(const std::string& s, int nletters) {
  if (s.empty()) throw std::invalid_argument("empty path literal");
  bool digits = true;
  for (char c : s)
    if (!isdigit((unsigned char)c)) digits = false;
  if (digits) {
    Word w;
    for (char c : s) {
      if (c == '0') throw std::invalid_argument("path letter 0 in: " + s);
      w.push_back(c - '0');
    }
    return path_from_word(w, nletters);
  }
  TensorPath p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find('|', i);
    if (j == std::string::npos) j = s.size();
    p.factors.push_back(rect_from_ssyt(parse_ssyt(s.substr(i, j - i))));
    i = j + 1;
  }
  for (auto& f : p.factors)
    for (auto& row : f.t.rows)
      for (int x : row) nletters = std::max(nletters, x);
  p.nletters = nletters;
  return p;
}

std::optional<TensorPath> kashiwara(const TensorPath& p, int i, Dir dir) {
  if (i < 1 || i >= std::max(p.nletters, 2))
    throw std::invalid_argument("kashiwara: index out of range");
  // cell references in reading order
  struct Cell {
    int f, row, col;
  };
  std::vector<Cell> plus, stack;
  std::vector<Cell> minus_surviving;
  for (size_t f = 0; f < p.factors.size(); ++f) {
    const RectTableau& b = p.factors[f];
    for (int col = b.s - 1; col >= 0; --col)
      for (int row = 0; row < b.r; ++row) {
        int x = b.t.rows[row][col];
        if (x == i) {
          stack.push_back({(int)f, row, col});
        } else if (x == i + 1) {
          if (!stack.empty())
            stack.pop_back();  // cancel "+ -"
          else
            minus_surviving.push_back({(int)f, row, col});
        }
      }
  }
  Cell target;
  if (dir == Dir::lower) {
    if (stack.empty()) return std::nullopt;
    target = stack.front();  // leftmost surviving '+'
  } else {
    if (minus_surviving.empty()) return std::nullopt;
    target = minus_surviving.back();  // rightmost surviving '-'
  }
  TensorPath q = p;
  int& x = q.factors[target.f].t.rows[target.row][target.col];
  x = dir == Dir::lower ? i + 1 : i;
  return q;
}

bool is_highest(const TensorPath& p) {
  for (int i = 1; i < p.nletters; ++i)
    if (kashiwara(p, i, Dir::raise)) return false;
  return true;
}

bool is_yamanouchi(const Word& w) {
  Composition c;
  for (int x : w) {
    if (x > (int)c.size()) c.resize(x, 0);
    c[x - 1]++;
    for (size_t k = 0; k + 1 < c.size(); ++k)
      if (c[k] < c[k + 1]) return false;
  }
  return true;
}

RResult combinatorial_R(const RectTableau& b, const RectTableau& b2) {
  int r = b.r, s = b.s, r2 = b2.r, s2 = b2.s;
  Ssyt y = row_insert(b2.t, b.row_word());
  // energy: nodes outside the concatenation of (s^r) and (s2^r2)
  int H = 0;
  for (size_t i = 0; i < y.rows.size(); ++i) {
    int lam = (i < (size_t)r ? s : 0) + (i < (size_t)r2 ? s2 : 0);
    H += std::max(0, (int)y.rows[i].size() - lam);
  }
  // theta = cells of y outside the upper-left (s^r); per-row column lists
  std::vector<std::vector<int>> theta(y.rows.size());
  for (size_t i = 0; i < y.rows.size(); ++i) {
    int start = i < (size_t)r ? s : 0;
    for (int j = start; j < (int)y.rows[i].size(); ++j) theta[i].push_back(j);
  }
  // label cells 1..r2*s2 via successive vertical r2-strips, each taken as
  // high as possible (top-down, rightmost remaining cell per row), numbered
  // bottom to top within a strip
  std::vector<std::pair<int, int>> cell_of_label(r2 * s2 + 1);
  for (int strip = 0; strip < s2; ++strip) {
    std::vector<std::pair<int, int>> taken;
    for (size_t i = 0; i < theta.size() && (int)taken.size() < r2; ++i) {
      if (theta[i].empty()) continue;
      taken.push_back({(int)i, theta[i].back()});
      theta[i].pop_back();
    }
    if ((int)taken.size() != r2)
      throw std::logic_error("combinatorial_R: strip extraction failed");
    for (int k = 0; k < r2; ++k)
      cell_of_label[strip * r2 + r2 - k] = taken[k];
  }
  Word u;  // ejected letters u_1 .. u_{r2 s2}
  for (int lab = 1; lab <= r2 * s2; ++lab) {
    auto [ci, cj] = cell_of_label[lab];
    u.push_back(inverse_bump(y, ci, cj));
  }
  Ssyt bt1;
  for (auto it = u.rbegin(); it != u.rend(); ++it) row_insert_letter(bt1, *it);
  RResult res;
  res.first = rect_from_ssyt(bt1);
  res.second = rect_from_ssyt(y);
  res.H = H;
  if (res.first.r != r2 || res.first.s != s2 || res.second.r != r ||
      res.second.s != s)
    throw std::logic_error("combinatorial_R: output shapes wrong");
  return res;
}

int energy_H(const RectTableau& b, const RectTableau& b2) {
  if (b.r == 1 && b.s == 1 && b2.r == 1 && b2.s == 1)
    return b.t.rows[0][0] < b2.t.rows[0][0] ? 1 : 0;
  return combinatorial_R(b, b2).H;
}

int energy_Hbar(const RectTableau& b, const RectTableau& b2) {
  return std::min(b.r, b2.r) * std::min(b.s, b2.s) - energy_H(b, b2);
}

std::pair<AffineElement, AffineElement> affine_R(const AffineElement& x,
                                                 const AffineElement& y) {
  RResult res = combinatorial_R(x.b, y.b);
  return {{res.first, y.d - res.H}, {res.second, x.d + res.H}};
}

std::vector<RectTableau> r_propagate(const TensorPath& p, int pos) {
  if (pos < 1 || pos > (int)p.factors.size())
    throw std::invalid_argument("r_propagate: position out of range");
  std::vector<RectTableau> out;
  for (int j = pos; j <= (int)p.factors.size(); ++j) {
    RectTableau c = p.factors[j - 1];
    for (int k = j - 1; k >= pos; --k)
      c = combinatorial_R(p.factors[k - 1], c).first;
    out.push_back(c);
  }
  return out;
}

Tabloid tabloid_from_path(const TensorPath& p) {
  Tabloid t;
  t.rows.resize(p.nletters);
  for (size_t i = 0; i < p.factors.size(); ++i) {
    const RectTableau& f = p.factors[i];
    if (f.r != 1)
      throw std::invalid_argument("tabloid_from_path: factor not single-row");
    for (int x : f.t.rows[0]) {
      if (x > (int)t.rows.size()) t.rows.resize(x);
      t.rows[x - 1].push_back((int)i + 1);
    }
  }
  return t;
}

TensorPath path_from_tabloid(const Tabloid& t, int nletters) {
  long long n = 0;
  for (auto& r : t.rows) n += (long long)r.size();
  Word w(n, 0);
  for (size_t k = 0; k < t.rows.size(); ++k)
    for (int pos : t.rows[k]) {
      if (pos < 1 || pos > n || w[pos - 1] != 0)
        throw std::invalid_argument("path_from_tabloid: bad entries");
      w[pos - 1] = (int)k + 1;
    }
  return path_from_word(w, std::max(nletters, (int)t.rows.size()));
}

RectangleSequence parse_rects(const std::string& s) {
  RectangleSequence R;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    size_t x = tok.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("bad rectangle token: " + tok);
    Rect rc;
    rc.r = std::stoi(tok.substr(0, x));
    rc.s = std::stoi(tok.substr(x + 1));
    if (rc.r < 1 || rc.s < 1)
      throw std::invalid_argument("bad rectangle token: " + tok);
    R.push_back(rc);
    i = j + 1;
  }
  return R;
}

std::string format_rects(const RectangleSequence& R) {
  std::string s;
  for (size_t i = 0; i < R.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(R[i].r) + "x" + std::to_string(R[i].s);
  }
  return s;
}

}  // namespace cpaths
