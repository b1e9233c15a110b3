#include "cpaths/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace cpaths {

Partition Ssyt::shape() const {
  Partition s;
  for (auto& r : rows) s.push_back((int)r.size());
  return s;
}

long long Ssyt::size() const {
  long long n = 0;
  for (auto& r : rows) n += (long long)r.size();
  return n;
}

Composition Ssyt::content(int nletters) const {
  Composition c(nletters, 0);
  for (auto& r : rows)
    for (int x : r) {
      if (x > (int)c.size()) c.resize(x, 0);
      c[x - 1]++;
    }
  return c;
}

bool Ssyt::is_valid() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i + 1 < rows.size() && rows[i + 1].size() > rows[i].size())
      return false;
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() &&
          rows[i][j] >= rows[i + 1][j])
        return false;
    }
  }
  return true;
}

static std::string rows_to_text(const std::vector<Word>& rows) {
  std::string s = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += "[" + format_int_list(rows[i]) + "]";
  }
  return s + "]";
}

std::string Ssyt::to_text() const { return rows_to_text(rows); }
std::string Tabloid::to_text() const { return rows_to_text(rows); }

Ssyt parse_ssyt(const std::string& s) {
  Ssyt t;
  size_t i = 0;
  auto skip = [&](char c) {
    if (i >= s.size() || s[i] != c)
      throw std::invalid_argument("bad tableau literal: " + s);
    ++i;
  };
  skip('[');
  while (i < s.size() && s[i] == '[') {
    ++i;
    Word row;
    while (i < s.size() && s[i] != ']') {
      size_t j = i;
      while (j < s.size() && (isdigit(s[j]) || s[j] == '-')) ++j;
      if (j == i) throw std::invalid_argument("bad tableau literal: " + s);
      row.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
      if (i < s.size() && s[i] == ',') ++i;
    }
    skip(']');
    t.rows.push_back(row);
    if (i < s.size() && s[i] == ',') ++i;
  }
  skip(']');
  if (i != s.size()) throw std::invalid_argument("bad tableau literal: " + s);
  return t;
}

std::pair<int, int> row_insert_letter(Ssyt& t, int x) {
  for (size_t i = 0; i < t.rows.size(); ++i) {
    Word& row = t.rows[i];
    // first entry strictly greater than x
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {(int)i, (int)row.size() - 1};
    }
    std::swap(*it, x);
  }
  t.rows.push_back({x});
  return {(int)t.rows.size() - 1, 0};
}

Ssyt row_insert(Ssyt t, const Word& w) {
  for (int x : w) row_insert_letter(t, x);
  return t;
}

int inverse_bump(Ssyt& t, int row, int col) {
  if (row < 0 || row >= (int)t.rows.size() ||
      col != (int)t.rows[row].size() - 1 ||
      (row + 1 < (int)t.rows.size() &&
       t.rows[row + 1].size() > (size_t)col))
    throw std::invalid_argument("inverse_bump: cell is not an outer corner");
  int x = t.rows[row].back();
  t.rows[row].pop_back();
  if (t.rows[row].empty()) t.rows.erase(t.rows.begin() + row);
  for (int i = row - 1; i >= 0; --i) {
    Word& r = t.rows[i];
    // rightmost entry strictly smaller than x
    auto it = std::lower_bound(r.begin(), r.end(), x);
    if (it == r.begin())
      throw std::logic_error("inverse_bump: no entry to bump");
    --it;
    std::swap(*it, x);
  }
  return x;
}

Composition Tabloid::shape() const {
  Composition s;
  for (auto& r : rows) s.push_back((int)r.size());
  return s;
}

Composition Tabloid::weight(int nletters) const {
  Composition c(nletters, 0);
  for (auto& r : rows)
    for (int x : r) {
      if (x > (int)c.size()) c.resize(x, 0);
      c[x - 1]++;
    }
  return c;
}

bool Tabloid::row_weakly_increasing() const {
  for (auto& r : rows)
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

Word reading_word(const Tabloid& t) {
  Word w;
  for (auto& r : t.rows)
    for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
  return w;
}

Composition TransportationMatrix::row_sums() const {
  Composition a;
  for (auto& row : m) {
    int s = 0;
    for (int x : row) s += x;
    a.push_back(s);
  }
  return a;
}

Composition TransportationMatrix::col_sums() const {
  Composition b;
  for (auto& row : m) {
    if (row.size() > b.size()) b.resize(row.size(), 0);
    for (size_t j = 0; j < row.size(); ++j) b[j] += row[j];
  }
  return b;
}

Tabloid tabloid_from_matrix(const TransportationMatrix& m) {
  Tabloid t;
  for (auto& row : m.m) {
    Word r;
    for (size_t j = 0; j < row.size(); ++j)
      for (int k = 0; k < row[j]; ++k) r.push_back((int)j + 1);
    t.rows.push_back(r);
  }
  return t;
}

TransportationMatrix matrix_from_tabloid(const Tabloid& t, int ncols) {
  if (!t.row_weakly_increasing())
    throw std::invalid_argument("matrix_from_tabloid: rows not weakly increasing");
  TransportationMatrix m;
  for (auto& r : t.rows) {
    std::vector<int> row(ncols, 0);
    for (int x : r) {
      if (x < 1 || x > ncols)
        throw std::invalid_argument("matrix_from_tabloid: letter out of range");
      row[x - 1]++;
    }
    m.m.push_back(row);
  }
  return m;
}

std::vector<TransportationMatrix> enumerate_matrices(const Composition& alpha,
                                                     const Composition& beta) {
  std::vector<TransportationMatrix> out;
  size_t nr = alpha.size(), nc = beta.size();
  TransportationMatrix cur;
  cur.m.assign(nr, std::vector<int>(nc, 0));
  Composition colrest = beta;
  std::function<void(size_t)> rec_row = [&](size_t i) {
    if (i == nr) {
      for (int c : colrest)
        if (c != 0) return;
      out.push_back(cur);
      return;
    }
    // distribute alpha[i] over the columns, bounded by colrest
    std::function<void(size_t, int)> rec_col = [&](size_t j, int rest) {
      if (j == nc) {
        if (rest == 0) rec_row(i + 1);
        return;
      }
      int hi = std::min(rest, colrest[j]);
      for (int v = 0; v <= hi; ++v) {
        cur.m[i][j] = v;
        colrest[j] -= v;
        rec_col(j + 1, rest - v);
        colrest[j] += v;
      }
      cur.m[i][j] = 0;
    };
    rec_col(0, alpha[i]);
  };
  rec_row(0);
  return out;
}

std::pair<Ssyt, Ssyt> rsk(const TransportationMatrix& m) {
  Ssyt p, q;
  for (size_t i = 0; i < m.m.size(); ++i)
    for (size_t j = 0; j < m.m[i].size(); ++j)
      for (int k = 0; k < m.m[i][j]; ++k) {
        auto cell = row_insert_letter(p, (int)j + 1);
        if (cell.first == (int)q.rows.size()) q.rows.push_back({});
        q.rows[cell.first].push_back((int)i + 1);
      }
  return {p, q};
}

bool GTPattern::interlaces() const {
  for (size_t k = 0; k + 1 < rows.size(); ++k) {
    for (size_t i = 0; i < rows[k].size(); ++i) {
      if (rows[k + 1][i] < rows[k][i]) return false;
      if (rows[k][i] < rows[k + 1][i + 1]) return false;
    }
  }
  return true;
}

GTPattern gt_from_ssyt(const Ssyt& t, int nletters) {
  GTPattern g;
  for (int k = 1; k <= nletters; ++k) {
    std::vector<int> sh(k, 0);
    for (size_t i = 0; i < t.rows.size() && i < (size_t)k; ++i) {
      int len = 0;
      for (int x : t.rows[i])
        if (x <= k) ++len;
      sh[i] = len;
    }
    g.rows.push_back(sh);
  }
  return g;
}

long long PlanePartition::size() const {
  long long n = 0;
  for (auto& r : rows)
    for (int x : r) n += x;
  return n;
}

bool PlanePartition::is_valid() const {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size() && rows[i][j] < rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() &&
          rows[i][j] < rows[i + 1][j])
        return false;
    }
  return true;
}

PlanePartition plane_partition_from_pair(const Ssyt& p, const Ssyt& q) {
  if (p.shape() != q.shape())
    throw std::invalid_argument("plane_partition_from_pair: shape mismatch");
  int n = 0;
  for (auto& r : p.rows)
    for (int v : r) n = std::max(n, v);
  for (auto& r : q.rows)
    for (int v : r) n = std::max(n, v);
  GTPattern x = gt_from_ssyt(p, n), y = gt_from_ssyt(q, n);
  // G[i][j] (1-indexed) = x^{(n-i+j)}[j] below the diagonal, where the
  // k-th pattern row is zero-padded to length n; = y^{(n-j+i)}[i] above.
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto at = [n](const GTPattern& pat, int k, int idx) {
    const auto& row = pat.rows[k - 1];
    return idx - 1 < (int)row.size() ? row[idx - 1] : 0;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      g[i - 1][j - 1] = i >= j ? at(x, n - i + j, j) : at(y, n - j + i, i);
  // trim trailing zeros per row, then empty rows
  PlanePartition pp;
  for (auto& row : g) {
    auto r = row;
    while (!r.empty() && r.back() == 0) r.pop_back();
    pp.rows.push_back(r);
  }
  while (!pp.rows.empty() && pp.rows.back().empty()) pp.rows.pop_back();
  return pp;
}

QPoly macmahon_count(int l, int m, int n) {
  if ((long long)l * m * n > 64)
    throw std::invalid_argument("macmahon_count: box too large");
  // enumerate l x m arrays, entries 0..n, weakly decreasing in both axes
  std::vector<std::vector<int>> a(l, std::vector<int>(m, 0));
  QPoly gf;
  std::function<void(int, int, long long)> rec = [&](int i, int j,
                                                     long long sum) {
    if (i == l) {
      gf.add_term((int)sum, 1);
      return;
    }
    int ni = j + 1 == m ? i + 1 : i;
    int nj = j + 1 == m ? 0 : j + 1;
    int hi = n;
    if (j > 0) hi = std::min(hi, a[i][j - 1]);
    if (i > 0) hi = std::min(hi, a[i - 1][j]);
    for (int v = 0; v <= hi; ++v) {
      a[i][j] = v;
      rec(ni, nj, sum + v);
    }
    a[i][j] = 0;
  };
  rec(0, 0, 0);
  return gf;
}

QPoly macmahon_product(int l, int m, int n) {
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  QPoly one = QPoly::constant(1);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= n; ++k) {
        num = num * (one - QPoly::monomial(i + j + k - 1));
        den = den * (one - QPoly::monomial(i + j + k - 2));
      }
  return num.divide_exact(den);
}

std::vector<Ssyt> enumerate_ssyt(const Partition& shape,
                                 const Composition& weight) {
  if (size_of(shape) != size_of(weight))
    throw std::invalid_argument("enumerate_ssyt: size mismatch");
  std::vector<Ssyt> out;
  int nl = (int)weight.size();
  Ssyt t;
  for (int len : trimmed(shape)) t.rows.push_back(Word(len, 0));
  Composition rest = weight;
  // fill cells in row-major order
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == t.rows.size()) {
      out.push_back(t);
      return;
    }
    size_t ni = j + 1 == t.rows[i].size() ? i + 1 : i;
    size_t nj = j + 1 == t.rows[i].size() ? 0 : j + 1;
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
    for (int v = lo; v <= nl; ++v) {
      if (rest[v - 1] == 0) continue;
      rest[v - 1]--;
      t.rows[i][j] = v;
      rec(ni, nj);
      rest[v - 1]++;
    }
    if (!t.rows[i].empty()) t.rows[i][j] = 0;
  };
  if (shape.empty() || shape[0] == 0) {
    if (size_of(weight) == 0) out.push_back(Ssyt{});
    return out;
  }
  rec(0, 0);
  return out;
}

}  // namespace cpaths
