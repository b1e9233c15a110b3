#include "cpaths/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpaths {

long long word_maj(const Word& a) {
  long long m = 0;
  int L = (int)a.size();
  for (int i = 0; i + 1 < L; ++i)
    if (a[i] < a[i + 1]) m += L - (i + 1);
  return m;
}

long long word_tau(const Word& a) {
  Word b;
  b.push_back(1);
  b.insert(b.end(), a.begin(), a.end());
  return word_maj(b);
}

long long charge(const Word& w) {
  int n = (int)w.size();
  std::vector<bool> used(n, false);
  int remaining = n;
  long long total = 0;
  while (remaining > 0) {
    // rightmost unused 1
    int pos = -1;
    for (int i = n - 1; i >= 0; --i)
      if (!used[i] && w[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) throw std::domain_error("charge: no smallest letter left");
    used[pos] = true;
    --remaining;
    int index = 0;
    for (int k = 2;; ++k) {
      // scan rightward cyclically from pos for the next unused k
      int found = -1;
      bool wrapped = false;
      for (int step = 1; step <= n; ++step) {
        int i = pos + step;
        if (i >= n) {
          i -= n;
          wrapped = true;
        }
        if (!used[i] && w[i] == k) {
          found = i;
          break;
        }
      }
      if (found < 0) break;
      if (wrapped && found > pos)
        throw std::domain_error("charge: malformed content");
      if (wrapped) index += 1;
      total += index;
      used[found] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

long long cocharge(const Word& w) {
  Composition c;
  for (int x : w) {
    if (x > (int)c.size()) c.resize(x, 0);
    c[x - 1]++;
  }
  std::sort(c.begin(), c.end(), std::greater<int>());
  return n_stat(c) - charge(w);
}

long long charge_path(const TensorPath& p) {
  return charge(reading_word(tabloid_from_path(p)));
}

namespace {

// Sum of f(H, b, b2) over all pairs i < j with b = b_i, b2 = b_j^{(i+1)}.
template <class F>
void for_pairs(const TensorPath& p, F f) {
  int L = (int)p.factors.size();
  for (int j = 2; j <= L; ++j) {
    RectTableau c = p.factors[j - 1];
    for (int k = j - 1; k >= 1; --k) {
      RResult res = combinatorial_R(p.factors[k - 1], c);
      f(res.H, p.factors[k - 1], c);
      c = res.first;
    }
  }
}

}  // namespace

long long maj_stat(const TensorPath& p) {
  if (p.all_b11()) return word_maj(p.as_word());
  long long m = 0;
  for_pairs(p, [&](int H, const RectTableau&, const RectTableau&) { m += H; });
  return m;
}

long long ebar_stat(const TensorPath& p) {
  long long m = 0;
  for_pairs(p, [&](int H, const RectTableau& b, const RectTableau& b2) {
    m += std::min(b.r, b2.r) * std::min(b.s, b2.s) - H;
  });
  return m;
}

long long tau_rs(const TensorPath& p, int r, int s) {
  TensorPath q;
  q.nletters = std::max(p.nletters, r);
  q.factors.push_back(highest_rect(r, s));
  q.factors.insert(q.factors.end(), p.factors.begin(), p.factors.end());
  return maj_stat(q);
}

long long tau_stat(const TensorPath& p) { return tau_rs(p, 1, 1); }

std::vector<Word> mu_blocks(const Word& a, const Composition& mu) {
  if (size_of(mu) != (long long)a.size())
    throw std::invalid_argument("mu_blocks: |mu| != |word|");
  std::vector<Word> blocks;
  size_t pos = 0;
  for (int m : mu) {
    blocks.emplace_back(a.begin() + pos, a.begin() + pos + m);
    pos += m;
  }
  return blocks;
}

long long tau_mu(const Word& a, const Composition& mu) {
  long long t = 0;
  for (auto& b : mu_blocks(a, mu)) t += word_tau(b);
  return t;
}

long long c_mu(const Word& a, const Composition& mu) {
  long long c = 0;
  for (auto& b : mu_blocks(a, mu)) c += charge_path(path_from_word(b));
  return c;
}

Tabloid haglund_filling(const Word& a, const Composition& mu) {
  Tabloid t;
  for (auto& b : mu_blocks(a, mu)) {
    Word row(b.rbegin(), b.rend());
    t.rows.push_back(row);
  }
  return t;
}

long long haglund_inv_count(const Tabloid& t) {
  long long inv = 0;
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      int x = t.rows[i][j];
      for (size_t k = 0; k < j; ++k)
        if (t.rows[i][k] > x) ++inv;
      if (i + 1 < t.rows.size())
        for (size_t k = j + 1; k < t.rows[i + 1].size(); ++k)
          if (t.rows[i + 1][k] > x) ++inv;
    }
  return inv;
}

long long haglund_des(const Tabloid& t) {
  long long d = 0;
  for (size_t i = 1; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows[i].size(); ++j)
      if (j < t.rows[i - 1].size() && t.rows[i - 1][j] < t.rows[i][j])
        d += (long long)t.rows[i].size() - (long long)(j + 1);
  return d;
}

long long haglund_inv(const Tabloid& t) {
  return haglund_inv_count(t) - haglund_des(t);
}

long long haglund_maj(const Tabloid& t) {
  size_t width = 0;
  for (auto& r : t.rows) width = std::max(width, r.size());
  long long m = 0;
  for (size_t j = 0; j < width; ++j) {
    Word col;
    for (auto& r : t.rows)
      if (j < r.size()) col.push_back(r[j]);
    m += word_maj(col);
  }
  return m;
}

namespace {

// Inversions of a pair of equal-length blocks laid on top of each other:
// chi(a_k < a_i) for k in the first block and i in the window of mu - 1
// positions after k.
long long inv_pair_equal(const Word& a, int mu) {
  long long inv = 0;
  for (int k = 1; k <= mu; ++k)
    for (int i = k + 1; i <= k + mu - 1; ++i)
      if (a[k - 1] < a[i - 1]) ++inv;
  return inv;
}

}  // namespace

long long haglund_inv_count_word(const Word& a, const Composition& mu) {
  auto blocks = mu_blocks(a, mu);
  blocks.emplace_back();  // empty trailing block
  long long inv = 0;
  for (size_t i = 0; i + 1 < blocks.size(); ++i) {
    int m1 = (int)blocks[i].size();
    Word cat = blocks[i];
    // pad the shorter second block with 1s on the left
    cat.insert(cat.end(), m1 - (int)blocks[i + 1].size(), 1);
    cat.insert(cat.end(), blocks[i + 1].begin(), blocks[i + 1].end());
    inv += inv_pair_equal(cat, m1);
  }
  return inv;
}

long long haglund_des_word(const Word& a, const Composition& mu) {
  auto blocks = mu_blocks(a, mu);
  blocks.emplace_back();
  long long d = 0;
  for (size_t i = 0; i + 1 < blocks.size(); ++i) {
    int m1 = (int)blocks[i].size();
    int m2 = (int)blocks[i + 1].size();
    Word cat = blocks[i];
    cat.insert(cat.end(), blocks[i + 1].begin(), blocks[i + 1].end());
    for (int k = m1 - m2 + 1; k <= m1; ++k)
      if (cat[k - 1] < cat[k + m2 - 1]) d += k - (m1 - m2) - 1;
  }
  return d;
}

Word regularize(const Word& p) {
  int n = 0;
  for (int x : p) n = std::max(n, x);
  Composition w(n, 0);
  for (int x : p) w[x - 1]++;
  Word out;
  for (int i = n - 1; i >= 1; --i)
    for (int rep = 0; rep < w[i]; ++rep)  // w[i] = content of letter i+1
      for (int a = 1; a <= i; ++a) out.push_back(a);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace cpaths
