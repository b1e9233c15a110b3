#include "cpaths/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cpaths {

bool is_partition(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  // zeros are allowed only as a trailing run
  return true;
}

long long size_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

Composition content(const Word& w) {
  int m = 0;
  for (int x : w) m = std::max(m, x);
  Composition c(m, 0);
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("word letters must be positive");
    c[x - 1]++;
  }
  return c;
}

std::vector<int> trimmed(const std::vector<int>& v) {
  std::vector<int> r = v;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty() || p[0] == 0) return q;
  q.assign(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) q[j]++;
  return q;
}

bool dominates(const Partition& a, const Partition& b) {
  long long sa = 0, sb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

long long n_stat(const Partition& mu) {
  long long s = 0;
  for (size_t i = 0; i < mu.size(); ++i) s += (long long)i * mu[i];
  return s;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

static void partitions_rec(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // bitmask over the n-1 gaps
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1UL << i)) {
        c.push_back(run);
        run = 1;
      } else {
        run++;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  return out;
}

std::vector<Composition> weak_compositions(int n, int k) {
  std::vector<Composition> out;
  Composition cur(k, 0);
  // iterative odometer
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == k - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  return out;
}

std::vector<Word> words_with_content(const Composition& alpha) {
  Word w;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (int j = 0; j < alpha[i]; ++j) w.push_back((int)i + 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stoi(tok));
  }
  return v;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace cpaths
