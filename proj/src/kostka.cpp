#include "cpaths/kostka.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cpaths/statistics.hpp"
#include "cpaths/sweep.hpp"

namespace cpaths {

long long kostka_number(const Partition& lambda, const Composition& alpha) {
  if (size_of(lambda) != size_of(alpha)) return 0;
  return (long long)enumerate_ssyt(lambda, alpha).size();
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  QPoly out;
  for (const Ssyt& t : enumerate_ssyt(lambda, mu)) {
    Tabloid tb;
    tb.rows = t.rows;
    out.add_term((int)charge(reading_word(tb)), 1);
  }
  return out;
}

QPoly parabolic_kostka(const Partition& lambda, const RectangleSequence& R,
                       int jobs) {
  Partition lam = trimmed(lambda);
  long long n = 0;
  for (auto& rc : R) n += (long long)rc.r * rc.s;
  if (size_of(lam) != n) return QPoly();
  int nletters = (int)lam.size();
  auto filter = [&lam](const TensorPath& p) {
    return trimmed(p.weight()) == lam && is_highest(p);
  };
  auto stat = [](const TensorPath& p) { return ebar_stat(p); };
  return paths_gf(R, nletters, filter, stat, jobs);
}

QTPoly hhl_monomial_gf(const Composition& mu, const Composition& alpha) {
  if (size_of(mu) != size_of(alpha))
    throw std::invalid_argument("hhl_monomial_gf: |mu| != |alpha|");
  QTPoly out;
  for (const Word& w : words_with_content(alpha)) {
    Tabloid f = haglund_filling(w, mu);
    out.add_term((int)haglund_inv(f), (int)haglund_maj(f), 1);
  }
  return out;
}

QTPoly hhl_highest_gf(const Partition& lambda, const Composition& mu) {
  QTPoly out;
  for (const Word& w : words_with_content(lambda)) {
    if (!is_yamanouchi(w)) continue;
    Tabloid f = haglund_filling(w, mu);
    out.add_term((int)haglund_inv(f), (int)haglund_maj(f), 1);
  }
  return out;
}

std::map<Partition, QTPoly> kostka_macdonald_all(const Partition& mu) {
  static std::map<Partition, std::map<Partition, QTPoly>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  int n = (int)size_of(mu);
  std::vector<Partition> etas = partitions_of(n);
  std::map<Partition, QTPoly> kt;
  for (const Partition& eta : etas) {
    QTPoly c = hhl_monomial_gf(mu, eta);
    for (const Partition& lam : etas) {
      if (lam == eta) break;  // etas precede eta in the processing order
      long long k = kostka_number(lam, eta);
      if (k != 0) c += kt.at(lam) * BigInt(-k);
    }
    kt[eta] = c;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(mu, std::move(kt)).first->second;
}

QTPoly kostka_macdonald(const Partition& lambda, const Partition& mu) {
  auto all = kostka_macdonald_all(mu);
  auto it = all.find(trimmed(lambda));
  if (it == all.end())
    throw std::invalid_argument("kostka_macdonald: |lambda| != |mu|");
  return it->second;
}

QTPoly macdonald_kostka(const Partition& lambda, const Partition& mu) {
  QTPoly kt = kostka_macdonald(lambda, mu);
  int nmu = (int)n_stat(mu);
  QTPoly out;
  for (auto& [key, c] : kt.terms())
    out.add_term(key.first, nmu - key.second, c);
  return out;
}

long long n_of_R(const RectangleSequence& R) {
  long long n = 0;
  for (size_t a = 0; a < R.size(); ++a)
    for (size_t b = a + 1; b < R.size(); ++b)
      n += (long long)std::min(R[a].r, R[b].r) * std::min(R[a].s, R[b].s);
  return n;
}

RectangleSequence dominant_rearrangement(const RectangleSequence& R) {
  RectangleSequence out = R;
  std::stable_sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
    if (a.s != b.s) return a.s > b.s;
    return a.r > b.r;
  });
  return out;
}

RectangleSequence conjugate_rects(const RectangleSequence& R) {
  RectangleSequence out;
  for (auto& rc : R) out.push_back({rc.s, rc.r});
  return out;
}

}  // namespace cpaths
