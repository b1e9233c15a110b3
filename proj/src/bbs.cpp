#include "cpaths/bbs.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpaths {

CarrierStep carrier_step(const TensorPath& p, int a, int l) {
  CarrierStep out;
  out.carrier = highest_rect(a, l);
  out.next.nletters = p.nletters;
  for (const RectTableau& b : p.factors) {
    RResult res = combinatorial_R(out.carrier, b);
    out.next.factors.push_back(res.first);
    out.carrier = res.second;
  }
  return out;
}

TensorPath t_infinity(const TensorPath& p, int a) {
  int maxs = 1;
  for (auto& f : p.factors) maxs = std::max(maxs, f.s);
  long long cap = p.size() * maxs + 1;
  TensorPath prev = carrier_step(p, a, 1).next;
  for (long long l = 2; l <= cap; ++l) {
    TensorPath cur = carrier_step(p, a, (int)l).next;
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::logic_error("t_infinity: carrier size did not stabilize");
}

Word takahashi_satsuma(const Word& w) {
  int maxletter = 1;
  for (int x : w) maxletter = std::max(maxletter, x);
  Word v = w;
  for (int label = maxletter; label >= 2; --label) {
    // original balls of this label, leftmost first
    std::vector<size_t> balls;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == label) balls.push_back(i);
    for (size_t pos : balls) {
      v[pos] = 1;
      size_t j = pos + 1;
      while (j < v.size() && v[j] != 1) ++j;
      if (j == v.size())
        throw std::runtime_error("takahashi_satsuma: ball ran off the end");
      v[j] = label;
    }
  }
  return v;
}

std::vector<Word> ts_evolution(const Word& w, int steps) {
  std::vector<Word> out{w};
  for (int t = 0; t < steps; ++t) out.push_back(takahashi_satsuma(out.back()));
  return out;
}

std::vector<TensorPath> carrier_evolution(const TensorPath& p, int a, int l,
                                          int steps) {
  std::vector<TensorPath> out{p};
  for (int t = 0; t < steps; ++t)
    out.push_back(carrier_step(out.back(), a, l).next);
  return out;
}

long long soliton_tau(const Word& w) {
  long long L = (long long)w.size();
  Word v = w;
  v.insert(v.end(), L * (L + 1), 1);  // room for every move
  long long tau = 0;
  for (long long t = 0; t < L; ++t) {
    for (long long i = 0; i < L; ++i)
      if (v[i] != 1) ++tau;
    if (t + 1 < L) v = takahashi_satsuma(v);
  }
  return tau;
}

}  // namespace cpaths
