#include <algorithm>

#include "cpaths/bbs.hpp"
#include "cpaths/statistics.hpp"
#include "doctest.h"

using namespace cpaths;

namespace {

Word padded(Word w, size_t extra) {
  w.resize(w.size() + extra, 1);
  return w;
}

Word window(const Word& w, size_t L) { return Word(w.begin(), w.begin() + L); }

long long balls(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](int x) { return x > 1; });
}

}  // namespace

TEST_CASE("takahashi-satsuma worked evolutions") {
  // evolution of 4312111, displayed in the original 7-letter window
  std::vector<Word> table_a = {
      {4, 3, 1, 2, 1, 1, 1}, {1, 1, 4, 1, 3, 2, 1}, {1, 1, 1, 4, 1, 1, 3},
      {1, 1, 1, 1, 4, 1, 1}, {1, 1, 1, 1, 1, 4, 1}, {1, 1, 1, 1, 1, 1, 4},
      {1, 1, 1, 1, 1, 1, 1}};
  Word w = padded(table_a[0], 7 * 8);
  for (size_t t = 0; t + 1 < table_a.size(); ++t) {
    CHECK(window(w, 7) == table_a[t]);
    w = takahashi_satsuma(w);
  }
  CHECK(window(w, 7) == table_a.back());

  std::vector<Word> table_b = {
      {4, 3, 2, 1, 1, 1, 1}, {1, 1, 1, 4, 3, 2, 1}, {1, 1, 1, 1, 1, 1, 4},
      {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}};
  Word v = padded(table_b[0], 7 * 8);
  for (size_t t = 0; t + 1 < table_b.size(); ++t) {
    CHECK(window(v, 7) == table_b[t]);
    v = takahashi_satsuma(v);
  }
  CHECK(window(v, 7) == table_b.back());
}

TEST_CASE("takahashi-satsuma conserves balls and errors on overflow") {
  Word w = padded({3, 2, 2, 3, 1, 2, 3}, 20);
  for (int t = 0; t < 4; ++t) {
    Word next = takahashi_satsuma(w);
    CHECK(balls(next) == balls(w));
    w = next;
  }
  CHECK_THROWS_AS(takahashi_satsuma({2, 1, 2}), std::runtime_error);
  // ts_evolution returns steps+1 rows
  auto rows = ts_evolution(padded({2, 1, 1, 1, 1, 1}, 12), 3);
  CHECK(rows.size() == 4);
}

TEST_CASE("carrier step matches the stable evolution") {
  TensorPath p = parse_path("4312111");
  auto step = carrier_step(p, 1, 7);
  CHECK(step.next.as_word() == Word{1, 1, 4, 1, 3, 2, 1});
  CHECK(t_infinity(p).as_word() == Word{1, 1, 4, 1, 3, 2, 1});
  auto rows = carrier_evolution(p, 1, 7, 2);
  CHECK(rows.size() == 3);
  CHECK(rows[2].as_word() == Word{1, 1, 1, 4, 1, 1, 3});
}

TEST_CASE("stable evolution equals takahashi-satsuma exhaustively") {
  Word w(5, 1);
  for (int code = 0; code < 243; ++code) {
    int c = code;
    for (int i = 0; i < 5; ++i) {
      w[i] = 1 + c % 3;
      c /= 3;
    }
    Word pw = padded(w, 5);
    CHECK(t_infinity(path_from_word(pw, 3)).as_word() == takahashi_satsuma(pw));
  }
}

TEST_CASE("soliton tau equals the path statistic") {
  CHECK(soliton_tau({4, 3, 1, 2, 1, 1, 1}) == 11);
  CHECK(soliton_tau({4, 3, 2, 1, 1, 1, 1}) == 7);
  CHECK(soliton_tau({3, 2, 2, 3, 1, 2, 3}) == 14);
  Word w(5, 1);
  for (int code = 0; code < 243; ++code) {
    int c = code;
    for (int i = 0; i < 5; ++i) {
      w[i] = 1 + c % 3;
      c /= 3;
    }
    CHECK(soliton_tau(w) == word_tau(w));
  }
}
