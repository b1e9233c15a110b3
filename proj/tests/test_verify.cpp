#include <nlohmann/json.hpp>

#include "cpaths/sweep.hpp"
#include "cpaths/verify.hpp"
#include "doctest.h"

using namespace cpaths;

TEST_CASE("main theorem identity on small data") {
  CHECK(check_theorem_main({4, 1, 1}, {4, 2}).pass);
  CHECK(check_theorem_main({2, 2, 2}, {3, 3}).pass);
  CHECK(check_theorem_main({2, 1, 1, 1}, {3, 2}).pass);
  for (auto& mu : partitions_of(5))
    for (auto& alpha : compositions_of(5)) {
      CHECK(check_theorem_main(alpha, mu).pass);
      CHECK(check_qt_expansion(alpha, mu).pass);
    }
}

TEST_CASE("tau form of the identity with its fitted prefactor") {
  auto rep = check_conjecture_main({4, 1, 1}, {4, 2});
  CHECK(rep.pass);
  CHECK(rep.constant == -2);
  CHECK(rep.lhs == "q^5 + 4 q^4 + 7 q^3 + 7 q^2 + 7 q + 4");
  for (auto& mu : partitions_of(5))
    for (auto& alpha : compositions_of(5))
      CHECK(check_conjecture_main(alpha, mu).pass);
}

TEST_CASE("hhl-kostka comparison and its counterexamples") {
  for (int n = 2; n <= 5; ++n)
    for (auto& mu : partitions_of(n)) {
      if (mu[0] > 2) continue;
      for (auto& lam : partitions_of(n)) {
        auto rep = check_hhl_kostka(lam, mu);
        CHECK(rep.pass);
        CHECK(rep.note == "conjectured condition holds (consistent)");
      }
    }
  auto bad1 = check_hhl_kostka({2, 2, 2}, {4, 2});
  CHECK(!bad1.pass);
  CHECK(bad1.note == "conjectured condition fails (consistent)");
  auto bad2 = check_hhl_kostka({3, 2, 1}, {4, 2});
  CHECK(!bad2.pass);
  CHECK(bad2.note == "conjectured condition fails (consistent)");
  // hooks survive even when mu is wide
  CHECK(check_hhl_kostka({4, 1, 1}, {4, 2}).pass);
  CHECK(check_hhl_kostka({5, 1}, {4, 2}).pass);
  CHECK(check_hhl_kostka({6}, {4, 2}).pass);
}

TEST_CASE("tau sweep against the parabolic expansion") {
  RectangleSequence R = parse_rects("3x2,2x2,2x2");
  auto rep = check_conj_tau(R, {4, 3, 3, 2, 2}, 6, 5);
  CHECK(rep.pass);
  CHECK(rep.constant == 12);
  auto small = check_conj_tau(parse_rects("1x1,1x1,1x1"), {2, 1}, 2, 1);
  CHECK(small.pass);
}

TEST_CASE("ebar sweep against the parabolic expansion") {
  auto rep = check_conj_ebar(parse_rects("2x2,2x2,3x2"), {6, 4, 3, 1});
  CHECK(rep.pass);
  CHECK(rep.lhs == "2 q^12 + 3 q^11 + 3 q^10 + q^9");
  CHECK(check_conj_ebar(parse_rects("1x2,2x1,1x1"), {2, 2, 1}).pass);
}

TEST_CASE("energy-tau relation and its precondition") {
  std::vector<TensorPath> paths;
  for_each_path(parse_rects("2x1,1x2,1x1"), 3,
                [&](const TensorPath& p) { paths.push_back(p); });
  CHECK(check_e_tau(paths, 3, 2).pass);
  CHECK(check_e_tau(paths, 5, 4).pass);
  CHECK_THROWS_AS(check_e_tau(paths, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_e_tau(paths, 3, 1), std::invalid_argument);
}

TEST_CASE("regularization difference is constant per weight") {
  auto rep = check_regularization({1, 3, 3});
  CHECK(rep.pass);
  CHECK(rep.constant == 39);
  auto triv = check_regularization({7});
  CHECK(triv.pass);
  CHECK(triv.constant == 0);
}

TEST_CASE("generalized identity smoke check") {
  auto rep = check_conj_genmain(parse_rects("1x2,1x2"), parse_rects("2x1,1x1,1x1"));
  CHECK(rep.pass);
}

TEST_CASE("level-rank duality of parabolic kostka polynomials") {
  RectangleSequence R = parse_rects("2x2,1x2,1x1");
  for (auto& lam : partitions_of(7)) {
    auto rep = check_duality(R, lam);
    CHECK(rep.pass);
  }
}

TEST_CASE("report formatting") {
  auto rep = check_theorem_main({2, 1}, {2, 1});
  CHECK(rep.pass);
  CHECK(rep.to_text().substr(0, 13) == "PASS thm-main");
  auto j = rep.to_json();
  CHECK(j["verdict"] == "PASS");
  CHECK(j["name"] == "thm-main");
  CHECK(j.contains("lhs"));
  CHECK(j.contains("rhs"));
  auto shifted = check_conjecture_main({2, 1}, {2, 1});
  CHECK(shifted.to_json().contains("shift"));
}
