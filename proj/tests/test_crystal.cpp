#include <algorithm>

#include "cpaths/crystal.hpp"
#include "cpaths/sweep.hpp"
#include "doctest.h"

using namespace cpaths;

TEST_CASE("combinatorial R on the worked pair") {
  auto b = rect_from_ssyt(parse_ssyt("[[1,1,4],[2,3,5]]"));
  auto b2 = rect_from_ssyt(parse_ssyt("[[2,3],[3,4],[4,5]]"));
  auto res = combinatorial_R(b, b2);
  CHECK(res.first.to_text() == "[[1,1],[2,2],[3,4]]");
  CHECK(res.second.to_text() == "[[3,3,4],[4,5,5]]");
  CHECK(res.H == 3);
}

TEST_CASE("R is an involution and preserves H") {
  auto left = crystal_elements(2, 2, 3);
  auto right = crystal_elements(1, 2, 3);
  for (auto& b : left)
    for (auto& b2 : right) {
      auto res = combinatorial_R(b, b2);
      auto back = combinatorial_R(res.first, res.second);
      CHECK(back.first == b);
      CHECK(back.second == b2);
      CHECK(back.H == res.H);
    }
}

TEST_CASE("R is the identity on equal shapes' content multiset") {
  // weights are preserved
  auto left = crystal_elements(2, 1, 3);
  auto right = crystal_elements(1, 3, 3);
  for (auto& b : left)
    for (auto& b2 : right) {
      auto res = combinatorial_R(b, b2);
      Composition w1 = b.t.content(3), w2 = b2.t.content(3);
      Composition v1 = res.first.t.content(3), v2 = res.second.t.content(3);
      for (int i = 0; i < 3; ++i) CHECK(w1[i] + w2[i] == v1[i] + v2[i]);
    }
}

TEST_CASE("yang-baxter on triples") {
  auto A = crystal_elements(1, 1, 3);
  auto B = crystal_elements(2, 1, 3);
  auto C = crystal_elements(1, 2, 3);
  auto r12 = [](RectTableau& x, RectTableau& y) {
    auto res = combinatorial_R(x, y);
    x = res.first;
    y = res.second;
  };
  for (auto& a : A)
    for (auto& b : B)
      for (auto& c : C) {
        RectTableau x = a, y = b, z = c;
        r12(x, y);
        r12(y, z);
        r12(x, y);
        RectTableau u = a, v = b, w = c;
        r12(v, w);
        r12(u, v);
        r12(v, w);
        CHECK(x == u);
        CHECK(y == v);
        CHECK(z == w);
      }
}

TEST_CASE("affine R shifts modes by the energy") {
  auto b = rect_from_ssyt(parse_ssyt("[[1,1,4],[2,3,5]]"));
  auto b2 = rect_from_ssyt(parse_ssyt("[[2,3],[3,4],[4,5]]"));
  auto [x, y] = affine_R({b, 5}, {b2, 2});
  CHECK(x.d == 2 - 3);
  CHECK(y.d == 5 + 3);
}

TEST_CASE("B^{1,1} energy is the comparison indicator") {
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) {
      RectTableau a{1, 1, Ssyt{{{u}}}};
      RectTableau b{1, 1, Ssyt{{{v}}}};
      CHECK(energy_H(a, b) == (u < v ? 1 : 0));
      CHECK(energy_Hbar(a, b) == (u >= v ? 1 : 0));
    }
}

TEST_CASE("kashiwara operators") {
  // f then e is the identity; e kills the highest rectangle
  TensorPath u;
  u.nletters = 3;
  u.factors = {highest_rect(2, 2)};
  for (int i = 1; i < 3; ++i) CHECK(!kashiwara(u, i, Dir::raise));
  CHECK(is_highest(u));

  for_each_path(parse_rects("1x2,2x1"), 3, [](const TensorPath& p) {
    for (int i = 1; i < 3; ++i) {
      auto f = kashiwara(p, i, Dir::lower);
      if (f) {
        CHECK(f->weight()[i - 1] == p.weight()[i - 1] - 1);
        CHECK(f->weight()[i] == p.weight()[i] + 1);
        auto e = kashiwara(*f, i, Dir::raise);
        REQUIRE(e.has_value());
        CHECK(*e == p);
      }
      auto e = kashiwara(p, i, Dir::raise);
      if (e) {
        auto f2 = kashiwara(*e, i, Dir::lower);
        REQUIRE(f2.has_value());
        CHECK(*f2 == p);
      }
    }
  });
}

TEST_CASE("highest words are the yamanouchi words") {
  Word w(5, 1);
  for (int code = 0; code < 243; ++code) {
    int c = code;
    for (int i = 0; i < 5; ++i) {
      w[i] = 1 + c % 3;
      c /= 3;
    }
    CHECK(is_highest(path_from_word(w, 3)) == is_yamanouchi(w));
  }
}

TEST_CASE("crystal element counts") {
  CHECK(crystal_elements(1, 1, 4).size() == 4);
  CHECK(crystal_elements(2, 2, 3).size() == 6);
  CHECK(crystal_elements(3, 1, 3).size() == 1);
  CHECK(crystal_elements(1, 2, 3).size() == 6);
  for (auto& b : crystal_elements(2, 3, 4)) CHECK(b.is_valid(4));
}

TEST_CASE("propagation through equal shapes is trivial") {
  // R restricted to B^{1,1} x B^{1,1} is the identity, so every factor
  // moved to the front of a letter path lands on the original front letter
  TensorPath p = parse_path("4221343");
  auto prop = r_propagate(p, 1);
  REQUIRE(prop.size() == 7);
  for (size_t j = 0; j < 7; ++j) CHECK(prop[j] == p.factors[0]);
  auto tail = r_propagate(p, 3);
  REQUIRE(tail.size() == 5);
  for (size_t j = 0; j < 5; ++j) CHECK(tail[j] == p.factors[2]);
}

TEST_CASE("tabloids of paths") {
  Tabloid t = tabloid_from_path(parse_path("4221343"));
  CHECK(t.rows == std::vector<Word>{{4}, {2, 3}, {5, 7}, {1, 6}});
  CHECK(path_from_tabloid(t).as_word() == Word{4, 2, 2, 1, 3, 4, 3});

  Tabloid t2 = tabloid_from_path(parse_path("[[3,3]]|[[1,1,2,3]]|[[1,3]]|[[2,3,3]]"));
  CHECK(t2.rows ==
        std::vector<Word>{{2, 2, 3}, {2, 4}, {1, 1, 2, 3, 4, 4}});
}

TEST_CASE("path parsing round trips") {
  CHECK(parse_path("4312111").to_text() == "4312111");
  std::string s = "[[1,1],[2,2]]|[[1,2],[2,3]]";
  CHECK(parse_path(s).to_text() == s);
  CHECK(parse_path(s).nletters == 3);
  CHECK_THROWS(parse_path("430"));
  CHECK(format_rects(parse_rects("3x2,2x2,1x1")) == "3x2,2x2,1x1");
  CHECK_THROWS(parse_rects("3y2"));
}
