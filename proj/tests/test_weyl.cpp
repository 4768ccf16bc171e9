#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <vector>

#include "../src/weyl.hpp"

using namespace ramlat;

namespace {

// breadth-first distances from the identity in the Cayley graph on all m
// generators; an independent oracle for the inversion-count length
std::map<std::vector<int>, int> cayley_distances(int m) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(SignedPermutation::simple_reflection(m, i));
  std::map<std::vector<int>, int> dist;
  std::queue<SignedPermutation> todo;
  SignedPermutation id = SignedPermutation::identity(m);
  dist[id.images()] = 0;
  todo.push(id);
  while (!todo.empty()) {
    SignedPermutation x = todo.front();
    todo.pop();
    int d = dist[x.images()];
    for (const auto& s : gens) {
      SignedPermutation y = x * s;
      if (dist.emplace(y.images(), d + 1).second) todo.push(y);
    }
  }
  return dist;
}

// all elements of the parabolic subgroup generated by the reflections in I
std::vector<SignedPermutation> parabolic_elements(int m, const std::vector<int>& I) {
  std::vector<SignedPermutation> gens;
  for (int i : I) gens.push_back(SignedPermutation::simple_reflection(m, i));
  std::map<std::vector<int>, SignedPermutation> seen;
  SignedPermutation id = SignedPermutation::identity(m);
  seen.emplace(id.images(), id);
  std::queue<SignedPermutation> todo;
  todo.push(id);
  while (!todo.empty()) {
    SignedPermutation x = todo.front();
    todo.pop();
    for (const auto& s : gens) {
      SignedPermutation y = x * s;
      if (seen.emplace(y.images(), y).second) todo.push(y);
    }
  }
  std::vector<SignedPermutation> out;
  for (auto& [img, w] : seen) out.push_back(w);
  return out;
}

} // namespace

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), Error);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({3, 1}), Error);
  SignedPermutation w({-2, 1, 3});
  CHECK(w.m() == 3);
  CHECK(w(1) == -2);
  CHECK(w.inverse()(2) == -1);
  CHECK(w * w.inverse() == SignedPermutation::identity(3));
  CHECK(w.inverse() * w == SignedPermutation::identity(3));
}

TEST_CASE("generators satisfy the type-C relations") {
  for (int m = 1; m <= 4; ++m) {
    SignedPermutation id = SignedPermutation::identity(m);
    CHECK(id.length() == 0);
    for (int i = 1; i <= m; ++i) {
      SignedPermutation s = SignedPermutation::simple_reflection(m, i);
      CHECK(s.length() == 1);
      CHECK(s * s == id);
      for (int j = i + 1; j <= m; ++j) {
        SignedPermutation t = SignedPermutation::simple_reflection(m, j);
        SignedPermutation st = s * t;
        int order = j > i + 1 ? 2 : (j == m ? 4 : 3);
        SignedPermutation acc = id;
        for (int r = 0; r < order; ++r) acc = acc * st;
        CHECK(acc == id);
      }
    }
  }
}

TEST_CASE("inversion count equals word length") {
  for (int m = 1; m <= 3; ++m) {
    auto dist = cayley_distances(m);
    CHECK(dist.size() == hyperoctahedral_order(m));
    int max_len = 0;
    for (const auto& [images, d] : dist) {
      SignedPermutation w(images);
      CHECK(w.length() == d);
      CHECK(w.inverse().length() == d);
      max_len = std::max(max_len, d);
    }
    CHECK(max_len == m * m); // the longest element inverts all positive roots
  }
}

TEST_CASE("orders") {
  CHECK(hyperoctahedral_order(1) == 2);
  CHECK(hyperoctahedral_order(2) == 8);
  CHECK(hyperoctahedral_order(3) == 48);
  CHECK(hyperoctahedral_order(4) == 384);
  CHECK(hyperoctahedral_order(8) == 10321920);
}

TEST_CASE("coxeter element and stratum words") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(coxeter_element(m).length() == m);
    CHECK(stratum_word(m, 0) == SignedPermutation::identity(m));
    CHECK(stratum_word(m, m) == coxeter_element(m));
    for (int i = 0; i <= m; ++i) CHECK(stratum_word(m, i).length() == i);
  }
  // m = 2: w = s1 s2 sends e1 -> e2 -> -e2's preimage chain; pin the images
  SignedPermutation w = coxeter_element(2);
  CHECK(w(1) == 2);
  CHECK(w(2) == -1);
}

TEST_CASE("length is additive across the commuting parabolic") {
  for (int m = 1; m <= 4; ++m) {
    for (int i = 0; i <= m; ++i) {
      SignedPermutation wi = stratum_word(m, i);
      std::vector<int> I = stratum_parabolic(m, i);
      CHECK(static_cast<int>(I.size()) == std::max(0, m - 1 - i));
      for (const auto& x : parabolic_elements(m, I)) {
        CHECK((wi * x).length() == i + x.length());
        CHECK((x * wi).length() == i + x.length());
      }
    }
  }
}

TEST_CASE("double coset maxima and the dimension formula") {
  CHECK(dim_DL({}, SignedPermutation::identity(2)) == 0);
  for (int m = 1; m <= 4; ++m) {
    // with an empty parabolic the formula degenerates to plain length
    SignedPermutation cox = coxeter_element(m);
    CHECK(dim_DL({}, cox) == m);
    // with the full parabolic the double coset is everything
    std::vector<int> full;
    for (int i = 1; i <= m; ++i) full.push_back(i);
    CHECK(dim_DL(full, cox) == 0);
    // the stratum data realizes every dimension 0..m
    for (int i = 0; i <= m; ++i)
      CHECK(dim_DL(stratum_parabolic(m, i), stratum_word(m, i)) == i);
  }
  // the longest element of the parabolic is found by the closure
  CHECK(max_length_in_double_coset({1, 2}, SignedPermutation::identity(3)) == 3);
  CHECK(max_length_in_double_coset({1, 3}, SignedPermutation::identity(3)) == 2);
  CHECK(max_length_in_double_coset({2, 3}, SignedPermutation::identity(3)) == 4);
}

TEST_CASE("rank limit") {
  CHECK_THROWS_AS(max_length_in_double_coset({1}, SignedPermutation::identity(9)), Error);
  CHECK_NOTHROW(dim_DL({1}, SignedPermutation::identity(5)));
}
