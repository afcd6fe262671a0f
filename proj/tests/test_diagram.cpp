#include "doctest.h"

#include "nodal4/diagram.hpp"
#include "nodal4/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace nodal4;

namespace {

std::vector<int> w(const std::string& s) { return parse_diagram(s).word; }

// Brute force: every rotation, both orientations, every permutation of labels.
std::vector<int> brute_canonical(const std::vector<int>& word) {
  const size_t n = word.size();
  const int k = static_cast<int>(n / 2);
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best;
  bool first = true;
  do {
    for (int refl = 0; refl < 2; ++refl)
      for (size_t r = 0; r < std::max<size_t>(n, 1); ++r) {
        std::vector<int> cand(n);
        for (size_t i = 0; i < n; ++i) {
          size_t j = refl ? (n - 1 - i + r) % n : (i + r) % n;
          cand[i] = perm[static_cast<size_t>(word[j] - 1)];
        }
        if (first || cand < best) best = cand;
        first = false;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<int>> all_matchings(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(2 * static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int label) -> void {
    auto it = std::find(cur.begin(), cur.end(), 0);
    if (it == cur.end()) {
      out.push_back(cur);
      return;
    }
    *it = label;
    for (auto jt = it + 1; jt != cur.end(); ++jt)
      if (*jt == 0) {
        *jt = label;
        self(self, label + 1);
        *jt = 0;
      }
    *it = 0;
  };
  rec(rec, 1);
  return out;
}

}  // namespace

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize({w("231231"), 0}).word == w("123123"));
  CHECK(canonicalize({w("1122"), 0}).word == w("1122"));
  CHECK(canonicalize({w("332211"), 0}).word == w("112233"));
  CHECK(brute_canonical(w("231231")) == w("123123"));
  CHECK(brute_canonical(w("332211")) == w("112233"));
  CHECK_THROWS_AS(canonicalize({{1, 1, 1, 2}, 0}), Error);
  CHECK_THROWS_AS(parse_diagram("1123"), Error);
}

TEST_CASE("crossing_count examples") {
  CHECK(crossing_count({w("112233"), 0}) == 0);
  CHECK(crossing_count({w("123123"), 0}) == 3);
  CHECK(crossing_count({w("1212"), 0}) == 1);
}

TEST_CASE("canonicalize matches brute force and is invariant under symmetries") {
  for (int k = 0; k <= 4; ++k)
    for (const auto& m : all_matchings(k)) {
      ChordDiagram d{m, 0};
      auto c = canonicalize(d);
      CHECK(c.word == brute_canonical(m));
      CHECK(canonicalize(c) == c);
      CHECK(crossing_count(c) == crossing_count(d));
      // every dihedral image has the same canonical form
      const size_t n = m.size();
      for (size_t r = 0; r < n; ++r) {
        std::vector<int> rot(n), ref(n);
        for (size_t i = 0; i < n; ++i) {
          rot[i] = m[(i + r) % n];
          ref[i] = m[(n - 1 - i + r) % n];
        }
        CHECK(canonicalize({rot, 0}).word == c.word);
        CHECK(canonicalize({ref, 0}).word == c.word);
      }
    }
}

TEST_CASE("enumerate_all gives the nine classes") {
  auto all = enumerate_all(3);
  CHECK(all.size() == 9);
  std::map<int, int> per_k;
  std::multiset<int> crossings3;
  std::set<std::string> words3;
  for (auto& c : all) {
    ++per_k[c.chord_count];
    CHECK(c.chord_count + c.solitary_count == 3);
    if (c.chord_count == 3) {
      crossings3.insert(crossing_count(diagram_of(c)));
      words3.insert(c.canonical_word);
    }
  }
  CHECK(per_k[3] == 5);
  CHECK(per_k[2] == 2);
  CHECK(per_k[1] == 1);
  CHECK(per_k[0] == 1);
  CHECK(crossings3 == std::multiset<int>{0, 0, 1, 2, 3});
  // orbit oracle: distinct brute-force canonical forms of the 15 matchings
  std::set<std::string> orbits;
  for (const auto& m : all_matchings(3)) orbits.insert(word_string(brute_canonical(m)));
  CHECK(all_matchings(3).size() == 15);
  CHECK(words3 == orbits);
  CHECK(words3 == std::set<std::string>{"112233", "112332", "112323", "121323", "123123"});
  CHECK(enumerate_all(0).size() == 1);
  CHECK(to_string(enumerate_all(0)[0]) == "0-|s0");
}

TEST_CASE("diagrams_equal examples") {
  CHECK(diagrams_equal({w("1212"), 1}, {w("2121"), 1}));
  CHECK(!diagrams_equal({w("1122"), 1}, {w("1212"), 1}));
  CHECK(diagrams_equal({{}, 3}, {{}, 3}));
  CHECK(!diagrams_equal({w("1212"), 1}, {w("1212"), 0}));
}

TEST_CASE("text encodings") {
  CHECK(to_string(parse_diagram("121323|S0")) == "121323|s0");
  CHECK(to_string(parse_class_id("3-123123|s0")) == "3-123123|s0");
  CHECK(to_string(parse_class_id("2-2121|s1")) == "2-1212|s1");
  CHECK(to_string(parse_class_id("0-|s3")) == "0-|s3");
  CHECK(to_string(parse_class_id("|s3")) == "0-|s3");
  CHECK_THROWS_AS(parse_class_id("2-123123|s0"), Error);
  CHECK_THROWS_AS(parse_diagram("12|x1"), Error);
}
