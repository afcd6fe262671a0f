#include "nodal4/diagram.hpp"

#include "nodal4/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>

namespace nodal4 {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::MalformedWord, msg); }

// Relabel so labels appear in increasing order of first occurrence.
std::vector<int> first_occurrence(const std::vector<int>& w) {
  std::vector<int> map(w.size() + 1, 0), out;
  out.reserve(w.size());
  int next = 1;
  for (int x : w) {
    int& m = map[static_cast<size_t>(x)];
    if (m == 0) m = next++;
    out.push_back(m);
  }
  return out;
}

int parse_count(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty() || v < 0)
    malformed(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

void validate(const ChordDiagram& d) {
  if (d.solitary_count < 0) malformed("negative solitary count");
  if (d.word.size() % 2 != 0) malformed("word of odd length");
  const int k = d.chord_count();
  std::vector<int> count(static_cast<size_t>(k) + 1, 0);
  for (int x : d.word) {
    if (x < 1 || x > k) malformed("label out of range in " + word_string(d.word));
    ++count[static_cast<size_t>(x)];
  }
  for (int x = 1; x <= k; ++x)
    if (count[static_cast<size_t>(x)] != 2) malformed("label " + std::to_string(x) + " does not appear exactly twice");
}

ChordDiagram canonicalize(const ChordDiagram& d) {
  validate(d);
  const size_t n = d.word.size();
  std::vector<int> best = first_occurrence(d.word);
  std::vector<int> rot(n);
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> base = d.word;
    if (refl) std::reverse(base.begin(), base.end());
    for (size_t r = 0; r < n; ++r) {
      for (size_t i = 0; i < n; ++i) rot[i] = base[(i + r) % n];
      auto cand = first_occurrence(rot);
      if (cand < best) best = std::move(cand);
    }
  }
  return {best, d.solitary_count};
}

int crossing_count(const ChordDiagram& d) {
  validate(d);
  const int k = d.chord_count();
  std::vector<int> first(static_cast<size_t>(k) + 1, -1), second(static_cast<size_t>(k) + 1, -1);
  for (int i = 0; i < static_cast<int>(d.word.size()); ++i) {
    auto x = static_cast<size_t>(d.word[static_cast<size_t>(i)]);
    (first[x] < 0 ? first[x] : second[x]) = i;
  }
  int crossings = 0;
  for (size_t a = 1; a <= static_cast<size_t>(k); ++a)
    for (size_t b = a + 1; b <= static_cast<size_t>(k); ++b) {
      const bool b1_inside = first[a] < first[b] && first[b] < second[a];
      const bool b2_inside = first[a] < second[b] && second[b] < second[a];
      if (b1_inside != b2_inside) ++crossings;
    }
  return crossings;
}

bool diagrams_equal(const ChordDiagram& a, const ChordDiagram& b) {
  return a.solitary_count == b.solitary_count && canonicalize(a).word == canonicalize(b).word;
}

std::vector<ClassId> enumerate_all(int total_nodes) {
  if (total_nodes < 0) throw std::invalid_argument("negative node count");
  std::set<ClassId> found;
  for (int k = 0; k <= total_nodes; ++k) {
    const size_t n = 2 * static_cast<size_t>(k);
    std::vector<int> w(n, 0);
    // Every perfect matching: pair the first free slot with each later free slot.
    std::function<void(int)> rec = [&](int label) {
      auto it = std::find(w.begin(), w.end(), 0);
      if (it == w.end()) {
        found.insert(class_of({w, total_nodes - k}));
        return;
      }
      *it = label;
      for (auto jt = it + 1; jt != w.end(); ++jt) {
        if (*jt != 0) continue;
        *jt = label;
        rec(label + 1);
        *jt = 0;
      }
      *it = 0;
    };
    rec(1);
  }
  return {found.begin(), found.end()};
}

ClassId class_of(const ChordDiagram& d) {
  ChordDiagram c = canonicalize(d);
  return {c.chord_count(), word_string(c.word), c.solitary_count};
}

ChordDiagram diagram_of(const ClassId& c) {
  ChordDiagram d = parse_diagram(c.canonical_word + "|s" + std::to_string(c.solitary_count));
  if (d.chord_count() != c.chord_count) malformed("chord count does not match word " + c.canonical_word);
  return d;
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int x : word) {
    if (x >= 1 && x <= 9) s.push_back(static_cast<char>('0' + x));
    else s += "(" + std::to_string(x) + ")";
  }
  return s;
}

std::string to_string(const ChordDiagram& d) { return word_string(d.word) + "|s" + std::to_string(d.solitary_count); }

std::string to_string(const ClassId& c) {
  return std::to_string(c.chord_count) + "-" + c.canonical_word + "|s" + std::to_string(c.solitary_count);
}

ChordDiagram parse_diagram(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  ChordDiagram d;
  const auto bar = text.find('|');
  std::string_view w = text.substr(0, bar);
  if (bar != std::string_view::npos) {
    std::string_view tail = text.substr(bar + 1);
    if (tail.empty() || std::tolower(static_cast<unsigned char>(tail.front())) != 's')
      malformed("expected '|sN' in '" + std::string(text) + "'");
    d.solitary_count = parse_count(tail.substr(1), "solitary count");
  }
  for (char ch : w) {
    if (ch < '1' || ch > '9') malformed("bad label character in '" + std::string(text) + "'");
    d.word.push_back(ch - '0');
  }
  validate(d);
  return d;
}

ClassId parse_class_id(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) return class_of(parse_diagram(text));
  const int k = parse_count(text.substr(0, dash), "chord count");
  ChordDiagram d = parse_diagram(text.substr(dash + 1));
  if (d.chord_count() != k) malformed("chord count " + std::to_string(k) + " does not match word");
  return class_of(d);
}

}  // namespace nodal4
