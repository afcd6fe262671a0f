#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nodal4 {

/// Chord diagram: a circular word in which every chord label 1..k appears
/// exactly twice, plus a count of solitary nodes that carry no circle
/// position.
struct ChordDiagram {
  std::vector<int> word;
  int solitary_count = 0;

  int chord_count() const { return static_cast<int>(word.size() / 2); }
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Rigid isotopy class label, rendered as "k-word|sS".
struct ClassId {
  int chord_count = 0;
  std::string canonical_word;
  int solitary_count = 0;

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// Throws MalformedWord unless labels are 1..k with each appearing twice.
void validate(const ChordDiagram& d);

/// Lexicographically least word over rotations, the reflection and label
/// renamings.
ChordDiagram canonicalize(const ChordDiagram& d);
int crossing_count(const ChordDiagram& d);
bool diagrams_equal(const ChordDiagram& a, const ChordDiagram& b);

/// All canonical classes with total_nodes nodes, sorted by chord count then word.
std::vector<ClassId> enumerate_all(int total_nodes = 3);

ClassId class_of(const ChordDiagram& d);
ChordDiagram diagram_of(const ClassId& c);

std::string word_string(const std::vector<int>& word);
/// "word|sN", canonical spelling.
std::string to_string(const ChordDiagram& d);
std::string to_string(const ClassId& c);
/// Accepts "word|sN" (case-insensitive, "|sN" optional meaning N = 0).
ChordDiagram parse_diagram(std::string_view text);
/// Accepts "k-word|sS" or the diagram form.
ClassId parse_class_id(std::string_view text);

}  // namespace nodal4
