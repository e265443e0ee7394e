#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "romdom/alpha.hpp"
#include "romdom/circle.hpp"
#include "romdom/finite.hpp"

namespace romdom::io {

// Graph file:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Blank lines and '#' comments are ignored. Throws ParseError.
finite::FiniteGraph parse_graph(std::istream& in);
finite::FiniteGraph read_graph_file(const std::filesystem::path& path);

// Labeling file:
//   # comment
//   beta: 1/4          (optional)
//   l0: [1/4, 1/2) [3/4, 1)
//   l1: [1/2, 3/4)
//   l2: [0, 1/4)
// Endpoints are "<rational>" or "<rational>+<int>a" ("1/100+3a", "1/2-a",
// "2*a"), whitespace-insensitive. "full" and "empty" are accepted in place of
// an arc list; a label line may repeat and its arcs accumulate. [x, x+1) is
// the full circle; [x, x) is rejected.
struct LabelingFile {
  std::optional<CirclePoint> beta;
  CircleSet l0;
  CircleSet l1;
  CircleSet l2;
};

LabelingFile parse_labeling(std::istream& in, const AlphaSpec& alpha);
LabelingFile read_labeling_file(const std::filesystem::path& path, const AlphaSpec& alpha);

// "<rational>" or "<rational>+<int>a" reduced onto the circle.
CirclePoint parse_point(std::string_view text, const AlphaSpec& alpha);

// Renders a set in the labeling-file arc grammar.
std::string format_arcs(const CircleSet& s);

}  // namespace romdom::io
