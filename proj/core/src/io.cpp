#include "romdom/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <vector>

#include "romdom/errors.hpp"
#include "romdom/qalpha.hpp"

namespace romdom::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<Token> split_whitespace(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* end = tok.text.data() + tok.text.size();
  const auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, tok.column,
                     std::string("expected a non-negative integer ") + what + ", got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr const char* kEndpointGrammar = "expected <rational> or <rational>+<int>a";

// Symbolic endpoint before reduction mod 1.
QAlpha parse_endpoint(std::string_view text, std::size_t line, std::size_t column) {
  QAlpha value;
  try {
    value = QAlpha::parse(text);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, column, std::string(kEndpointGrammar) + " (" + e.what() + ")");
  }
  const mpq_class& c = value.alpha_coeff();
  if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
    throw ParseError(line, column,
                     "alpha coefficient must be a machine integer in '" + std::string(text) + "'");
  }
  return value;
}

CirclePoint reduce(const QAlpha& v, const AlphaSpec& alpha) {
  return CirclePoint::make(v.rational(), v.alpha_coeff().get_num().get_si(), alpha);
}

// Parses "[x, y) [z, w) ..." starting at `offset` within the raw line.
std::vector<Arc> parse_arc_list(std::string_view raw, std::size_t offset, std::size_t line,
                                const AlphaSpec& alpha, bool& full) {
  std::vector<Arc> arcs;
  const std::string_view body = trim(raw.substr(offset));
  if (body == "full") {
    full = true;
    return arcs;
  }
  if (body == "empty" || body.empty()) return arcs;

  std::size_t i = offset;
  auto skip_space = [&] {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
  };
  while (true) {
    skip_space();
    if (i >= raw.size()) break;
    if (raw[i] != '[') {
      throw ParseError(line, i + 1, "expected '[' to open a half-open arc [x, y)");
    }
    const std::size_t open = ++i;
    const auto comma = raw.find(',', open);
    if (comma == std::string_view::npos) {
      throw ParseError(line, open, "expected ',' between arc endpoints");
    }
    const auto close = raw.find(')', comma);
    if (close == std::string_view::npos) {
      const auto bracket = raw.find(']', comma);
      if (bracket != std::string_view::npos) {
        throw ParseError(line, bracket + 1, "arcs are half-open; close with ')'");
      }
      throw ParseError(line, comma + 1, "expected ')' to close the arc");
    }
    const std::string_view start_text = raw.substr(open, comma - open);
    const std::string_view end_text = raw.substr(comma + 1, close - comma - 1);
    const QAlpha start = parse_endpoint(start_text, line, open + 1);
    const QAlpha end = parse_endpoint(end_text, line, comma + 2);

    const QAlpha length = end - start;
    if (length.is_zero()) {
      throw ParseError(line, open, "empty arc [" + std::string(trim(start_text)) + ", " +
                                       std::string(trim(end_text)) + ")");
    }
    if (length.is_rational() && length.rational().get_den() == 1) {
      full = true;
    } else {
      arcs.push_back(Arc{reduce(start, alpha), reduce(end, alpha)});
    }
    i = close + 1;
  }
  return arcs;
}

}  // namespace

finite::FiniteGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::size_t seen_edges = 0;
  std::optional<finite::FiniteGraph> graph;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (blank(line)) continue;
    const auto tokens = split_whitespace(line);
    if (tokens.size() != 2) {
      const std::size_t col = tokens.size() > 2 ? tokens[2].column : tokens.back().column;
      throw ParseError(line_no, col, n ? "expected an edge line 'u v'" : "expected a header line 'n m'");
    }
    if (!n) {
      n = parse_count(tokens[0], line_no, "vertex count n");
      m = parse_count(tokens[1], line_no, "edge count m");
      graph.emplace(*n);
      continue;
    }
    if (seen_edges == m) {
      throw ParseError(line_no, tokens[0].column,
                       "more edge lines than the " + std::to_string(m) + " declared");
    }
    const std::size_t u = parse_count(tokens[0], line_no, "vertex id u");
    const std::size_t v = parse_count(tokens[1], line_no, "vertex id v");
    if (u >= v) throw ParseError(line_no, tokens[0].column, "edge must satisfy u < v");
    if (v >= *n) {
      throw ParseError(line_no, tokens[1].column,
                       "vertex " + std::to_string(v) + " outside [0, " + std::to_string(*n) + ")");
    }
    if (!edges.emplace(u, v).second) {
      throw ParseError(line_no, tokens[0].column,
                       "repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    graph->add_edge(u, v);
    ++seen_edges;
  }
  if (!n) throw ParseError(line_no + 1, 0, "missing header line 'n m'");
  if (seen_edges != m) {
    throw ParseError(line_no + 1, 0,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(seen_edges));
  }
  return std::move(*graph);
}

finite::FiniteGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open graph file " + path.string());
  return parse_graph(in);
}

LabelingFile parse_labeling(std::istream& in, const AlphaSpec& alpha) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<CirclePoint> beta;
  std::array<std::vector<Arc>, 3> arcs;
  std::array<bool, 3> full{false, false, false};
  std::array<bool, 3> present{false, false, false};

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (blank(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, 1, "expected 'l0:', 'l1:', 'l2:' or 'beta:'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    if (key == "beta") {
      const std::string_view value = trim(line.substr(colon + 1));
      const QAlpha v = parse_endpoint(value, line_no, colon + 2);
      beta = reduce(v, alpha);
      continue;
    }
    if (key.size() != 2 || key[0] != 'l' || key[1] < '0' || key[1] > '2') {
      throw ParseError(line_no, 1,
                       "unknown key '" + std::string(key) + "'; expected l0, l1, l2 or beta");
    }
    const std::size_t label = static_cast<std::size_t>(key[1] - '0');
    present[label] = true;
    bool is_full = false;
    auto parsed = parse_arc_list(line, colon + 1, line_no, alpha, is_full);
    full[label] = full[label] || is_full;
    arcs[label].insert(arcs[label].end(), parsed.begin(), parsed.end());
  }
  for (std::size_t label = 0; label < 3; ++label) {
    if (!present[label]) {
      throw ParseError(line_no + 1, 0, "missing 'l" + std::to_string(label) + ":' line");
    }
  }
  auto build = [&](std::size_t label) {
    return full[label] ? CircleSet::full(alpha) : CircleSet::from_arcs(arcs[label], alpha);
  };
  return LabelingFile{beta, build(0), build(1), build(2)};
}

LabelingFile read_labeling_file(const std::filesystem::path& path, const AlphaSpec& alpha) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open labeling file " + path.string());
  return parse_labeling(in, alpha);
}

CirclePoint parse_point(std::string_view text, const AlphaSpec& alpha) {
  return reduce(parse_endpoint(text, 1, 1), alpha);
}

std::string format_arcs(const CircleSet& s) {
  if (s.is_empty()) return "empty";
  if (s.is_full()) return "full";
  std::string out;
  for (const Arc& a : s.arcs()) {
    if (!out.empty()) out += ' ';
    out += '[' + a.start.to_string() + ", " + (a.end.is_zero() ? "1/1" : a.end.to_string()) + ')';
  }
  return out;
}

}  // namespace romdom::io
