#pragma once

// The line-oriented presentation format:
//
//   # comment
//   [quiver]
//   vertex v
//   arrow x v v 1
//   arrow y v v 2
//   [relations]
//   x*y - y*x
//
// Relation lines are sums of terms `coef * a1*a2*...` (coefficient optional,
// integer or num/den) or `e_VERTEX` for a trivial path.  Each line is split
// into its uniform components.  Representations use a companion
// `[representation]` section with `dim` and `block` lines.

#include "regrade/path.hpp"
#include "regrade/quiver.hpp"
#include "regrade/representation.hpp"
#include "regrade/split.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regrade {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
};

struct PresentationFile {
  WeightedQuiver quiver;
  IdealPresentation ideal;
  friend bool operator==(const PresentationFile&, const PresentationFile&) = default;
};

struct ParseOutcome {
  std::optional<PresentationFile> presentation;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return presentation.has_value(); }
};

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(first) || s.front() == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

namespace detail {

struct Token {
  enum class Kind { Ident, Number, Plus, Minus, Star, Slash, End } kind;
  std::string text;
  int column;  // 1-based
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> tokenize(std::string_view line, std::vector<Diagnostic>& diags, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && ident_char(line[j])) {
        diags.push_back({lineno, col, "identifiers may not start with a digit"});
        return {};
      }
      out.push_back({Token::Kind::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Kind::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '+' || c == '-' || c == '*' || c == '/') {
      const auto kind = c == '+'   ? Token::Kind::Plus
                        : c == '-' ? Token::Kind::Minus
                        : c == '*' ? Token::Kind::Star
                                   : Token::Kind::Slash;
      out.push_back({kind, std::string(1, c), col});
      ++i;
    } else {
      diags.push_back({lineno, col, std::string("unexpected character '") + c + "'"});
      return {};
    }
  }
  out.push_back({Token::Kind::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

// One relation line.  Returns nullopt after recording diagnostics.
inline std::optional<PathSum> parse_relation(const WeightedQuiver& q, Field field,
                                             std::string_view line, int lineno,
                                             std::vector<Diagnostic>& diags) {
  const auto tokens = tokenize(line, diags, lineno);
  if (tokens.empty()) return std::nullopt;
  std::size_t pos = 0;
  auto peek = [&]() -> const Token& { return tokens[pos]; };
  auto fail = [&](const Token& t, std::string msg) {
    diags.push_back({lineno, t.column, std::move(msg)});
    return std::nullopt;
  };

  PathSum sum(field);
  std::optional<int> degree;
  bool first = true;
  while (peek().kind != Token::Kind::End) {
    Rational sign = 1;
    if (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      if (peek().kind == Token::Kind::Minus) sign = -1;
      ++pos;
    } else if (!first) {
      return fail(peek(), "expected '+' or '-' between terms");
    }
    const Token& term_start = peek();
    Rational coef = 1;
    if (peek().kind == Token::Kind::Number) {
      Rational num(peek().text);
      ++pos;
      if (peek().kind == Token::Kind::Slash) {
        ++pos;
        if (peek().kind != Token::Kind::Number) return fail(peek(), "expected denominator");
        Rational den(peek().text);
        if (den == 0) return fail(peek(), "zero denominator");
        num /= den;
        ++pos;
      }
      coef = num;
      if (peek().kind != Token::Kind::Star) return fail(peek(), "expected '*' after coefficient");
      ++pos;
    }
    // path := atom ('*' atom)*
    std::optional<Path> path;
    for (;;) {
      const Token& atom = peek();
      if (atom.kind != Token::Kind::Ident) return fail(atom, "expected an arrow name or e_VERTEX");
      Path piece;
      if (q.find_arrow(ArrowId{atom.text}) != nullptr) {
        piece = Path::of(q, std::vector<ArrowId>{ArrowId{atom.text}});
      } else if (atom.text.rfind("e_", 0) == 0 && q.has_vertex(VertexId{atom.text.substr(2)})) {
        piece = Path::trivial(VertexId{atom.text.substr(2)});
      } else {
        return fail(atom, "undeclared name '" + atom.text + "'");
      }
      if (!path) {
        path = piece;
      } else {
        auto product = multiply_paths(*path, piece);
        if (!product)
          return fail(atom, "'" + atom.text + "' does not compose with '" + path->to_string() + "'");
        path = std::move(product);
      }
      ++pos;
      if (peek().kind != Token::Kind::Star) break;
      ++pos;
    }
    if (degree && *degree != path->degree())
      return fail(term_start, "non-homogeneous relation: term '" + path->to_string() +
                                  "' has degree " + std::to_string(path->degree()) +
                                  " but earlier terms have degree " + std::to_string(*degree));
    degree = path->degree();
    try {
      sum.add_term(*path, Scalar(field, Rational(sign * coef)));
    } catch (const std::domain_error& e) {
      return fail(term_start, e.what());
    }
    first = false;
  }
  if (first) return fail(peek(), "empty relation");
  if (sum.is_zero()) return fail(tokens.front(), "relation is zero");
  return sum;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline int first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return static_cast<int>(i) + 1;
}

inline std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a presentation.  Coefficients are read into `field`.
inline ParseOutcome parse_presentation(std::string_view text, Field field = Field::rationals()) {
  ParseOutcome out;
  auto& diags = out.diagnostics;
  enum class Section { None, Quiver, Relations } section = Section::None;
  bool saw_quiver = false;
  std::vector<VertexId> vertices;
  std::vector<Arrow> arrows;
  std::map<std::string, int> vertex_line, arrow_line;
  std::vector<std::pair<int, std::string>> relation_lines;

  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view line = detail::strip(raw);
    const int col = detail::first_non_space(line);
    if (static_cast<std::size_t>(col) > line.size()) continue;
    const std::string_view body = line.substr(static_cast<std::size_t>(col) - 1);
    if (body == "[quiver]") {
      if (section != Section::None) diags.push_back({lineno, col, "[quiver] must be the first section"});
      section = Section::Quiver;
      saw_quiver = true;
      continue;
    }
    if (body == "[relations]") {
      if (section != Section::Quiver) diags.push_back({lineno, col, "[relations] must follow [quiver]"});
      section = Section::Relations;
      continue;
    }
    if (section == Section::None) {
      diags.push_back({lineno, col, "content before the [quiver] section"});
      continue;
    }
    if (section == Section::Relations) {
      relation_lines.emplace_back(lineno, raw);
      continue;
    }
    const auto words = detail::split_words(body);
    if (words[0] == "vertex") {
      if (words.size() != 2 || !is_identifier(words[1])) {
        diags.push_back({lineno, col, "expected 'vertex NAME'"});
        continue;
      }
      if (vertex_line.count(words[1])) {
        diags.push_back({lineno, col, "duplicate id: vertex '" + words[1] + "' already declared on line " +
                                          std::to_string(vertex_line[words[1]])});
        continue;
      }
      vertex_line[words[1]] = lineno;
      vertices.push_back(VertexId{words[1]});
    } else if (words[0] == "arrow") {
      if (words.size() != 5 || !is_identifier(words[1]) || !is_identifier(words[2]) ||
          !is_identifier(words[3])) {
        diags.push_back({lineno, col, "expected 'arrow NAME SRC TGT DEG'"});
        continue;
      }
      int degree = 0;
      try {
        std::size_t used = 0;
        degree = std::stoi(words[4], &used);
        if (used != words[4].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        diags.push_back({lineno, col, "arrow degree '" + words[4] + "' is not an integer"});
        continue;
      }
      if (degree < 1) {
        diags.push_back({lineno, col, "nonpositive degree " + words[4] + " for arrow '" + words[1] + "'"});
        continue;
      }
      if (arrow_line.count(words[1])) {
        diags.push_back({lineno, col, "duplicate id: arrow '" + words[1] + "' already declared on line " +
                                          std::to_string(arrow_line[words[1]])});
        continue;
      }
      arrow_line[words[1]] = lineno;
      arrows.push_back({ArrowId{words[1]}, VertexId{words[2]}, VertexId{words[3]}, degree});
    } else {
      diags.push_back({lineno, col, "unknown quiver directive '" + words[0] + "'"});
    }
  }
  if (!saw_quiver) diags.push_back({lineno + 1, 1, "missing [quiver] section"});

  for (const Arrow& a : arrows)
    for (const VertexId* end : {&a.source, &a.target})
      if (!vertex_line.count(end->name))
        diags.push_back({arrow_line[a.id.name], 1,
                         "dangling endpoint: arrow '" + a.id.name + "' uses undeclared vertex '" +
                             end->name + "'"});
  if (!diags.empty()) return out;

  PresentationFile file{WeightedQuiver(std::move(vertices), std::move(arrows)), {}};
  for (const QuiverError& e : validate(file.quiver)) diags.push_back({0, 0, e.message});
  if (!diags.empty()) return out;

  for (const auto& [ln, raw] : relation_lines) {
    auto sum = detail::parse_relation(file.quiver, field, detail::strip(raw), ln, diags);
    if (!sum) continue;
    for (UniformElement& u : uniform_components(*sum)) file.ideal.generators.push_back(std::move(u));
  }
  if (diags.empty()) out.presentation = std::move(file);
  return out;
}

/// parse_presentation, throwing std::runtime_error with every diagnostic.
inline PresentationFile parse_presentation_or_throw(std::string_view text,
                                                    Field field = Field::rationals()) {
  ParseOutcome r = parse_presentation(text, field);
  if (r.ok()) return std::move(*r.presentation);
  std::string msg;
  for (const auto& d : r.diagnostics) msg += (msg.empty() ? "" : "\n") + d.to_string();
  throw std::runtime_error(msg);
}

/// Canonical text: header comment lines, sorted vertices and arrows, one
/// generator per relation line.
inline std::string serialize_presentation(const WeightedQuiver& q, const IdealPresentation& ideal,
                                          const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "[quiver]\n";
  for (const VertexId& v : q.vertices()) os << "vertex " << v.name << '\n';
  for (const Arrow& a : q.arrows())
    os << "arrow " << a.id.name << ' ' << a.source.name << ' ' << a.target.name << ' ' << a.degree
       << '\n';
  os << "[relations]\n";
  for (const UniformElement& g : ideal.generators) os << g.sum.to_string() << '\n';
  return os.str();
}

inline std::string serialize_presentation(const PresentationFile& p,
                                          const std::vector<std::string>& comments = {}) {
  return serialize_presentation(p.quiver, p.ideal, comments);
}

/// One comment line describing a split.
inline std::string describe_split(const SplitTrace& t) {
  const Arrow& b = t.original();
  return "split " + b.id.name + " (" + b.source.name + " -> " + b.target.name + ", degree " +
         std::to_string(b.degree) + "): " + t.first.name + " : " + b.source.name + " -> " +
         t.new_vertex.name + " (degree 1), " + t.second.name + " : " + t.new_vertex.name + " -> " +
         b.target.name + " (degree " + std::to_string(b.degree - 1) + ")";
}

/// `[representation]` section: field, window, one `dim V D N` line per known
/// component and one `block A D RxC entries...` line per arrow block.
inline std::string serialize_representation(const GradedRep& m, const std::string& label = "") {
  std::ostringstream os;
  os << "[representation]" << (label.empty() ? "" : " " + label) << '\n';
  os << "field " << m.field().to_string() << '\n';
  os << "window " << m.window().lo << ' ' << m.window().hi << '\n';
  for (const auto& [key, dim] : m.dims()) os << "dim " << key.first.name << ' ' << key.second << ' ' << dim << '\n';
  for (const auto& [key, block] : m.blocks()) {
    os << "block " << key.first.name << ' ' << key.second << ' ' << block.shape();
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) os << ' ' << block(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

/// Reads one `[representation]` section over quiver q; throws
/// std::runtime_error naming the offending line.
inline GradedRep parse_representation(std::string_view text, const WeightedQuiver& q) {
  std::istringstream in{std::string(text)};
  int lineno = 0;
  std::optional<Field> field;
  std::optional<GradedRep> m;
  bool in_section = false;
  auto error = [&](const std::string& msg) {
    return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  };
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto words = detail::split_words(detail::strip(raw));
    if (words.empty()) continue;
    if (words[0] == "[representation]") {
      if (in_section) break;
      in_section = true;
      continue;
    }
    if (!in_section) continue;
    try {
      if (words[0] == "field" && words.size() == 2) {
        field = Field::parse(words[1]);
      } else if (words[0] == "window" && words.size() == 3) {
        if (!field) throw error("window before field");
        m.emplace(q, *field, DegreeWindow{std::stoi(words[1]), std::stoi(words[2])});
      } else if (words[0] == "dim" && words.size() == 4) {
        if (!m) throw error("dim before window");
        m->set_dim(VertexId{words[1]}, std::stoi(words[2]), std::stoul(words[3]));
      } else if (words[0] == "block" && words.size() >= 4) {
        if (!m) throw error("block before window");
        const auto x = words[3].find('x');
        if (x == std::string::npos) throw error("bad block shape '" + words[3] + "'");
        const std::size_t rows = std::stoul(words[3].substr(0, x));
        const std::size_t cols = std::stoul(words[3].substr(x + 1));
        if (words.size() != 4 + rows * cols) throw error("block entry count does not match its shape");
        Matrix b(*field, rows, cols);
        for (std::size_t k = 0; k < rows * cols; ++k)
          b(k / cols, k % cols) = Scalar(*field, Rational(words[4 + k]));
        m->set_block(ArrowId{words[1]}, std::stoi(words[2]), std::move(b));
      } else if (words[0].front() == '[') {
        break;
      } else {
        throw error("unrecognized representation line");
      }
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      throw error(e.what());
    }
  }
  if (!m) throw std::runtime_error("no [representation] section with a window");
  return std::move(*m);
}

}  // namespace regrade
