#include "twq/io.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "twq/errors.hpp"

namespace twq {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const char* b = tok.data();
  const char* e = tok.data() + tok.size();
  if (!tok.empty() && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e)
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  return v;
}

std::int64_t to_transit(std::string_view tok, std::size_t line) {
  std::int64_t t = to_int(tok, line, "transit weight");
  if (t <= 0) throw DomainError("line " + std::to_string(line) + ": transit weight must be >= 1, got " + std::to_string(t));
  return t;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    f(lineno, line);
    if (nl == text.size()) break;
    pos = nl + 1;
  }
}

ParsedGraph parse_dimacs(std::string_view text) {
  GraphBuilder b;
  std::int64_t declared_n = -1, declared_m = -1, arcs = 0;
  std::size_t header_line = 0;
  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (declared_n >= 0) throw ParseError(ln, "second problem line");
      if (tok.size() != 4) throw ParseError(ln, "expected 'p mrc <n> <m>'");
      declared_n = to_int(tok[2], ln, "node count");
      declared_m = to_int(tok[3], ln, "edge count");
      if (declared_n < 0 || declared_m < 0) throw ParseError(ln, "negative size in problem line");
      header_line = ln;
      return;
    }
    if (tok[0] == "a") {
      if (declared_n < 0) throw ParseError(ln, "arc before problem line");
      if (tok.size() != 4 && tok.size() != 5) throw ParseError(ln, "expected 'a <src> <dst> <wt> [<wt'>]'");
      std::int64_t s = to_int(tok[1], ln, "node id");
      std::int64_t d = to_int(tok[2], ln, "node id");
      if (s < 1 || s > declared_n || d < 1 || d > declared_n) throw ParseError(ln, "node id out of range 1.." + std::to_string(declared_n));
      std::int64_t w = to_int(tok[3], ln, "weight");
      std::int64_t t = tok.size() == 5 ? to_transit(tok[4], ln) : 1;
      NodeId u = b.node(tok[1]);
      NodeId v = b.node(tok[2]);
      b.add_edge(u, v, w, t);
      ++arcs;
      return;
    }
    throw ParseError(ln, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (declared_n < 0) throw ParseError(0, "missing problem line");
  if (arcs != declared_m)
    throw ParseError(header_line, "problem line declares " + std::to_string(declared_m) + " arcs, found " + std::to_string(arcs));
  for (std::int64_t i = 1; i <= declared_n; ++i) b.node(std::to_string(i));
  ParsedGraph out;
  out.warnings = b.warnings();
  out.graph = b.build();
  return out;
}

ParsedGraph parse_edgelist(std::string_view text) {
  GraphBuilder b;
  for_each_line(text, [&](std::size_t ln, std::string_view line) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') return;
    if (tok.size() != 3 && tok.size() != 4) throw ParseError(ln, "expected '<src> <dst> <wt> [<wt'>]'");
    std::int64_t w = to_int(tok[2], ln, "weight");
    std::int64_t t = tok.size() == 4 ? to_transit(tok[3], ln) : 1;
    NodeId u = b.node(tok[0]);
    NodeId v = b.node(tok[1]);
    b.add_edge(u, v, w, t);
  });
  ParsedGraph out;
  out.warnings = b.warnings();
  out.graph = b.build();
  return out;
}

// Tokenizer for the dot subset.
class DotLexer {
 public:
  explicit DotLexer(std::string_view s) : s_(s) {}

  struct Token {
    enum Kind { kId, kPunct, kEnd } kind;
    std::string text;
    std::size_t line;
  };

  Token next() {
    skip();
    if (i_ >= s_.size()) return {Token::kEnd, "", line_};
    char c = s_[i_];
    if (c == '"') {
      std::string out;
      std::size_t start = line_;
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        if (s_[i_] == '\n') ++line_;
        out += s_[i_++];
      }
      if (i_ >= s_.size()) throw ParseError(start, "unterminated string");
      ++i_;
      return {Token::kId, out, start};
    }
    if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
      i_ += 2;
      return {Token::kPunct, "->", line_};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '.' ||
                               (s_[j] == '-' && !(j + 1 < s_.size() && s_[j + 1] == '>'))))
        ++j;
      Token t{Token::kId, std::string(s_.substr(i_, j - i_)), line_};
      i_ = j;
      return t;
    }
    ++i_;
    return {Token::kPunct, std::string(1, c), line_};
  }

 private:
  void skip() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
        if (s_[i_] == '\n') ++line_;
        ++i_;
      }
      if (i_ < s_.size() && (s_[i_] == '#' || s_.substr(i_, 2) == "//")) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
        continue;
      }
      if (s_.substr(i_, 2) == "/*") {
        std::size_t end = s_.find("*/", i_ + 2);
        std::size_t stop = end == std::string_view::npos ? s_.size() : end + 2;
        for (; i_ < stop; ++i_)
          if (s_[i_] == '\n') ++line_;
        continue;
      }
      return;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
};

ParsedGraph parse_dot(std::string_view text) {
  DotLexer lex(text);
  using T = DotLexer::Token;
  T tok = lex.next();
  auto expect_punct = [&](const char* p) {
    if (tok.kind != T::kPunct || tok.text != p) throw ParseError(tok.line, std::string("expected '") + p + "'");
    tok = lex.next();
  };
  if (tok.kind == T::kId && tok.text == "strict") tok = lex.next();
  if (tok.kind != T::kId || tok.text != "digraph") throw ParseError(tok.line, "expected 'digraph'");
  tok = lex.next();
  if (tok.kind == T::kId) tok = lex.next();
  expect_punct("{");

  GraphBuilder b;
  auto attributes = [&]() {
    std::map<std::string, std::pair<std::string, std::size_t>> attrs;
    if (tok.kind == T::kPunct && tok.text == "[") {
      tok = lex.next();
      while (!(tok.kind == T::kPunct && tok.text == "]")) {
        if (tok.kind != T::kId) throw ParseError(tok.line, "expected attribute name");
        std::string key = tok.text;
        tok = lex.next();
        expect_punct("=");
        if (tok.kind != T::kId) throw ParseError(tok.line, "expected attribute value");
        attrs[key] = {tok.text, tok.line};
        tok = lex.next();
        if (tok.kind == T::kPunct && (tok.text == "," || tok.text == ";")) tok = lex.next();
      }
      tok = lex.next();
    }
    return attrs;
  };

  while (!(tok.kind == T::kPunct && tok.text == "}")) {
    if (tok.kind == T::kEnd) throw ParseError(tok.line, "unexpected end of input, expected '}'");
    if (tok.kind != T::kId) throw ParseError(tok.line, "expected node name, got '" + tok.text + "'");
    std::string src = tok.text;
    std::size_t line = tok.line;
    tok = lex.next();
    if (tok.kind == T::kPunct && tok.text == "->") {
      tok = lex.next();
      if (tok.kind != T::kId) throw ParseError(tok.line, "expected target node");
      std::string dst = tok.text;
      tok = lex.next();
      auto attrs = attributes();
      auto lab = attrs.find("label");
      if (lab == attrs.end()) throw ParseError(line, "edge " + src + " -> " + dst + " has no label");
      std::int64_t w = to_int(lab->second.first, lab->second.second, "weight");
      std::int64_t t = 1;
      if (auto tr = attrs.find("transit"); tr != attrs.end()) t = to_transit(tr->second.first, tr->second.second);
      NodeId u = b.node(src);
      NodeId v = b.node(dst);
      b.add_edge(u, v, w, t);
    } else {
      attributes();
      b.node(src);
    }
    if (tok.kind == T::kPunct && tok.text == ";") tok = lex.next();
  }
  tok = lex.next();
  if (tok.kind != T::kEnd) throw ParseError(tok.line, "trailing input after '}'");
  ParsedGraph out;
  out.warnings = b.warnings();
  out.graph = b.build();
  return out;
}

bool plain_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kDimacs: return parse_dimacs(text);
    case GraphFormat::kEdgeList: return parse_edgelist(text);
    case GraphFormat::kDot: return parse_dot(text);
  }
  throw InternalError("unknown graph format");
}

GraphFormat detect_format(std::string_view text) {
  std::optional<GraphFormat> found;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (found) return;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#' || tok[0].starts_with("//")) return;
    // "c" opens a DIMACS comment or names an edge-list node; decide later.
    if (tok[0] == "c") return;
    auto numeric = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    bool arc = tok[0] == "a" && tok.size() >= 4 && std::all_of(tok.begin() + 1, tok.end(), numeric);
    if ((tok[0] == "p" && tok.size() == 4) || arc) found = GraphFormat::kDimacs;
    else if (tok[0] == "digraph" || tok[0] == "strict") found = GraphFormat::kDot;
    else found = GraphFormat::kEdgeList;
  });
  return found.value_or(GraphFormat::kEdgeList);
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dot") return GraphFormat::kDot;
  return std::nullopt;
}

ParsedGraph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return parse_graph(text, format.value_or(detect_format(text)));
}

std::string write_graph(const WeightedDigraph& g, GraphFormat format) {
  std::ostringstream os;
  switch (format) {
    case GraphFormat::kDimacs: {
      // Keep labels when they already form a 1..n numbering.
      std::vector<bool> seen(g.n() + 1, false);
      bool keep = true;
      for (const auto& l : g.labels()) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(l.data(), l.data() + l.size(), v);
        if (ec != std::errc() || p != l.data() + l.size() || v < 1 || v > static_cast<std::int64_t>(g.n()) ||
            seen[v] || std::to_string(v) != l) {
          keep = false;
          break;
        }
        seen[v] = true;
      }
      auto name = [&](NodeId u) { return keep ? g.label(u) : std::to_string(u + 1); };
      os << "p mrc " << g.n() << ' ' << g.m() << '\n';
      for (const Edge& e : g.edges()) {
        os << "a " << name(e.src) << ' ' << name(e.dst) << ' ' << e.weight;
        if (e.transit != 1) os << ' ' << e.transit;
        os << '\n';
      }
      break;
    }
    case GraphFormat::kEdgeList:
      for (const Edge& e : g.edges()) {
        os << g.label(e.src) << ' ' << g.label(e.dst) << ' ' << e.weight;
        if (e.transit != 1) os << ' ' << e.transit;
        os << '\n';
      }
      break;
    case GraphFormat::kDot: {
      auto q = [](const std::string& s) {
        if (plain_identifier(s)) return s;
        std::string out = "\"";
        for (char c : s) {
          if (c == '"' || c == '\\') out += '\\';
          out += c;
        }
        return out + "\"";
      };
      os << "digraph {\n";
      for (NodeId u = 0; u < g.n(); ++u)
        if (g.out_edges(u).empty() && g.in_edges(u).empty()) os << "  " << q(g.label(u)) << ";\n";
      for (const Edge& e : g.edges()) {
        os << "  " << q(g.label(e.src)) << " -> " << q(g.label(e.dst)) << " [label=\"" << e.weight << '"';
        if (e.transit != 1) os << ", transit=\"" << e.transit << '"';
        os << "];\n";
      }
      os << "}\n";
      break;
    }
  }
  return os.str();
}

}  // namespace twq
