#include "afspec/bdg_format.hpp"

#include "afspec/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace afspec {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { fail(t.column, msg); }

  const std::vector<Token>& tokens() const { return tokens_; }

  template <typename Int>
  Int integer(const Token& t, std::string_view text, Int min) const {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      fail(t, "expected an integer, got '" + std::string(text) + "'");
    if (value < min) fail(t, "value " + std::string(text) + " is below " + std::to_string(min));
    return value;
  }

  BigInt big(const Token& t, std::string_view text, long min) const {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(t, "expected a non-negative integer, got '" + std::string(text) + "'");
    BigInt v{std::string(text)};
    if (v < min) fail(t, "value " + std::string(text) + " is below " + std::to_string(min));
    return v;
  }

  VertexId vertex_ref(const Token& t, std::string_view text) const {
    const auto at = text.find('@');
    if (at == std::string_view::npos) fail(t, "expected <name>@<level>, got '" + std::string(text) + "'");
    const auto name = text.substr(0, at);
    if (!is_identifier(name)) fail(t, "invalid vertex name '" + std::string(name) + "'");
    return VertexId{std::string(name), integer<int>(t, text.substr(at + 1), 1)};
  }

  /// key=value attributes following position `from`; bare words land in `flags`.
  std::map<std::string, Token> attributes(std::size_t from, std::set<std::string>& flags,
                                          const std::set<std::string>& allowed_keys,
                                          const std::set<std::string>& allowed_flags) const {
    std::map<std::string, Token> out;
    for (std::size_t i = from; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      const auto eq = t.text.find('=');
      if (eq == std::string::npos) {
        if (!allowed_flags.count(t.text)) fail(t, "unexpected '" + t.text + "'");
        flags.insert(t.text);
        continue;
      }
      std::string key = t.text.substr(0, eq);
      if (!allowed_keys.count(key)) fail(t, "unknown attribute '" + key + "'");
      if (out.count(key)) fail(t, "duplicate attribute '" + key + "'");
      out.emplace(key, Token{t.text.substr(eq + 1), t.column + eq + 1});
    }
    return out;
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
};

struct Located {
  std::size_t line;
  std::size_t column;
};

BratteliDiagram parse_impl(std::string_view text) {
  std::optional<int> finite_levels;
  std::optional<std::pair<int, int>> periodic;  // preamble, period

  std::vector<Vertex> vertices;
  std::map<VertexId, Located> vertex_pos;
  std::vector<std::pair<EdgeSpec, Located>> edges;
  std::vector<Column> columns;
  std::map<std::string, Located> column_pos;
  std::vector<std::pair<Link, std::pair<Located, Located>>> links;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    LineParser p(line_no, tokens);
    const Token& head = tokens[0];
    std::set<std::string> flags;

    if (head.text == "levels") {
      if (finite_levels || periodic) p.fail(head, "duplicate levels header");
      if (tokens.size() < 2) p.fail(head.column + 6, "levels header needs a count or 'periodic'");
      if (tokens[1].text == "periodic") {
        auto attrs = p.attributes(2, flags, {"preamble", "period"}, {});
        if (!attrs.count("preamble") || !attrs.count("period"))
          p.fail(tokens[1], "periodic header needs preamble=<p> period=<q>");
        const Token& pre = attrs["preamble"];
        const Token& per = attrs["period"];
        periodic = {p.integer<int>(pre, pre.text, 0), p.integer<int>(per, per.text, 1)};
      } else {
        if (tokens.size() != 2) p.fail(tokens[2], "unexpected '" + tokens[2].text + "'");
        finite_levels = p.integer<int>(tokens[1], tokens[1].text, 0);
      }
      continue;
    }
    if (!finite_levels && !periodic) p.fail(head, "expected a levels header before '" + head.text + "'");

    if (head.text == "vertex" || head.text == "edge") {
      if (periodic) p.fail(head, "'" + head.text + "' lines belong to finite diagrams; use column/link");
    } else if (head.text == "column" || head.text == "link") {
      if (finite_levels) p.fail(head, "'" + head.text + "' lines belong to periodic diagrams");
    } else {
      p.fail(head, "unknown directive '" + head.text + "'");
    }

    if (head.text == "vertex") {
      if (tokens.size() < 2) p.fail(head, "vertex needs <name>@<level>");
      VertexId id = p.vertex_ref(tokens[1], tokens[1].text);
      if (id.level > *finite_levels)
        p.fail(tokens[1], "level " + std::to_string(id.level) + " exceeds declared levels " +
                              std::to_string(*finite_levels));
      if (vertex_pos.count(id)) p.fail(tokens[1], "duplicate vertex " + id.str());
      auto attrs = p.attributes(2, flags, {"dim"}, {"terminal"});
      if (!attrs.count("dim")) p.fail(tokens[1], "vertex " + id.str() + " needs dim=<d>");
      const Token& dim = attrs["dim"];
      vertex_pos[id] = {line_no, tokens[1].column};
      vertices.push_back(Vertex{id, p.big(dim, dim.text, 1), flags.count("terminal") > 0});
    } else if (head.text == "edge") {
      // Accept both "a@1 -> x@2" and "a@1->x@2".
      std::string joined;
      std::size_t k = 1;
      for (; k < tokens.size() && tokens[k].text.find('=') == std::string::npos; ++k) joined += tokens[k].text;
      if (k == 1) p.fail(head, "edge needs <name>@<l> -> <name>@<l+1>");
      const Token& at = tokens[1];
      const auto arrow = joined.find("->");
      if (arrow == std::string::npos) p.fail(at, "expected '->' in edge");
      EdgeSpec e;
      e.source = p.vertex_ref(at, joined.substr(0, arrow));
      e.target = p.vertex_ref(at, joined.substr(arrow + 2));
      if (e.target.level != e.source.level + 1)
        p.fail(at, "edge " + e.source.str() + " -> " + e.target.str() + " does not connect consecutive levels");
      auto attrs = p.attributes(k, flags, {"mult"}, {});
      if (!attrs.count("mult")) p.fail(at, "edge needs mult=<m>");
      const Token& m = attrs["mult"];
      e.mult = p.integer<std::uint64_t>(m, m.text, 1);
      edges.push_back({e, {line_no, at.column}});
    } else if (head.text == "column") {
      if (tokens.size() < 2 || !is_identifier(tokens[1].text)) p.fail(head, "column needs a name");
      Column c;
      c.name = tokens[1].text;
      if (column_pos.count(c.name)) p.fail(tokens[1], "duplicate column " + c.name);
      auto attrs = p.attributes(2, flags, {"start", "dim", "mult", "extra"}, {"once"});
      if (!attrs.count("start")) p.fail(tokens[1], "column " + c.name + " needs start=<level>");
      c.start = p.integer<int>(attrs["start"], attrs["start"].text, 1);
      if (attrs.count("dim")) c.dim = p.big(attrs["dim"], attrs["dim"].text, 1);
      if (attrs.count("mult")) c.self_mult = p.integer<std::uint64_t>(attrs["mult"], attrs["mult"].text, 1);
      if (attrs.count("extra")) c.extra = p.big(attrs["extra"], attrs["extra"].text, 0);
      c.repeat = flags.count("once") == 0;
      column_pos[c.name] = {line_no, tokens[1].column};
      columns.push_back(std::move(c));
    } else {  // link
      std::string joined;
      std::size_t k = 1;
      for (; k < tokens.size() && tokens[k].text.find('=') == std::string::npos; ++k) joined += tokens[k].text;
      if (k == 1) p.fail(head, "link needs <name>[+k] -> <name>");
      const Token& at = tokens[1];
      const auto arrow = joined.find("->");
      if (arrow == std::string::npos) p.fail(at, "expected '->' in link");
      std::string src = joined.substr(0, arrow);
      Link l;
      l.target = joined.substr(arrow + 2);
      if (auto sign = src.find_first_of("+-"); sign != std::string::npos) {
        l.shift = p.integer<int>(at, std::string_view(src).substr(sign + 1), 0);
        if (src[sign] == '-') l.shift = -l.shift;
        src = src.substr(0, sign);
      }
      l.source = src;
      if (!is_identifier(l.source)) p.fail(at, "invalid column name '" + l.source + "'");
      if (!is_identifier(l.target)) p.fail(at, "invalid column name '" + l.target + "'");
      auto attrs = p.attributes(k, flags, {"mult"}, {});
      if (attrs.count("mult")) l.mult = p.integer<std::uint64_t>(attrs["mult"], attrs["mult"].text, 1);
      links.push_back({l, {{line_no, at.column}, {line_no, at.column + arrow + 2}}});
    }
  }

  if (!finite_levels && !periodic) throw ParseError(line_no, 1, "missing levels header");

  if (finite_levels) {
    for (const auto& [e, where] : edges) {
      if (!vertex_pos.count(e.source))
        throw ParseError(where.line, where.column, "dangling vertex reference " + e.source.str());
      if (!vertex_pos.count(e.target))
        throw ParseError(where.line, where.column, "dangling vertex reference " + e.target.str());
    }
    std::vector<EdgeSpec> plain;
    for (const auto& item : edges) plain.push_back(item.first);
    return FiniteDiagram(*finite_levels, std::move(vertices), plain);
  }

  std::vector<Link> plain;
  for (const auto& [l, where] : links) {
    if (!column_pos.count(l.source))
      throw ParseError(where.first.line, where.first.column, "dangling column reference " + l.source);
    if (!column_pos.count(l.target))
      throw ParseError(where.second.line, where.second.column, "dangling column reference " + l.target);
    plain.push_back(l);
  }
  return PeriodicDiagram(periodic->first, periodic->second, std::move(columns), std::move(plain));
}

}  // namespace

BratteliDiagram parse_diagram(std::string_view text) { return parse_impl(text); }

BratteliDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string serialize(const BratteliDiagram& d) {
  std::ostringstream out;
  if (const auto* f = std::get_if<FiniteDiagram>(&d)) {
    out << "levels " << f->levels() << "\n";
    for (const Vertex& v : f->vertices()) {
      out << "vertex " << v.id.str() << " dim=" << v.dim;
      if (v.terminal) out << " terminal";
      out << "\n";
    }
    for (const Edge& e : f->edges())
      out << "edge " << f->vertex(e.source).id.str() << " -> " << f->vertex(e.target).id.str()
          << " mult=" << e.mult << "\n";
    return out.str();
  }
  const auto& p = std::get<PeriodicDiagram>(d);
  out << "levels periodic preamble=" << p.preamble() << " period=" << p.period() << "\n";
  for (const Column& c : p.columns()) {
    out << "column " << c.name << " start=" << c.start;
    if (c.dim) out << " dim=" << *c.dim;
    if (c.self_mult != 1) out << " mult=" << c.self_mult;
    if (c.extra != 0) out << " extra=" << c.extra;
    if (!c.repeat) out << " once";
    out << "\n";
  }
  for (const Link& l : p.links()) {
    out << "link " << l.source;
    if (l.shift > 0) out << "+" << l.shift;
    if (l.shift < 0) out << "-" << -l.shift;
    out << " -> " << l.target << " mult=" << l.mult << "\n";
  }
  return out.str();
}

}  // namespace afspec
