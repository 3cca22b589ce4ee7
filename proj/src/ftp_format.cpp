#include "afspec/ftp_format.hpp"

#include "afspec/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace afspec {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '(' || c == ')' || c == '.' ||
         c == '-';
}

class Cursor {
 public:
  Cursor(std::size_t line, std::string_view text) : line_(line), text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a point name");
    return std::string(text_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

 private:
  std::size_t line_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteTopSpace parse_space(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> rows;
  std::vector<bool> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor c(line_no, line);
    if (c.done()) continue;
    const std::string keyword = c.name();
    if (keyword == "point") {
      if (!rows.empty() && std::any_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        c.fail("point declarations must precede minopen lines");
      const std::size_t col = c.column();
      const std::string n = c.name();
      if (index.count(n)) throw ParseError(line_no, col + 1, "duplicate point " + n);
      index[n] = names.size();
      names.push_back(n);
      rows.emplace_back();
      seen.push_back(false);
    } else if (keyword == "minopen") {
      const std::size_t col = c.column() + 1;
      const std::string n = c.name();
      auto it = index.find(n);
      if (it == index.end()) throw ParseError(line_no, col, "unknown point " + n);
      if (seen[it->second]) throw ParseError(line_no, col, "second minopen line for " + n);
      seen[it->second] = true;
      c.expect('=');
      c.expect('{');
      if (!c.accept('}')) {
        do {
          c.skip_space();
          const std::size_t mcol = c.column();
          const std::string m = c.name();
          auto jt = index.find(m);
          if (jt == index.end()) throw ParseError(line_no, mcol, "unknown point " + m);
          rows[it->second].push_back(jt->second);
        } while (c.accept(','));
        c.expect('}');
      }
    } else {
      throw ParseError(line_no, 1, "unknown keyword '" + keyword + "'");
    }
    if (!c.done()) c.fail("unexpected trailing text");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen[i]) throw ParseError(line_no, 1, "point " + names[i] + " has no minopen line");

  std::vector<PointSet> minopen(names.size(), PointSet(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j : rows[i]) minopen[i].set(j);
  return FiniteTopSpace(std::move(names), std::move(minopen));
}

FiniteTopSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

std::string serialize(const FiniteTopSpace& x) {
  std::string out;
  for (const auto& n : x.names()) out += "point " + n + "\n";
  for (std::size_t i = 0; i < x.size(); ++i) out += "minopen " + x.name(i) + " = " + x.format(x.minopen(i)) + "\n";
  return out;
}

}  // namespace afspec
