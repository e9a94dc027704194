#include "ncdef/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "ncdef/errors.hpp"

namespace ncdef {
namespace {

struct Token {
  enum Kind { Name, Int, Symbol, End } kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Name, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == ';') {
      out.push_back({Token::Symbol, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, int line) : toks_(std::move(tokens)), line_(line) {}
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_symbol(char c) const { return peek().kind == Token::Symbol && peek().text[0] == c; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }
  [[noreturn]] void fail(const std::string& msg) const { fail(peek(), msg); }
  Token expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail("expected " + std::string(what));
    return next();
  }
  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    next();
  }
  int integer(const char* what) {
    Token t = expect(Token::Int, what);
    if (t.text.size() > 9) fail(t, "integer too large");
    return std::stoi(t.text);
  }
  void expect_end() {
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
  }
  Rational rational() {
    Token num = expect(Token::Int, "a number");
    std::string s = num.text;
    if (at_symbol('/')) {
      next();
      Token den = expect(Token::Int, "a denominator");
      if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; }))
        fail(den, "zero denominator");
      s += "/" + den.text;
    }
    return parse_rational(s);
  }
  Rational signed_rational() {
    bool neg = false;
    if (at_symbol('-')) {
      next();
      neg = true;
    }
    Rational r = rational();
    return neg ? Rational(-r) : r;
  }
  int line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::optional<int> idempotent_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (name.size() > 10) return std::nullopt;
  return std::stoi(name.substr(1));
}

NCPoly parse_path(Cursor& cur, const Quiver& q) {
  std::optional<NCPoly> acc;
  while (true) {
    Token t = cur.expect(Token::Name, "an arrow or idempotent");
    NCPoly atom;
    if (auto a = q.find_arrow(t.text)) {
      atom = NCPoly(Path::of_arrow(q, *a));
    } else {
      std::optional<int> v = idempotent_index(t.text);
      if (!v && t.text == "e" && cur.peek().kind == Token::Int) v = cur.integer("a vertex");
      if (!v) cur.fail(t, "unknown arrow " + t.text);
      if (*v < 1 || *v > q.vertex_count()) cur.fail(t, "vertex out of range in " + t.text);
      atom = NCPoly(Path::idempotent(*v - 1));
    }
    acc = acc ? *acc * atom : atom;
    if (acc->is_zero()) cur.fail(t, "path is not composable at " + t.text);
    if (!cur.at_symbol('*')) return *acc;
    cur.next();
  }
}

NCPoly parse_poly(Cursor& cur, const Quiver& q) {
  NCPoly out;
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (cur.at_symbol('+') || cur.at_symbol('-')) {
      sign = cur.next().text == "-" ? -1 : 1;
    } else if (!first) {
      break;
    }
    first = false;
    Rational coeff = 1;
    if (cur.peek().kind == Token::Int) {
      coeff = cur.rational();
      cur.expect_symbol('*');
    }
    out += (sign * coeff) * parse_path(cur, q);
  }
  cur.expect_end();
  return out;
}

}  // namespace

AlgebraPresentation parse_algebra(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<int> vertices;
  std::optional<int> truncation;
  struct PendingArrow {
    Arrow arrow;
    int line, column;
  };
  std::vector<PendingArrow> arrows;
  std::vector<std::pair<int, std::vector<Token>>> relation_lines;

  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int lineno = static_cast<int>(l) + 1;
    Cursor cur(tokenize(lines[l], lineno), lineno);
    if (cur.peek().kind == Token::End) continue;
    Token kw = cur.expect(Token::Name, "a declaration");
    if (kw.text == "vertices") {
      if (vertices) cur.fail(kw, "duplicate vertices declaration");
      Token t = cur.peek();
      vertices = cur.integer("a vertex count");
      if (*vertices < 1) cur.fail(t, "vertex count must be positive");
      cur.expect_end();
    } else if (kw.text == "arrow") {
      Token name = cur.expect(Token::Name, "an arrow name");
      Token s = cur.peek();
      int source = cur.integer("a source vertex");
      int target = cur.integer("a target vertex");
      cur.expect_end();
      for (const auto& a : arrows)
        if (a.arrow.name == name.text) cur.fail(name, "duplicate arrow " + name.text);
      arrows.push_back({{name.text, source - 1, target - 1}, lineno, s.column});
    } else if (kw.text == "relation") {
      std::vector<Token> rest;
      while (true) {
        rest.push_back(cur.next());
        if (rest.back().kind == Token::End) break;
      }
      relation_lines.emplace_back(lineno, std::move(rest));
    } else if (kw.text == "truncate") {
      if (truncation) cur.fail(kw, "duplicate truncate declaration");
      Token t = cur.peek();
      truncation = cur.integer("a truncation degree");
      if (*truncation < 1) cur.fail(t, "truncation degree must be positive");
      cur.expect_end();
    } else {
      cur.fail(kw, "unknown declaration " + kw.text);
    }
  }
  if (!vertices) throw ParseError(1, 1, "missing vertices declaration");

  std::vector<Arrow> list;
  for (const auto& a : arrows) {
    for (int v : {a.arrow.source, a.arrow.target})
      if (v < 0 || v >= *vertices) throw ParseError(a.line, a.column, "vertex out of range in arrow " + a.arrow.name);
    list.push_back(a.arrow);
  }
  AlgebraPresentation pres{Quiver(*vertices, std::move(list)), {}, truncation.value_or(10)};

  for (auto& [lineno, toks] : relation_lines) {
    const int col = toks.front().column;
    Cursor cur(std::move(toks), lineno);
    NCPoly p = parse_poly(cur, pres.quiver);
    if (p.is_zero()) throw ParseError(lineno, col, "relation is zero");
    if (!p.is_parallel()) throw ParseError(lineno, col, "relation mixes non-parallel paths");
    if (p.min_degree() < 2) throw ParseError(lineno, col, "relation has a term of degree < 2");
    pres.relations.push_back(std::move(p));
  }
  validate_admissible(pres);
  return pres;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.length() == 0) return "e" + std::to_string(p.start() + 1);
  std::string s;
  for (int a : p.arrows()) s += (s.empty() ? "" : "*") + q.arrow(a).name;
  return s;
}

std::string format_poly(const Quiver& q, const NCPoly& p, const TermOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Path, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rational c = terms[i].second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (c != 1) s += to_string(c) + "*";
    s += format_path(q, terms[i].first);
  }
  return s;
}

std::string format_algebra(const AlgebraPresentation& pres) {
  const TermOrder order = default_order(pres);
  std::string s = "vertices " + std::to_string(pres.quiver.vertex_count()) + "\n";
  for (const auto& a : pres.quiver.arrows())
    s += "arrow " + a.name + " " + std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + "\n";
  for (const auto& r : pres.relations) s += "relation " + format_poly(pres.quiver, r, order) + "\n";
  s += "truncate " + std::to_string(pres.truncation_degree) + "\n";
  return s;
}

RepModule parse_module(std::string_view text, std::shared_ptr<const AlgebraPresentation> algebra) {
  const Quiver& q = algebra->quiver;
  const auto lines = split_lines(text);
  std::optional<std::vector<int>> dims;
  std::vector<std::optional<std::vector<std::vector<Rational>>>> mats(static_cast<std::size_t>(q.arrow_count()));
  std::vector<std::pair<int, int>> where(mats.size());

  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int lineno = static_cast<int>(l) + 1;
    Cursor cur(tokenize(lines[l], lineno), lineno);
    if (cur.peek().kind == Token::End) continue;
    Token kw = cur.expect(Token::Name, "a declaration");
    if (kw.text == "dim") {
      if (dims) cur.fail(kw, "duplicate dim declaration");
      dims.emplace();
      while (cur.peek().kind != Token::End) dims->push_back(cur.integer("a dimension"));
      if (static_cast<int>(dims->size()) != q.vertex_count())
        cur.fail(kw, "dim needs " + std::to_string(q.vertex_count()) + " entries");
    } else if (kw.text == "mat") {
      Token name = cur.expect(Token::Name, "an arrow name");
      auto a = q.find_arrow(name.text);
      if (!a) cur.fail(name, "unknown arrow " + name.text);
      auto& slot = mats[static_cast<std::size_t>(*a)];
      if (slot) cur.fail(name, "duplicate matrix for " + name.text);
      slot.emplace();
      where[static_cast<std::size_t>(*a)] = {lineno, name.column};
      std::vector<Rational> row;
      while (cur.peek().kind != Token::End) {
        if (cur.at_symbol(';')) {
          cur.next();
          slot->push_back(std::move(row));
          row.clear();
          continue;
        }
        row.push_back(cur.signed_rational());
      }
      if (!row.empty() || slot->empty()) slot->push_back(std::move(row));
    } else {
      cur.fail(kw, "unknown declaration " + kw.text);
    }
  }
  if (!dims) throw ParseError(1, 1, "missing dim declaration");

  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto rows = static_cast<std::size_t>((*dims)[static_cast<std::size_t>(q.arrow(a).source)]);
    const auto cols = static_cast<std::size_t>((*dims)[static_cast<std::size_t>(q.arrow(a).target)]);
    Matrix m(rows, cols);
    if (const auto& given = mats[static_cast<std::size_t>(a)]) {
      auto [lineno, col] = where[static_cast<std::size_t>(a)];
      const bool empty = given->size() == 1 && given->front().empty();
      if (!(empty && (rows == 0 || cols == 0))) {
        if (given->size() != rows) throw ParseError(lineno, col, "matrix needs " + std::to_string(rows) + " rows");
        for (std::size_t i = 0; i < rows; ++i) {
          if ((*given)[i].size() != cols)
            throw ParseError(lineno, col, "matrix rows need " + std::to_string(cols) + " entries");
          for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*given)[i][j];
        }
      }
    }
    actions.push_back(std::move(m));
  }
  return RepModule(std::move(algebra), std::move(*dims), std::move(actions));
}

std::string format_module(const RepModule& m) {
  std::string s = "dim";
  for (int d : m.dims()) s += " " + std::to_string(d);
  s += "\n";
  const Quiver& q = m.quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = m.action(a);
    if (x.rows() == 0 || x.cols() == 0) continue;
    s += "mat " + q.arrow(a).name;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (i) s += " ;";
      for (std::size_t j = 0; j < x.cols(); ++j) s += " " + to_string(x(i, j));
    }
    s += "\n";
  }
  return s;
}

}  // namespace ncdef
