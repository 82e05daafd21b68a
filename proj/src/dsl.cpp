#include "quivkit/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace quivkit::dsl {

std::string to_string(const Pos& pos) { return std::to_string(pos.line) + ":" + std::to_string(pos.column); }

DslError::DslError(Pos pos, const std::string& message)
    : std::runtime_error(to_string(pos) + ": " + message), pos_(pos), message_(message) {}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Punct, "->", pos});
      advance(2);
    } else if (std::string_view("{}:;,=[]()*+-/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), pos});
      advance(1);
    } else {
      throw DslError(pos, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) doc.declarations.push_back(declaration());
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  bool is(const std::string& punct, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
  }
  bool is_keyword(const std::string& word) const { return peek().kind == Tok::Ident && peek().text == word; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw DslError(peek().pos, "expected " + expected + ", found " + describe(peek()));
  }

  void expect(const std::string& punct) {
    if (!is(punct)) fail("'" + punct + "'");
    next();
  }
  bool accept(const std::string& punct) {
    if (!is(punct)) return false;
    next();
    return true;
  }
  void keyword(const std::string& word) {
    if (!is_keyword(word)) fail("'" + word + "'");
    next();
  }

  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(what);
    return next().text;
  }
  /// Vertex names may also be plain integers.
  std::string vertex() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Int) fail("a vertex name");
    return next().text;
  }
  long integer(const std::string& what) {
    if (peek().kind != Tok::Int) fail(what);
    const Token& t = next();
    if (t.text.size() > 9) throw DslError(t.pos, "integer " + t.text + " is too large");
    return std::stol(t.text);
  }

  std::string declare(const std::string& name, Pos pos) {
    const auto [it, inserted] = names_.emplace(name, pos);
    if (!inserted) {
      throw DslError(pos, "duplicate name '" + name + "' at " + to_string(pos) + ", first declared at " +
                              to_string(it->second));
    }
    return name;
  }

  Declaration declaration() {
    const Pos pos = peek().pos;
    if (is_keyword("field")) return field_decl();
    if (is_keyword("quiver")) return quiver_decl();
    if (is_keyword("vquiver")) return vquiver_decl();
    if (is_keyword("algebra")) return algebra_decl();
    if (is_keyword("morphism")) return morphism_decl();
    if (is_keyword("check")) return check_decl();
    throw DslError(pos, "expected a declaration (field, quiver, vquiver, algebra, morphism or check), found " +
                            describe(peek()));
  }

  FieldDecl field_decl() {
    FieldDecl d{peek().pos, 0};
    next();
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "Q") {
      next();
    } else if (t.kind == Tok::Ident && t.text.size() > 1 && t.text[0] == 'F' &&
               t.text.find_first_not_of("0123456789", 1) == std::string::npos && t.text.size() <= 10) {
      const std::uint64_t p = std::stoull(t.text.substr(1));
      if (!is_prime(p) || p > 0xFFFFFFFFull) throw DslError(t.pos, t.text.substr(1) + " is not a prime");
      d.characteristic = static_cast<std::uint32_t>(p);
      next();
    } else {
      fail("Q or F<p>");
    }
    expect(";");
    return d;
  }

  std::vector<std::string> vertex_list() {
    std::vector<std::string> out{vertex()};
    while (accept(",")) out.push_back(vertex());
    return out;
  }

  std::vector<std::string> ident_list(const std::string& what) {
    std::vector<std::string> out{ident(what)};
    while (accept(",")) out.push_back(ident(what));
    return out;
  }

  QuiverDecl quiver_decl() {
    QuiverDecl d;
    next();
    d.pos = peek().pos;
    d.name = declare(ident("a quiver name"), d.pos);
    expect("{");
    keyword("vertices");
    expect(":");
    d.vertices = vertex_list();
    expect(";");
    if (is_keyword("arrows")) {
      next();
      expect(":");
      do {
        ArrowDecl a;
        a.pos = peek().pos;
        a.label = ident("an arrow name");
        expect(":");
        a.source = vertex();
        expect("->");
        a.target = vertex();
        d.arrows.push_back(std::move(a));
      } while (accept(","));
      expect(";");
    }
    expect("}");
    return d;
  }

  VQuiverDecl vquiver_decl() {
    VQuiverDecl d;
    next();
    d.pos = peek().pos;
    d.name = declare(ident("a vquiver name"), d.pos);
    expect("{");
    keyword("vertices");
    expect(":");
    d.vertices = vertex_list();
    expect(";");
    while (is_keyword("space")) {
      SpaceDecl s;
      s.pos = next().pos;
      s.source = vertex();
      expect("->");
      s.target = vertex();
      expect("=");
      expect("[");
      if (!is("]")) s.basis = ident_list("an arrow name");
      expect("]");
      expect(";");
      d.spaces.push_back(std::move(s));
    }
    expect("}");
    return d;
  }

  AlgebraDecl algebra_decl() {
    AlgebraDecl d;
    next();
    d.pos = peek().pos;
    d.name = declare(ident("an algebra name"), d.pos);
    expect("=");
    if (is_keyword("kvq")) {
      next();
      KvqBody b;
      expect("(");
      b.quiver = ident("a quiver name");
      if (accept(",")) {
        keyword("level");
        expect("=");
        const Pos lp = peek().pos;
        const long level = integer("a truncation level");
        if (level < 2) throw DslError(lp, "truncation level must be at least 2");
        b.level = static_cast<int>(level);
      }
      expect(")");
      if (accept("/")) {
        keyword("ideal");
        expect("(");
        b.relations.push_back(expr());
        while (accept(",")) b.relations.push_back(expr());
        expect(")");
      }
      d.body = std::move(b);
    } else if (is_keyword("table")) {
      next();
      TableBody b;
      expect("{");
      keyword("basis");
      expect(":");
      b.basis = ident_list("a basis label");
      expect(";");
      keyword("unit");
      expect(":");
      b.unit = expr();
      expect(";");
      while (!is("}")) {
        ProductDecl p;
        p.pos = peek().pos;
        p.left = ident("a basis label");
        expect("*");
        p.right = ident("a basis label");
        expect("=");
        p.value = expr();
        expect(";");
        b.products.push_back(std::move(p));
      }
      expect("}");
      d.body = std::move(b);
    } else {
      fail("kvq(...) or table { ... }");
    }
    accept(";");
    return d;
  }

  MorphismDecl morphism_decl() {
    MorphismDecl d;
    next();
    d.pos = peek().pos;
    d.name = declare(ident("a morphism name"), d.pos);
    expect(":");
    d.source = ident("an algebra name");
    expect("->");
    d.target = ident("an algebra name");
    expect("{");
    while (!is("}")) {
      ImageDecl im;
      im.pos = peek().pos;
      im.generator = ident("a generator");
      expect("->");
      im.image = expr();
      expect(";");
      d.images.push_back(std::move(im));
    }
    expect("}");
    return d;
  }

  CheckDecl check_decl() {
    CheckDecl d;
    d.pos = next().pos;
    const Pos kp = peek().pos;
    d.kind = ident("sim1 or adjunction");
    if (d.kind != "sim1" && d.kind != "adjunction") throw DslError(kp, "unknown check '" + d.kind + "'");
    expect("(");
    for (int k = 0; k < 2; ++k) {
      if (k > 0) expect(",");
      d.arg_pos.push_back(peek().pos);
      d.args.push_back(ident("a name"));
    }
    expect(")");
    accept(";");
    return d;
  }

  Rational coefficient() {
    const long num = integer("a coefficient");
    if (accept("/")) {
      const Pos dp = peek().pos;
      const long den = integer("a denominator");
      if (den == 0) throw DslError(dp, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Term term(bool negative) {
    Term t;
    if (peek().kind == Tok::Int) {
      t.coefficient = coefficient();
      if (!accept("*")) {
        if (negative) t.coefficient = -t.coefficient;
        return t;
      }
    }
    t.factors.push_back(ident("a basis label or coefficient"));
    while (accept("*")) t.factors.push_back(ident("a basis label"));
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  Expr expr() {
    Expr e;
    e.pos = peek().pos;
    e.terms.push_back(term(accept("-")));
    while (is("+") || is("-")) {
      const bool negative = next().text == "-";
      e.terms.push_back(term(negative));
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::map<std::string, Pos> names_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

struct Printer {
  std::ostringstream out;

  void operator()(const FieldDecl& d) {
    out << "field " << (d.characteristic == 0 ? std::string("Q") : "F" + std::to_string(d.characteristic)) << ";\n";
  }
  void operator()(const QuiverDecl& d) {
    out << "quiver " << d.name << " {\n  vertices: " << join(d.vertices, ", ") << ";\n";
    if (!d.arrows.empty()) {
      std::vector<std::string> arrows;
      for (const ArrowDecl& a : d.arrows) arrows.push_back(a.label + ": " + a.source + " -> " + a.target);
      out << "  arrows: " << join(arrows, ", ") << ";\n";
    }
    out << "}\n";
  }
  void operator()(const VQuiverDecl& d) {
    out << "vquiver " << d.name << " {\n  vertices: " << join(d.vertices, ", ") << ";\n";
    for (const SpaceDecl& s : d.spaces) {
      out << "  space " << s.source << " -> " << s.target << " = [" << join(s.basis, ", ") << "];\n";
    }
    out << "}\n";
  }
  void operator()(const AlgebraDecl& d) {
    out << "algebra " << d.name << " = ";
    if (const auto* k = std::get_if<KvqBody>(&d.body)) {
      out << "kvq(" << k->quiver;
      if (k->level) out << ", level=" << *k->level;
      out << ")";
      if (!k->relations.empty()) {
        std::vector<std::string> rels;
        for (const Expr& e : k->relations) rels.push_back(print(e));
        out << " / ideal(" << join(rels, ", ") << ")";
      }
      out << ";\n";
      return;
    }
    const auto& t = std::get<TableBody>(d.body);
    out << "table {\n  basis: " << join(t.basis, ", ") << ";\n  unit: " << print(t.unit) << ";\n";
    for (const ProductDecl& p : t.products) out << "  " << p.left << "*" << p.right << " = " << print(p.value) << ";\n";
    out << "};\n";
  }
  void operator()(const MorphismDecl& d) {
    out << "morphism " << d.name << ": " << d.source << " -> " << d.target << " {\n";
    for (const ImageDecl& im : d.images) out << "  " << im.generator << " -> " << print(im.image) << ";\n";
    out << "}\n";
  }
  void operator()(const CheckDecl& d) { out << "check " << d.kind << "(" << join(d.args, ", ") << ");\n"; }
};

}  // namespace

Document parse(std::string_view text) { return Parser(lex(text)).document(); }

std::string print(const Expr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    const bool negative = t.coefficient < Rational(0);
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.factors.empty()) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += join(t.factors, "*");
  }
  return out;
}

std::string print(const Document& doc) {
  Printer p;
  for (std::size_t i = 0; i < doc.declarations.size(); ++i) {
    if (i > 0) p.out << "\n";
    std::visit(p, doc.declarations[i]);
  }
  return p.out.str();
}

}  // namespace quivkit::dsl
