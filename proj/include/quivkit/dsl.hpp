#pragma once

// The quivkit document language: syntax tree, parser and canonical printer.
// The grammar is in docs/grammar.md.

#include "quivkit/field.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace quivkit::dsl {

/// 1-based line and column.  Positions never take part in equality, so two
/// documents compare equal when they have the same content.
struct Pos {
  int line = 1;
  int column = 1;

  friend bool operator==(const Pos&, const Pos&) { return true; }
};

std::string to_string(const Pos& pos);

/// A syntax or semantic error at a position in the input.
class DslError : public std::runtime_error {
 public:
  DslError(Pos pos, const std::string& message);

  const Pos& pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Pos pos_;
  std::string message_;
};

/// coefficient * factors[0] * factors[1] * ...; an empty product is the unit.
struct Term {
  Rational coefficient = 1;
  std::vector<std::string> factors;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Expr {
  Pos pos;
  std::vector<Term> terms;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct FieldDecl {
  Pos pos;
  std::uint32_t characteristic = 0;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct ArrowDecl {
  Pos pos;
  std::string label;
  std::string source;
  std::string target;

  friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

struct QuiverDecl {
  Pos pos;
  std::string name;
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;

  friend bool operator==(const QuiverDecl&, const QuiverDecl&) = default;
};

struct SpaceDecl {
  Pos pos;
  std::string source;
  std::string target;
  std::vector<std::string> basis;

  friend bool operator==(const SpaceDecl&, const SpaceDecl&) = default;
};

struct VQuiverDecl {
  Pos pos;
  std::string name;
  std::vector<std::string> vertices;
  std::vector<SpaceDecl> spaces;

  friend bool operator==(const VQuiverDecl&, const VQuiverDecl&) = default;
};

/// kvq(Q, level=n) / ideal(r1, r2, ...)
struct KvqBody {
  std::string quiver;
  std::optional<int> level;
  std::vector<Expr> relations;

  friend bool operator==(const KvqBody&, const KvqBody&) = default;
};

struct ProductDecl {
  Pos pos;
  std::string left;
  std::string right;
  Expr value;

  friend bool operator==(const ProductDecl&, const ProductDecl&) = default;
};

/// Structure constants; products that are not listed are zero.
struct TableBody {
  std::vector<std::string> basis;
  Expr unit;
  std::vector<ProductDecl> products;

  friend bool operator==(const TableBody&, const TableBody&) = default;
};

struct AlgebraDecl {
  Pos pos;
  std::string name;
  std::variant<KvqBody, TableBody> body;

  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct ImageDecl {
  Pos pos;
  std::string generator;
  Expr image;

  friend bool operator==(const ImageDecl&, const ImageDecl&) = default;
};

struct MorphismDecl {
  Pos pos;
  std::string name;
  std::string source;
  std::string target;
  std::vector<ImageDecl> images;

  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

/// check sim1(f, g) or check adjunction(Q, A).
struct CheckDecl {
  Pos pos;
  std::string kind;
  std::vector<std::string> args;
  std::vector<Pos> arg_pos;

  friend bool operator==(const CheckDecl& a, const CheckDecl& b) { return a.kind == b.kind && a.args == b.args; }
};

using Declaration = std::variant<FieldDecl, QuiverDecl, VQuiverDecl, AlgebraDecl, MorphismDecl, CheckDecl>;

struct Document {
  std::vector<Declaration> declarations;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws DslError on the first syntax error.  Names are checked for
/// uniqueness here; references are resolved by elaboration.
Document parse(std::string_view text);

/// Canonical text: one declaration per paragraph, comments dropped.
std::string print(const Document& doc);
std::string print(const Expr& e);

}  // namespace quivkit::dsl
