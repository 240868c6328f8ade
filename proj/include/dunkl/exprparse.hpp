#ifndef DUNKL_EXPRPARSE_HPP
#define DUNKL_EXPRPARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/opalgebra.hpp"

namespace dunkl {

/// Syntax tree of an operator expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := atom ('^' ['-'] int)?
///   atom   := int | name | trig '(' 'phi' [('+' | '-') [int '*'] 'pi' '/' 'k'] ')' | '(' expr ')'
///
/// Names: a b w2 r z zeta i dr dphi R I S Dr Dphi Hk HkExt Xk.
/// Trig: tan cot sec2 csc2 seck tank cotk sec2k csc2k, where the k-suffixed
/// forms take k phi. Multiplication is always written with '*'.
struct OpAst {
  enum class Kind { Add, Sub, Mul, Div, Neg, Pow, Int, Name, Trig };

  Kind kind = Kind::Int;
  std::size_t pos = 0;   ///< 0-based offset into the source text
  std::string text;      ///< digits, name or trig function
  int value = 0;         ///< exponent for Pow, shift j for Trig
  std::vector<OpAst> kids;
};

/// Syntax or elaboration failure at a source offset.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t pos, const std::string& what);
  std::size_t pos() const { return pos_; }
  /// Message plus the source line with a caret under the offending column.
  std::string annotate(const std::string& source) const;

private:
  std::size_t pos_;
};

OpAst parse(const std::string& text);

/// Normal-ordered value. Division and negative powers are allowed only for
/// invertible coefficients free of a, b and w2.
OpExpr elaborate(const OpAst& ast, const FieldPtr& ctx);

/// The same expression as a sum of unevaluated products, so a numeric
/// evaluator can apply it factor by factor. HkExt expands into its defining
/// products.
OpSum elaborate_words(const OpAst& ast, const FieldPtr& ctx);

OpExpr parse_op(const std::string& text, const FieldPtr& ctx);

/// Canonical text; parse_op(pretty(x)) == x.
std::string pretty(const OpExpr& x);

} // namespace dunkl

#endif // DUNKL_EXPRPARSE_HPP
