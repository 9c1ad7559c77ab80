#pragma once

// Expression language:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] integer)?
//   atom   := A | B | C | K | K0 | K1 | K2 | p | q | integer | '(' expr ')' | '[' expr ',' expr ']'
// q means p^2. '/' and negative exponents need a nonzero scalar on the right
// (resp. as base). Products are explicit: "AB" is an unknown identifier.

#include "qheis/oracle.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qheis {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct SourceNode;
using Source = std::shared_ptr<const SourceNode>;

struct SourceNode {
    enum class Kind { Gen, Scalar, Neg, Add, Sub, Mul, Div, Pow, Commutator };
    Kind kind;
    std::string name;    // Gen: "A", "K1", ...
    RationalFunction c;  // Scalar
    long exponent = 0;   // Pow
    std::vector<Source> args;
    std::size_t offset = 0;
};

Source parse(const std::string& text);
// "X == Y" split at the single top-level "==".
std::pair<Source, Source> parse_equation(const std::string& text);

// Throws MathError for division by a non-scalar or zero, and negative powers of non-scalars.
PElement evaluate(const Source& s);

// Literal matrix evaluation; no normal forms involved.
RepValue rep_of_source(const Source& s, const TruncatedRep& r);

// Parses and evaluates; the result must be a single basis monomial with coefficient 1.
PMonomial parse_monomial(const std::string& text);

} // namespace qheis
