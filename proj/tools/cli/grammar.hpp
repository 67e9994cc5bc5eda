// Parser for the generator mini-language accepted by the command line:
//
//   monomial(k=INT, theta=REAL)
//   extremal1(b1=COMPLEX, theta=REAL)
//   blaschke(phi=REAL, m=INT, zeros=[COMPLEX, ...])
//   herglotz(atoms=[(WEIGHT, ANGLE), ...])
//   cayley(theta=REAL, SCHWARZ_EXPR)
//   invcayley(theta=REAL, CARA_EXPR)
//
// Scalars are arithmetic expressions over numbers, `pi`, the imaginary unit
// `i` (also as a suffix, `0.5i`), `+ - * /`, `(re, im)` pairs and
// `polar(r, angle)`.  Named arguments may appear in any order; theta and phi
// default to 0, m to 1 and zeros to the empty list.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "schwarzlab/families.hpp"

namespace schwarzlab::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Generator = std::variant<SchwarzGenerator, CaratheodoryGenerator>;

Generator parse_generator(std::string_view text);

/// "re", "re,im" or any scalar expression of the grammar.
Complex parse_complex(std::string_view text);

}  // namespace schwarzlab::cli
