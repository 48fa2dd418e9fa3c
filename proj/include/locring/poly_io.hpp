#ifndef LOCRING_POLY_IO_HPP
#define LOCRING_POLY_IO_HPP

#include <string>
#include <string_view>

#include "locring/polynomial.hpp"

namespace locring {

// Polynomial text grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//   varpow := ident ('^' uint)?
//   coeff  := int ('/' uint)?
// A leading sign before the first term is accepted as a convenience so
// that formatted output round-trips. Variables come from the context,
// never from the input. Syntax errors carry a byte offset.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx);

std::string format_poly(const Polynomial& p);

}  // namespace locring

#endif
