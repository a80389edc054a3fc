#pragma once

#include <gmpxx.h>

#include <string>

namespace bkn {

// Exact rational scalar. Values are kept in lowest terms with a positive
// denominator; every construction path below canonicalizes.
using Rat = mpq_class;

inline int rat_sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Renders "p" for integers, "p/q" otherwise (canonical form).
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q": optional sign, decimal digits, positive q.
// Anything else (floats, exponents, whitespace) throws std::invalid_argument.
Rat parse_rational(const std::string& text);

bool is_valid_rational_text(const std::string& text);

}  // namespace bkn
