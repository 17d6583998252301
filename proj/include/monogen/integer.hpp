#ifndef MONOGEN_INTEGER_HPP
#define MONOGEN_INTEGER_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace monogen {

using Integer = mpz_class;

/* Parses a decimal integer with optional sign. Throws DomainError on
 * anything else (no whitespace, no base prefixes). */
Integer parse_integer(std::string_view text);

/* Comma separated list of decimal integers, e.g. "-1,-2,1". */
std::vector<Integer> parse_integer_list(std::string_view text);

inline std::string to_string(Integer const & v) { return v.get_str(10); }

inline int sign(Integer const & v) { return sgn(v); }

Integer ipow(Integer const & base, unsigned long exp);

/* floor(sqrt(v)) for v >= 0 */
Integer isqrt(Integer const & v);

bool is_perfect_square(Integer const & v);

/* Positive divisors of |n| (n != 0), ascending. Factors by trial division
 * followed by Pollard-Brent on the cofactor. */
std::vector<Integer> positive_divisors(Integer const & n);

}  // namespace monogen

#endif  // MONOGEN_INTEGER_HPP
