#ifndef ODC_RAT_HPP
#define ODC_RAT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace odc {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps values canonical (reduced, positive
/// denominator, zero as 0/1) as long as they are built through make_rat or
/// arithmetic; never assign num/den by hand without canonicalize().
using Rat = mpq_class;

/// Degree of a polynomial. The zero polynomial has no degree (nullopt).
using Degree = std::optional<int>;

inline Degree max_degree(Degree a, Degree b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rat make_rat(const Integer& num, const Integer& den);
Rat make_rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Bit length of |z|; zero has size 0.
std::size_t bit_size(const Integer& z);
std::size_t bit_size(const Rat& q);

Integer floor_rat(const Rat& q);
Integer ceil_rat(const Rat& q);

} // namespace odc

#endif
