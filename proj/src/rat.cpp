#include "odc/rat.hpp"

#include <cctype>

namespace odc {

Rat make_rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) { return make_rat(Integer(num), Integer(den)); }

namespace {

Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

} // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return make_rat(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::size_t bit_size(const Integer& z) {
    if (z == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const Rat& q) { return bit_size(q.get_num()) + bit_size(q.get_den()); }

Integer floor_rat(const Rat& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_rat(const Rat& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

} // namespace odc
