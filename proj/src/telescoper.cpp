#include "odc/telescoper.hpp"

namespace odc {

Degree Telescoper::degree() const {
    Degree d;
    for (const auto& c : coeffs) d = max_degree(d, c.degree());
    return d;
}

bool Telescoper::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

Rat Telescoper::normalize() {
    Integer num = 0, den = 1;
    for (const auto& c : coeffs)
        for (const auto& x : c.coeffs()) {
            if (x == 0) continue;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
    if (num == 0) return Rat(1);
    Rat content = make_rat(num, den);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        if (!it->is_zero()) {
            if (it->lc() < 0) content = -content;
            break;
        }
    const Rat inv = 1 / content;
    for (auto& c : coeffs) c *= inv;
    return content;
}

std::string Telescoper::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs[i].str() + ")";
        if (i == 1) out += "*S";
        if (i > 1) out += "*S^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace odc
