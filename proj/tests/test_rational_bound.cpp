#include "doctest.h"
#include "support.hpp"

#include "odc/curves.hpp"
#include "odc/ratcase.hpp"
#include "odc/termio.hpp"

#include <filesystem>

using namespace odc;
using namespace odc::testing;

namespace {

std::vector<std::pair<std::string, DecomposedInput>> decomp_fixtures() {
    std::vector<std::pair<std::string, DecomposedInput>> out;
    for (const auto& e : std::filesystem::directory_iterator(fixture("decomp")))
        if (e.path().extension() == ".decomp")
            out.emplace_back(e.path().stem().string(), parse_decomp(read_file(e.path().string())));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Orders checked above the threshold; the large examples get one order only.
int window(const DecomposedInput& d) { return d.deg_u() >= 6 ? 0 : 3; }

// Smallest degree at which the joint ansatz has more unknowns than equations.
int count_degree(const DecomposedInput& d, int r) {
    for (int deg = 0; deg < 400; ++deg) {
        const AnsatzCounts c = rational_ansatz_counts(d, r, deg);
        if (c.columns > c.rows) return deg;
    }
    return -1;
}

} // namespace

TEST_SUITE("rational_bound") {

TEST_CASE("telescopers exist at every degree above the rational curve") {
    int failures = 0, raised = 0;
    for (const auto& [name, d] : decomp_fixtures()) {
        const CurveSpec c = curve_rational(RationalParams::from(d));
        for (int r = c.rmin; r <= c.rmin + window(d); ++r) {
            // the ansatz carries the factor u, so degrees below deg u are out of its reach
            const int dm = std::max(dmin(c, r), d.deg_u());
            if (dm > dmin(c, r)) ++raised;
            const auto L = solve_rational(d, r, dm);
            const bool ok = L && verify_rational(d, *L);
            if (!ok) ++failures;
            CHECK_MESSAGE(ok, name << ": no telescoper at (r, d) = (" << r << ", " << dm << ")");
        }
    }
    MESSAGE("points below the guarantee: " << failures << ", points raised to deg u: " << raised);
}

TEST_CASE("telescopers exist once the ansatz has more unknowns than equations") {
    for (const auto& [name, d] : decomp_fixtures()) {
        const int A = d.sum_ap();
        for (int r = A; r <= A + window(d); ++r) {
            INFO(name << " r=" << r);
            const int dc = count_degree(d, r);
            REQUIRE(dc >= 0);
            const auto L = solve_rational(d, r, std::max(dc, d.deg_u()));
            REQUIRE(L.has_value());
            REQUIRE(verify_rational(d, *L));
        }
    }
}

} // TEST_SUITE
