#ifndef ODC_TERMIO_HPP
#define ODC_TERMIO_HPP

#include "odc/curves.hpp"
#include "odc/hyperterm.hpp"
#include "odc/ratcase.hpp"
#include "odc/telescope.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace odc {

/// Syntax or validation error in an input document. Line and column are 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }
    /// Message without the position prefix.
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
    int line_;
    int column_;
};

/// Polynomial expression in n and k: integer and a/b literals, + - * ^ and
/// parentheses; division only by nonzero constants.
PolyNK parse_poly(std::string_view text);
/// Same grammar, rejecting k.
PolyN parse_poly_n(std::string_view text);

ProperTerm parse_term(std::string_view text);
std::string serialize_term(const ProperTerm& h);

DecomposedInput parse_decomp(std::string_view text);
std::string serialize_decomp(const DecomposedInput& inp);

/// Operator document: `order: r`, `L: [l_0, ..., l_r]` and an optional
/// certificate given by `C_num:` and `C_den:`.
struct OperatorFile {
    Telescoper L;
    std::optional<RatFuncNK> C;
};

OperatorFile parse_operator(std::string_view text);
std::string serialize_operator(const Telescoper& L, const std::optional<RatFuncNK>& C = std::nullopt);

/// Rational function input for decompose: `num:`, `den:` and optionally a
/// part g = `g_num:`/`g_den:` whose difference S_k(g) - g is subtracted first.
struct RationalInput {
    PolyNK num;
    PolyNK den = PolyNK(1);
    std::optional<RatFuncNK> g;

    RatFuncNK reduced() const;
};

RationalInput parse_rational(std::string_view text);

std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::string curve_csv(const CurveSpec& curve, int rmin, int rmax);
std::string region_csv(const Region& region);
std::string cost_csv(const std::vector<CostRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace odc

#endif
