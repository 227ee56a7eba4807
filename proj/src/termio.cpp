#include "odc/termio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace odc {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      msg_(msg), line_(line), column_(column) {}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view s, int line, int col0, bool allow_k)
        : s_(s), line_(line), col0_(col0), allow_k_(allow_k) {}

    PolyNK parse_all() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty expression");
        PolyNK v = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    PolyNK expr() {
        PolyNK v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    PolyNK term() {
        PolyNK v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                PolyNK d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by nonzero constants");
                }
                v *= 1 / d.coeff(0, 0);
            } else {
                return v;
            }
        }
    }

    PolyNK unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    PolyNK power() {
        PolyNK b = atom();
        if (eat('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            return b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return b;
    }

    PolyNK atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return PolyNK(Rat(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (c == 'n') {
            ++pos_;
            return PolyNK::n();
        }
        if (c == 'k') {
            if (!allow_k_) fail("k is not allowed here");
            ++pos_;
            return PolyNK::k();
        }
        if (c == '(') {
            ++pos_;
            PolyNK v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
    bool allow_k_;
};

struct Entry {
    std::string key;
    std::string value;
    int line;
    int value_col; // 1-based column of value[0]
};

std::vector<Entry> read_entries(std::string_view text) {
    std::vector<Entry> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] != '#') {
            const std::size_t kstart = i;
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
            if (i == kstart) throw ParseError("expected a key", line_no, static_cast<int>(i) + 1);
            std::string key(line.substr(kstart, i - kstart));
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size() || line[i] != ':') throw ParseError("expected ':' after key", line_no, static_cast<int>(i) + 1);
            ++i;
            out.push_back({std::move(key), std::string(line.substr(i)), line_no, static_cast<int>(i) + 1});
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

PolyNK poly_at(const Entry& e) { return ExprParser(e.value, e.line, e.value_col, true).parse_all(); }

PolyN poly_n_at(std::string_view s, int line, int col) {
    PolyNK p = ExprParser(s, line, col, false).parse_all();
    return p.as_poly_n();
}

Rat rat_at(const Entry& e) {
    const PolyNK p = poly_at(e);
    if (!p.is_constant()) throw ParseError("expected a rational constant", e.line, e.value_col);
    return p.coeff(0, 0);
}

struct Piece {
    std::string text;
    int col;
};

// Splits at top-level commas; the column of each piece is 1-based.
std::vector<Piece> split_top(std::string_view s, int col0) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back({std::string(s.substr(start, i - start)), col0 + static_cast<int>(start)});
            start = i + 1;
        } else if (s[i] == '(' || s[i] == '[') {
            ++depth;
        } else if (s[i] == ')' || s[i] == ']') {
            --depth;
        }
    }
    return out;
}

// Strips surrounding whitespace and the given delimiters; returns the inner
// text and its starting column.
Piece strip_delims(const Entry& e, char open, char close) {
    std::string_view v = e.value;
    std::size_t a = 0, b = v.size();
    while (a < b && std::isspace(static_cast<unsigned char>(v[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(v[b - 1]))) --b;
    if (a >= b || v[a] != open) throw ParseError(std::string("expected '") + open + "'", e.line, e.value_col + static_cast<int>(a));
    if (v[b - 1] != close) throw ParseError(std::string("expected '") + close + "'", e.line, e.value_col + static_cast<int>(b - 1));
    return {std::string(v.substr(a + 1, b - a - 2)), e.value_col + static_cast<int>(a) + 1};
}

std::vector<GammaArg> parse_gamma_list(const Entry& e, bool numerator) {
    std::vector<GammaArg> out;
    if (blank(e.value)) return out;
    for (const auto& piece : split_top(e.value, e.value_col)) {
        std::string_view s = piece.text;
        std::size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const int col = piece.col + static_cast<int>(i);
        if (s.substr(i, 5) != "Gamma") throw ParseError("expected Gamma(...)", e.line, col);
        i += 5;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || s[i] != '(') throw ParseError("expected '(' after Gamma", e.line, piece.col + static_cast<int>(i));
        std::size_t close = s.find_last_of(')');
        if (close == std::string_view::npos || close < i) throw ParseError("missing ')'", e.line, piece.col + static_cast<int>(s.size()));
        if (!blank(s.substr(close + 1))) throw ParseError("unexpected text after Gamma(...)", e.line, piece.col + static_cast<int>(close) + 1);
        const int arg_col = piece.col + static_cast<int>(i) + 1;
        const PolyNK arg = ExprParser(s.substr(i + 1, close - i - 1), e.line, arg_col, true).parse_all();
        if (arg.degree().value_or(0) > 1) throw ParseError("Gamma argument must be linear", e.line, arg_col);
        const Rat cn = arg.coeff(1, 0), ck = arg.coeff(0, 1);
        if (!is_integer(cn) || !is_integer(ck)) throw ParseError("non-integer linear coefficient", e.line, arg_col);
        if (cn < 0) throw ParseError("negative n-coefficient", e.line, arg_col);
        if (!cn.get_num().fits_sint_p() || !ck.get_num().fits_sint_p())
            throw ParseError("coefficient out of range", e.line, arg_col);
        out.push_back(make_gamma(numerator, static_cast<int>(cn.get_num().get_si()),
                                 static_cast<int>(ck.get_num().get_si()), arg.coeff(0, 0)));
    }
    return out;
}

void reject_duplicate(std::vector<std::string>& seen, const Entry& e) {
    for (const auto& s : seen)
        if (s == e.key) throw ParseError("duplicate key '" + e.key + "'", e.line, 1);
    seen.push_back(e.key);
}

std::string gamma_str(const GammaArg& g) { return "Gamma(" + g.argument().str() + ")"; }

std::string rat_str(const Rat& q) { return to_string(q); }

} // namespace

PolyNK parse_poly(std::string_view text) { return ExprParser(text, 1, 1, true).parse_all(); }

PolyN parse_poly_n(std::string_view text) { return poly_n_at(text, 1, 1); }

ProperTerm parse_term(std::string_view text) {
    ProperTerm h;
    std::vector<std::string> seen;
    for (const auto& e : read_entries(text)) {
        reject_duplicate(seen, e);
        if (e.key == "poly") {
            h.p = poly_at(e);
            if (h.p.is_zero()) throw ParseError("polynomial part must be nonzero", e.line, e.value_col);
        } else if (e.key == "x" || e.key == "y") {
            const Rat v = rat_at(e);
            if (v == 0) throw ParseError(e.key + " must be nonzero", e.line, e.value_col);
            (e.key == "x" ? h.x : h.y) = v;
        } else if (e.key == "num" || e.key == "den") {
            auto gs = parse_gamma_list(e, e.key == "num");
            h.factors.insert(h.factors.end(), gs.begin(), gs.end());
        } else {
            throw ParseError("unknown key '" + e.key + "'", e.line, 1);
        }
    }
    // numerator factors first, each side in file order
    std::stable_partition(h.factors.begin(), h.factors.end(), [](const GammaArg& g) { return in_numerator(g.family); });
    return h;
}

std::string serialize_term(const ProperTerm& h) {
    std::string num, den;
    for (const auto& g : h.factors) {
        std::string& side = in_numerator(g.family) ? num : den;
        if (!side.empty()) side += ", ";
        side += gamma_str(g);
    }
    std::ostringstream os;
    os << "poly: " << h.p.str() << "\n"
       << "x: " << rat_str(h.x) << "\n"
       << "y: " << rat_str(h.y) << "\n"
       << "num: " << num << "\n"
       << "den: " << den << "\n";
    std::string out = os.str();
    // no trailing blanks on empty lists
    std::string cleaned;
    std::istringstream is(out);
    for (std::string line; std::getline(is, line);) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        cleaned += line + "\n";
    }
    return cleaned;
}

DecomposedInput parse_decomp(std::string_view text) {
    DecomposedInput inp;
    bool have_u = false;
    struct Pending {
        std::optional<RecOperator> V;
        std::optional<RationalSummand> f;
        int line;
    };
    std::vector<Pending> parts;
    int last_line = 1;
    for (const auto& e : read_entries(text)) {
        last_line = e.line;
        if (e.key == "u") {
            if (have_u) throw ParseError("duplicate key 'u'", e.line, 1);
            have_u = true;
            inp.u = poly_n_at(e.value, e.line, e.value_col);
            if (inp.u.is_zero()) throw ParseError("u must be nonzero", e.line, e.value_col);
        } else if (e.key == "part") {
            if (!blank(e.value)) throw ParseError("'part:' takes no value", e.line, e.value_col);
            parts.push_back({std::nullopt, std::nullopt, e.line});
        } else if (e.key == "f" || e.key == "V") {
            if (parts.empty()) throw ParseError("'" + e.key + "' outside a part block", e.line, 1);
            Pending& cur = parts.back();
            if (e.key == "f") {
                if (cur.f) throw ParseError("duplicate key 'f'", e.line, 1);
                const Piece inner = strip_delims(e, '(', ')');
                const auto fields = split_top(inner.text, inner.col);
                if (fields.size() != 4) throw ParseError("f needs four fields (a, ap, app, e)", e.line, inner.col);
                auto int_field = [&](const Piece& p) {
                    const PolyNK v = ExprParser(p.text, e.line, p.col, false).parse_all();
                    if (!v.is_constant() || !is_integer(v.coeff(0, 0)) || !v.coeff(0, 0).get_num().fits_sint_p())
                        throw ParseError("expected an integer", e.line, p.col);
                    return static_cast<int>(v.coeff(0, 0).get_num().get_si());
                };
                RationalSummand f;
                f.a = int_field(fields[0]);
                f.ap = int_field(fields[1]);
                const PolyNK app = ExprParser(fields[2].text, e.line, fields[2].col, false).parse_all();
                if (!app.is_constant()) throw ParseError("expected a rational constant", e.line, fields[2].col);
                f.app = app.coeff(0, 0);
                f.e = int_field(fields[3]);
                try {
                    f.validate();
                } catch (const PreconditionError& err) {
                    throw ParseError(err.what(), e.line, e.value_col);
                }
                cur.f = f;
            } else {
                if (cur.V) throw ParseError("duplicate key 'V'", e.line, 1);
                const Piece inner = strip_delims(e, '[', ']');
                std::vector<PolyN> cs;
                if (!blank(inner.text))
                    for (const auto& p : split_top(inner.text, inner.col)) cs.push_back(poly_n_at(p.text, e.line, p.col));
                cur.V = RecOperator(std::move(cs));
            }
        } else {
            throw ParseError("unknown key '" + e.key + "'", e.line, 1);
        }
    }
    for (const auto& p : parts) {
        if (!p.f) throw ParseError("part block without 'f'", p.line, 1);
        if (!p.V) throw ParseError("part block without 'V'", p.line, 1);
        inp.parts.push_back({*p.V, *p.f});
    }
    try {
        inp.validate();
    } catch (const PreconditionError& err) {
        throw ParseError(err.what(), last_line, 1);
    }
    return inp;
}

std::string serialize_decomp(const DecomposedInput& inp) {
    std::ostringstream os;
    os << "u: " << inp.u.str() << "\n";
    for (const auto& part : inp.parts) {
        os << "part:\n";
        os << "f: (" << part.f.a << ", " << part.f.ap << ", " << rat_str(part.f.app) << ", " << part.f.e << ")\n";
        os << "V: [";
        for (std::size_t i = 0; i < part.V.coeffs.size(); ++i) os << (i ? ", " : "") << part.V.coeffs[i].str();
        os << "]\n";
    }
    return os.str();
}

OperatorFile parse_operator(std::string_view text) {
    OperatorFile out;
    std::optional<int> order;
    int order_line = 1;
    bool have_L = false;
    std::optional<PolyNK> cnum, cden;
    int c_line = 1;
    std::vector<std::string> seen;
    for (const auto& e : read_entries(text)) {
        reject_duplicate(seen, e);
        if (e.key == "order") {
            const Rat v = rat_at(e);
            if (!is_integer(v) || v < 0 || !v.get_num().fits_sint_p())
                throw ParseError("order must be a nonnegative integer", e.line, e.value_col);
            order = static_cast<int>(v.get_num().get_si());
            order_line = e.line;
        } else if (e.key == "L") {
            const Piece inner = strip_delims(e, '[', ']');
            if (blank(inner.text)) throw ParseError("operator needs at least one coefficient", e.line, inner.col);
            for (const auto& p : split_top(inner.text, inner.col)) out.L.coeffs.push_back(poly_n_at(p.text, e.line, p.col));
            have_L = true;
        } else if (e.key == "C_num") {
            cnum = poly_at(e);
            c_line = e.line;
        } else if (e.key == "C_den") {
            cden = poly_at(e);
            if (cden->is_zero()) throw ParseError("certificate denominator is zero", e.line, e.value_col);
            c_line = e.line;
        } else {
            throw ParseError("unknown key '" + e.key + "'", e.line, 1);
        }
    }
    if (!have_L) throw ParseError("missing key 'L'", 1, 1);
    if (order && *order != out.L.order())
        throw ParseError("order does not match the number of coefficients", order_line, 1);
    if (cnum || cden) out.C = RatFuncNK(cnum.value_or(PolyNK()), cden.value_or(PolyNK(1)));
    (void)c_line;
    return out;
}

std::string serialize_operator(const Telescoper& L, const std::optional<RatFuncNK>& C) {
    std::ostringstream os;
    os << "order: " << L.order() << "\n";
    os << "L: [";
    for (std::size_t i = 0; i < L.coeffs.size(); ++i) os << (i ? ", " : "") << L.coeffs[i].str();
    os << "]\n";
    if (C) {
        os << "C_num: " << C->num().str() << "\n";
        os << "C_den: " << C->den().str() << "\n";
    }
    return os.str();
}

RatFuncNK RationalInput::reduced() const {
    RatFuncNK h(num, den);
    if (g) h = h - (shift(*g, 0, 1) - *g);
    return h;
}

RationalInput parse_rational(std::string_view text) {
    RationalInput in;
    bool have_num = false;
    std::optional<PolyNK> gnum, gden;
    std::vector<std::string> seen;
    for (const auto& e : read_entries(text)) {
        reject_duplicate(seen, e);
        if (e.key == "num") {
            in.num = poly_at(e);
            have_num = true;
        } else if (e.key == "den") {
            in.den = poly_at(e);
            if (in.den.is_zero()) throw ParseError("denominator is zero", e.line, e.value_col);
        } else if (e.key == "g_num") {
            gnum = poly_at(e);
        } else if (e.key == "g_den") {
            gden = poly_at(e);
            if (gden->is_zero()) throw ParseError("denominator of g is zero", e.line, e.value_col);
        } else {
            throw ParseError("unknown key '" + e.key + "'", e.line, 1);
        }
    }
    if (!have_num) throw ParseError("missing key 'num'", 1, 1);
    if (gnum || gden) in.g = RatFuncNK(gnum.value_or(PolyNK()), gden.value_or(PolyNK(1)));
    return in;
}

std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

std::string curve_csv(const CurveSpec& curve, int rmin, int rmax) {
    std::vector<std::vector<std::string>> rows;
    for (int r = std::max(rmin, curve.rmin); r <= rmax; ++r)
        rows.push_back({std::to_string(r), std::to_string(dmin(curve, r))});
    return emit_csv({"r", "d_min"}, rows);
}

std::string region_csv(const Region& region) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : region.cells) rows.push_back({std::to_string(c.r), std::to_string(c.d), c.exists ? "1" : "0"});
    return emit_csv({"r", "d", "exists"}, rows);
}

std::string cost_csv(const std::vector<CostRow>& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : rows) out.push_back({std::to_string(c.r), std::to_string(c.d), to_string(c.cost)});
    return emit_csv({"r", "d_min", "cost"}, out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace odc
