#include "p1split/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "p1split/errors.hpp"

namespace p1split {

std::string to_string(FileKind kind) {
    switch (kind) {
        case FileKind::laurent_matrix: return "laurent_matrix";
        case FileKind::rat_matrix_list: return "rat_matrix_list";
        case FileKind::fuchsian_system: return "fuchsian_system";
        case FileKind::scalar_ode: return "scalar_ode";
        case FileKind::monodromy_rep: return "monodromy_rep";
        case FileKind::ratfunc_matrix: return "ratfunc_matrix";
    }
    return "unknown";
}

namespace {

template <typename T>
const T& payload_as(const MatrixFile& f, const char* what) {
    if (const auto* p = std::get_if<T>(&f.payload)) return *p;
    throw DomainError(std::string("input document is not a ") + what + " (kind = " + to_string(f.kind) + ")");
}

// Recursive descent over
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/") factor)*
//   factor  := ("-" | "+") factor | primary ("^" SINT)?
//   primary := INT | "x" | "z" | "(" expr ")"
class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    RatFunc parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        RatFunc v = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        RatFunc base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const long e = signed_integer();
        if (e < 0 && base.is_zero()) fail("negative power of zero");
        return base.pow(e);
    }

    long signed_integer() {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 9) fail("exponent too large");
        const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return negative ? -v : v;
    }

    RatFunc primary() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x' || c == 'z') {
            ++pos_;
            return RatFunc(Poly::x());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
            return RatFunc(Rat(Int(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Line {
    std::size_t number;
    std::string text;  // comment stripped, trimmed
};

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])) != 0) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])) != 0) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back({number, std::move(t)});
        start = end + 1;
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

long parse_int(const std::string& s, const Line& line, const std::string& what) {
    const std::string t = trim(s);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size()) throw ParseError("expected an integer for " + what, line.number, 1);
    return v;
}

FileKind parse_kind(const std::string& s, const Line& line) {
    static const std::map<std::string, FileKind> kinds = {
        {"laurent_matrix", FileKind::laurent_matrix}, {"rat_matrix_list", FileKind::rat_matrix_list},
        {"fuchsian_system", FileKind::fuchsian_system}, {"scalar_ode", FileKind::scalar_ode},
        {"monodromy_rep", FileKind::monodromy_rep},     {"ratfunc_matrix", FileKind::ratfunc_matrix},
    };
    const auto it = kinds.find(trim(s));
    if (it == kinds.end()) throw ParseError("unknown kind '" + trim(s) + "'", line.number, 1);
    return it->second;
}

// Row of n comma-separated entries; column numbers in errors refer to the full line.
template <typename F>
auto parse_row(const Line& line, std::size_t n, F&& entry) {
    using T = decltype(entry(std::string_view{}, line.number));
    std::vector<T> row;
    std::size_t offset = 0;
    for (const auto& cell : split(line.text, ',')) {
        try {
            row.push_back(entry(cell, line.number));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), line.number,
                             offset + e.column());
        }
        offset += cell.size() + 1;
    }
    if (row.size() != n)
        throw DimensionMismatch("line " + std::to_string(line.number) + ": expected " + std::to_string(n) +
                                " entries, found " + std::to_string(row.size()));
    return row;
}

template <typename T, typename F>
Matrix<T> parse_block(const std::vector<Line>& lines, std::size_t& at, std::size_t n, F&& entry) {
    if (at + n > lines.size())
        throw DimensionMismatch("expected " + std::to_string(n) + " matrix rows, document ended early");
    std::vector<T> data;
    for (std::size_t r = 0; r < n; ++r) {
        auto row = parse_row(lines[at + r], n, entry);
        for (auto& v : row) data.push_back(std::move(v));
    }
    at += n;
    return Matrix<T>(n, n, std::move(data));
}

Rat rat_entry(std::string_view s, std::size_t line) {
    return parse_rational_constant(s, line);
}

LaurentPoly laurent_entry(std::string_view s, std::size_t line) {
    return parse_laurent(s, line);
}

RatFunc ratfunc_entry(std::string_view s, std::size_t line) {
    return parse_ratfunc(s, line);
}

}  // namespace

const LaurentMatrix& MatrixFile::laurent_matrix() const {
    return payload_as<LaurentMatrix>(*this, "laurent_matrix");
}
const std::vector<RatMatrix>& MatrixFile::matrices() const {
    return payload_as<std::vector<RatMatrix>>(*this, "rat_matrix_list or monodromy_rep");
}
const FuchsianSystem& MatrixFile::fuchsian_system() const {
    return payload_as<FuchsianSystem>(*this, "fuchsian_system");
}
const ScalarODE& MatrixFile::scalar_ode() const {
    return payload_as<ScalarODE>(*this, "scalar_ode");
}
const RatFuncMatrix& MatrixFile::ratfunc_matrix() const {
    return payload_as<RatFuncMatrix>(*this, "ratfunc_matrix");
}

RatFunc parse_ratfunc(std::string_view text, std::size_t line) {
    return ExprParser(text, line).parse();
}

LaurentPoly parse_laurent(std::string_view text, std::size_t line) {
    const RatFunc f = parse_ratfunc(text, line);
    auto p = f.to_laurent();
    if (!p) throw ParseError("not a Laurent polynomial: " + f.to_string(), line, 1);
    return *p;
}

Rat parse_rational_constant(std::string_view text, std::size_t line) {
    const RatFunc f = parse_ratfunc(text, line);
    if (!f.is_polynomial() || f.num().degree() > 0) throw ParseError("expected a rational constant", line, 1);
    return f.num().coeff(0);
}

MatrixFile parse_matrix_file(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty document", 1, 1);

    MatrixFile file;
    const Line& header = lines.front();
    bool have_kind = false;
    bool have_n = false;
    for (const auto& item : split(header.text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("header items must be key = value", header.number, 1);
        const std::string key = trim(item.substr(0, eq));
        const std::string value = item.substr(eq + 1);
        if (key == "kind") {
            file.kind = parse_kind(value, header);
            have_kind = true;
        } else if (key == "n") {
            const long n = parse_int(value, header, "n");
            if (n < 1) throw ParseError("n must be at least 1", header.number, 1);
            file.n = static_cast<std::size_t>(n);
            have_n = true;
        } else if (key == "version") {
            file.format_version = static_cast<int>(parse_int(value, header, "version"));
            if (file.format_version != kFormatVersion)
                throw ParseError("unsupported format version " + std::to_string(file.format_version), header.number, 1);
        } else {
            throw ParseError("unknown header key '" + key + "'", header.number, 1);
        }
    }
    if (!have_kind || !have_n) throw ParseError("header must define kind and n", header.number, 1);

    const std::size_t n = file.n;
    std::size_t at = 1;
    switch (file.kind) {
        case FileKind::laurent_matrix:
            file.payload = parse_block<LaurentPoly>(lines, at, n, laurent_entry);
            break;
        case FileKind::ratfunc_matrix:
            file.payload = parse_block<RatFunc>(lines, at, n, ratfunc_entry);
            break;
        case FileKind::rat_matrix_list:
        case FileKind::monodromy_rep: {
            std::vector<RatMatrix> ms;
            while (at < lines.size()) ms.push_back(parse_block<Rat>(lines, at, n, rat_entry));
            if (ms.empty()) throw DimensionMismatch("matrix list is empty");
            file.payload = std::move(ms);
            break;
        }
        case FileKind::fuchsian_system: {
            FuchsianSystem sys;
            sys.n = n;
            while (at < lines.size()) {
                const Line& l = lines[at];
                if (l.text.rfind("at", 0) != 0 || l.text.size() < 3 ||
                    std::isspace(static_cast<unsigned char>(l.text[2])) == 0)
                    throw ParseError("expected 'at <point>'", l.number, 1);
                const std::string where = trim(std::string_view(l.text).substr(2));
                ++at;
                RatMatrix r = parse_block<Rat>(lines, at, n, rat_entry);
                if (where == "infinity") {
                    if (sys.infinity_override) throw ParseError("duplicate residue at infinity", l.number, 1);
                    sys.infinity_override = std::move(r);
                } else {
                    sys.points.push_back(parse_rational_constant(where, l.number));
                    sys.residues.push_back(std::move(r));
                }
            }
            try {
                sys.validate();
            } catch (const DomainError& e) {
                throw ParseError(e.what(), lines.front().number, 1);
            }
            file.payload = std::move(sys);
            break;
        }
        case FileKind::scalar_ode: {
            ScalarODE ode;
            ode.coeffs.assign(n, RatFunc());
            std::vector<bool> seen(n, false);
            for (; at < lines.size(); ++at) {
                const Line& l = lines[at];
                const auto eq = l.text.find('=');
                const std::string key = trim(std::string_view(l.text).substr(0, eq == std::string::npos ? 0 : eq));
                if (eq == std::string::npos || key.size() < 2 || key[0] != 'a')
                    throw ParseError("expected 'a<k> = <expression>'", l.number, 1);
                const long k = parse_int(key.substr(1), l, "coefficient index");
                if (k < 0 || static_cast<std::size_t>(k) >= n)
                    throw DimensionMismatch("line " + std::to_string(l.number) + ": coefficient index out of range");
                if (seen[static_cast<std::size_t>(k)]) throw ParseError("duplicate coefficient " + key, l.number, 1);
                seen[static_cast<std::size_t>(k)] = true;
                try {
                    ode.coeffs[static_cast<std::size_t>(k)] = parse_ratfunc(std::string_view(l.text).substr(eq + 1), l.number);
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), l.number,
                                     eq + 1 + e.column());
                }
            }
            file.payload = std::move(ode);
            break;
        }
    }
    if (at != lines.size())
        throw DimensionMismatch("line " + std::to_string(lines[at].number) + ": unexpected trailing content");
    return file;
}

namespace {

template <typename T, typename F>
void emit_block(std::ostringstream& out, const Matrix<T>& m, F&& fmt) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << fmt(m(r, c));
        out << '\n';
    }
}

}  // namespace

std::string emit_matrix_file(const MatrixFile& file) {
    std::ostringstream out;
    out << "kind = " << to_string(file.kind) << ", n = " << file.n << ", version = " << file.format_version << '\n';
    const auto rat = [](const Rat& r) { return to_string(r); };
    const auto laurent = [](const LaurentPoly& p) { return p.to_string(); };
    const auto ratfunc = [](const RatFunc& f) { return f.to_string(); };
    switch (file.kind) {
        case FileKind::laurent_matrix: emit_block(out, file.laurent_matrix(), laurent); break;
        case FileKind::ratfunc_matrix: emit_block(out, file.ratfunc_matrix(), ratfunc); break;
        case FileKind::rat_matrix_list:
        case FileKind::monodromy_rep: {
            bool first = true;
            for (const auto& m : file.matrices()) {
                if (!first) out << '\n';
                first = false;
                emit_block(out, m, rat);
            }
            break;
        }
        case FileKind::fuchsian_system: {
            const auto& sys = file.fuchsian_system();
            for (std::size_t i = 0; i < sys.points.size(); ++i) {
                out << "at " << to_string(sys.points[i]) << '\n';
                emit_block(out, sys.residues[i], rat);
            }
            if (sys.infinity_override) {
                out << "at infinity\n";
                emit_block(out, *sys.infinity_override, rat);
            }
            break;
        }
        case FileKind::scalar_ode: {
            const auto& ode = file.scalar_ode();
            for (std::size_t k = ode.order(); k-- > 0;) out << 'a' << k << " = " << ode.coeffs[k].to_string() << '\n';
            break;
        }
    }
    return out.str();
}

MatrixFile make_laurent_file(const LaurentMatrix& a) {
    MatrixFile f;
    f.kind = FileKind::laurent_matrix;
    f.n = a.rows();
    f.payload = a;
    return f;
}

MatrixFile make_matrix_list_file(FileKind kind, const std::vector<RatMatrix>& ms) {
    MatrixFile f;
    f.kind = kind;
    f.n = ms.empty() ? 0 : ms.front().rows();
    f.payload = ms;
    return f;
}

}  // namespace p1split
