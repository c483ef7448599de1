#include "p1split/commands.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "p1split/errors.hpp"
#include "p1split/fuchsian.hpp"
#include "p1split/io.hpp"
#include "p1split/monodromy.hpp"

namespace p1split {

Json ResultDocument::to_json() const {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = result;
    j["certificate"] = certificate;
    return j;
}

namespace {

void render_text(std::ostringstream& out, const std::string& prefix, const Json& j) {
    for (const auto& [key, value] : j.items()) {
        out << prefix << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

}  // namespace

std::string ResultDocument::to_text() const {
    std::ostringstream out;
    out << "command: " << command << '\n' << "input_digest: " << input_digest << '\n';
    render_text(out, "", result);
    render_text(out, "certificate.", certificate);
    return out.str();
}

std::string input_digest(const std::vector<std::string_view>& inputs) {
    std::uint64_t h = 14695981039346656037ULL;
    bool first = true;
    for (const auto& in : inputs) {
        if (!first) {
            h ^= 0U;
            h *= 1099511628211ULL;
        }
        first = false;
        for (unsigned char c : in) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Json laurent_matrix_to_json(const LaurentMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw DimensionMismatch("matrix must be a nonempty array of rows");
    const std::size_t n = j.size();
    LaurentMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw DimensionMismatch("matrix must be square");
        for (std::size_t c = 0; c < n; ++c) {
            if (!j[r][c].is_string()) throw ParseError("matrix entries must be strings", 1, 1);
            m(r, c) = parse_laurent(j[r][c].get<std::string>());
        }
    }
    return m;
}

Json factorization_to_json(const Factorization& f) {
    Json j;
    j["B"] = laurent_matrix_to_json(f.b);
    j["C"] = laurent_matrix_to_json(f.c);
    j["exponents"] = f.exponents.indices;
    j["diagonal"] = laurent_matrix_to_json(diag_monomials(f.exponents.indices));
    return j;
}

Factorization factorization_from_json(const Json& j) {
    const Json& cert = j.contains("certificate") ? j.at("certificate") : j;
    if (!cert.contains("B") || !cert.contains("C") || !cert.contains("exponents"))
        throw ParseError("factorization needs B, C and exponents", 1, 1);
    Factorization f;
    f.b = laurent_matrix_from_json(cert.at("B"));
    f.c = laurent_matrix_from_json(cert.at("C"));
    if (!cert.at("exponents").is_array()) throw ParseError("exponents must be an array of integers", 1, 1);
    for (const auto& e : cert.at("exponents")) {
        if (!e.is_number_integer()) throw ParseError("exponents must be an array of integers", 1, 1);
        f.exponents.indices.push_back(e.get<long>());
    }
    return f;
}

namespace {

BundleOnP1 bundle_from(std::string_view text) {
    return BundleOnP1(parse_matrix_file(text).laurent_matrix());
}

ResultDocument start(const std::string& command, const std::vector<std::string_view>& inputs) {
    ResultDocument doc;
    doc.command = command;
    doc.input_digest = input_digest(inputs);
    return doc;
}

Json rat_matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json ratfunc_matrix_to_json(const RatFuncMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json roots_to_json(const std::vector<RationalRoot>& roots) {
    Json out = Json::array();
    for (const auto& r : roots) out.push_back({{"value", to_string(r.value)}, {"multiplicity", r.multiplicity}});
    return out;
}

Json vector_to_json(const std::vector<LaurentPoly>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

Point parse_point(const std::string& s) {
    if (s == "infinity" || s == "inf") return Point::infinity();
    return Point::at(parse_rational_constant(s));
}

Json indicial_to_json(const IndicialData& d, const SingularityClass& cls) {
    Json j;
    j["point"] = d.point.to_string();
    j["kind"] = to_string(cls.kind);
    j["polynomial"] = d.polynomial.to_string("rho");
    j["exponent_sum"] = to_string(d.exponent_sum);
    j["rational_exponents"] = roots_to_json(d.rational_roots);
    return j;
}

}  // namespace

ResultDocument cmd_split(std::string_view text) {
    auto doc = start("split", {text});
    const BundleOnP1 e = bundle_from(text);
    const SplittingType st = splitting_type(e);
    doc.result["indices"] = st.indices;
    doc.result["rank"] = e.rank();
    doc.result["degree"] = degree(e);

    // Section counts across the window where the profile changes.
    Json profile = Json::array();
    for (long k = -st.indices.front() - 1; k <= -st.indices.back(); ++k)
        profile.push_back({{"k", k}, {"h0", h0_count(e, k)}});
    doc.certificate["h0_profile"] = std::move(profile);
    return doc;
}

ResultDocument cmd_factor(std::string_view text) {
    auto doc = start("factor", {text});
    const BundleOnP1 e = bundle_from(text);
    const Factorization f = birkhoff_factor(e);
    doc.result["exponents"] = f.exponents.indices;
    doc.result["valid"] = verify_factorization(e.transition(), f).valid;
    doc.certificate = factorization_to_json(f);
    return doc;
}

ResultDocument cmd_verify(std::string_view matrix_text, std::string_view factorization_json) {
    auto doc = start("verify", {matrix_text, factorization_json});
    const LaurentMatrix a = parse_matrix_file(matrix_text).laurent_matrix();
    Json j;
    try {
        j = Json::parse(factorization_json);
    } catch (const Json::parse_error& ex) {
        throw ParseError(std::string("factorization document: ") + ex.what(), 1, 1);
    }
    const Factorization f = factorization_from_json(j);
    const auto report = verify_factorization(a, f);
    doc.result["valid"] = report.valid;
    doc.result["failed_clause"] = report.failed_clause;
    doc.result["detail"] = report.detail;
    return doc;
}

ResultDocument cmd_h0(std::string_view text, long k) {
    auto doc = start("h0", {text});
    const auto space = h0_dim(bundle_from(text), k);
    doc.result["k"] = k;
    doc.result["dimension"] = space.dimension;
    Json basis = Json::array();
    for (const auto& s : space.basis) basis.push_back({{"s0", vector_to_json(s.s0)}, {"s1", vector_to_json(s.s1)}});
    doc.certificate["basis"] = std::move(basis);
    return doc;
}

ResultDocument cmd_h1(std::string_view text, long k) {
    auto doc = start("h1", {text});
    doc.result["k"] = k;
    doc.result["dimension"] = h1_dim(bundle_from(text), k);
    return doc;
}

ResultDocument cmd_rr(std::string_view text, long k) {
    auto doc = start("rr", {text});
    const BundleOnP1 e = bundle_from(text);
    const bool holds = riemann_roch_check(e, k);
    doc.result["k"] = k;
    doc.result["h0"] = h0_count(e, k);
    doc.result["h1"] = h1_dim(e, k);
    doc.result["degree"] = degree(twist(e, k));
    doc.result["rank"] = e.rank();
    doc.result["holds"] = holds;
    if (!holds) throw ConsistencyFailure("Riemann-Roch identity failed");
    return doc;
}

ResultDocument cmd_iso(std::string_view text_a, std::string_view text_b) {
    auto doc = start("iso", {text_a, text_b});
    const BundleOnP1 a = bundle_from(text_a);
    const BundleOnP1 b = bundle_from(text_b);
    doc.result["isomorphic"] = is_isomorphic(a, b);
    doc.result["splitting_a"] = splitting_type(a).indices;
    doc.result["splitting_b"] = splitting_type(b).indices;
    return doc;
}

ResultDocument cmd_fuchs_system(std::string_view text) {
    auto doc = start("fuchs-system", {text});
    const FuchsianSystem sys = parse_matrix_file(text).fuchsian_system();
    const RatFuncMatrix a = sys.system_matrix();

    std::vector<Point> pts;
    for (const auto& p : sys.points) pts.push_back(Point::at(p));
    pts.push_back(Point::infinity());

    Json points = Json::array();
    for (const auto& p : pts) {
        const auto ex = exponents_system(sys, p);
        Json j;
        j["point"] = p.to_string();
        // With an overridden residue at infinity the data no longer come from one system.
        if (!(p.is_infinity() && sys.infinity_override))
            j["kind"] = to_string(classify_singularity_system(a, p).kind);
        j["charpoly"] = ex.charpoly.to_string("lambda");
        j["trace"] = to_string(ex.trace);
        j["rational_exponents"] = roots_to_json(ex.rational_roots);
        j["splits_over_q"] = ex.splits_over_q;
        points.push_back(std::move(j));
    }
    const auto rel = fuchs_relation_system(sys);
    doc.result["points"] = std::move(points);
    doc.result["exponent_total"] = to_string(rel.total);
    doc.result["fuchs_relation"] = rel.holds;
    return doc;
}

ResultDocument cmd_fuchs_ode(std::string_view text) {
    auto doc = start("fuchs-ode", {text});
    const ScalarODE ode = parse_matrix_file(text).scalar_ode();
    const auto rel = fuchs_relation_scalar(ode);
    Json points = Json::array();
    for (const auto& d : rel.local) points.push_back(indicial_to_json(d, classify_singularity_scalar(ode, d.point)));
    doc.result["order"] = ode.order();
    doc.result["singular_points"] = std::move(points);
    doc.result["lhs"] = to_string(rel.lhs);
    doc.result["rhs"] = to_string(rel.rhs);
    doc.result["fuchs_relation"] = rel.holds;
    return doc;
}

ResultDocument cmd_indicial(std::string_view text, const std::optional<std::string>& point) {
    auto doc = start("indicial", {text});
    const ScalarODE ode = parse_matrix_file(text).scalar_ode();
    const Point p = parse_point(point.value_or("0"));
    const auto cls = classify_singularity_scalar(ode, p);
    doc.result = indicial_to_json(indicial_polynomial(ode, p), cls);
    return doc;
}

ResultDocument cmd_frobenius(std::string_view text, std::size_t truncation) {
    auto doc = start("frobenius", {text});
    const MatrixFile file = parse_matrix_file(text);
    const auto& ms = file.matrices();
    LocalSystemData local;
    local.residue = ms.front();
    local.tail.assign(ms.begin() + 1, ms.end());
    const auto series = frobenius_series(local, truncation);
    const std::size_t order = ode_residual(local, series);
    doc.result["truncation"] = truncation;
    doc.result["residual_order"] = order;
    doc.result["certified"] = order >= truncation;
    Json s = Json::array();
    for (const auto& m : series.coefficients) s.push_back(rat_matrix_to_json(m));
    doc.certificate["S"] = std::move(s);
    if (order < truncation) throw ConsistencyFailure("Frobenius recursion residual is nonzero below the truncation order");
    return doc;
}

ResultDocument cmd_gauge(std::string_view system_text, std::string_view gauge_text) {
    auto doc = start("gauge", {system_text, gauge_text});
    const auto as_ratfunc = [](const MatrixFile& f) {
        if (f.kind != FileKind::laurent_matrix) return f.ratfunc_matrix();
        const auto& l = f.laurent_matrix();
        RatFuncMatrix m(l.rows(), l.cols());
        for (std::size_t i = 0; i < l.rows(); ++i)
            for (std::size_t j = 0; j < l.cols(); ++j) m(i, j) = RatFunc::from_laurent(l(i, j));
        return m;
    };
    const RatFuncMatrix a = as_ratfunc(parse_matrix_file(system_text));
    const RatFuncMatrix p = as_ratfunc(parse_matrix_file(gauge_text));
    doc.result["matrix"] = ratfunc_matrix_to_json(gauge_transform(a, p));
    return doc;
}

ResultDocument cmd_bolibrukh(std::string_view text) {
    auto doc = start("bolibrukh", {text});
    const MonodromyRep rep(parse_matrix_file(text).matrices());
    const auto rep_report = bolibrukh_criterion(rep);
    doc.result["dimension"] = rep.dimension();
    doc.result["product_is_identity"] = rep_report.product_is_identity;
    doc.result["reducible"] = rep_report.reducible;
    doc.result["all_single_block"] = rep_report.all_single_block;
    Json eig = Json::array();
    for (const auto& p : rep_report.profiles)
        eig.push_back(p.single_eigenvalue ? Json(to_string(*p.single_eigenvalue)) : Json(nullptr));
    doc.result["eigenvalues"] = std::move(eig);
    doc.result["eigenvalue_product"] =
        rep_report.eigenvalue_product ? Json(to_string(*rep_report.eigenvalue_product)) : Json(nullptr);
    doc.result["applies"] = rep_report.applies;
    doc.result["reason"] = rep_report.reason;
    doc.certificate["word_span_dimension"] = word_span_dimension(rep);
    if (rep_report.witness) {
        Json w = Json::array();
        for (auto i : *rep_report.witness) w.push_back(i + 1);
        doc.certificate["invariant_coordinates"] = std::move(w);
    } else {
        doc.certificate["invariant_coordinates"] = nullptr;
    }
    Json blocks = Json::array();
    for (const auto& p : rep_report.profiles) blocks.push_back(p.single_block);
    doc.certificate["single_jordan_block"] = std::move(blocks);
    return doc;
}

}  // namespace p1split
