#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p1split/bundle.hpp"
#include "p1split/commands.hpp"
#include "p1split/errors.hpp"
#include "p1split/io.hpp"
#include "p1split/monodromy.hpp"

namespace py = pybind11;
using namespace p1split;

namespace {

using TextMatrix = std::vector<std::vector<std::string>>;

LaurentMatrix laurent_from_text(const TextMatrix& rows) {
    const std::size_t n = rows.size();
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_laurent(rows[i][j]);
    }
    return m;
}

TextMatrix laurent_to_text(const LaurentMatrix& m) {
    TextMatrix out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_string();
    return out;
}

RatMatrix rat_from_text(const TextMatrix& rows) {
    const std::size_t n = rows.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rational_constant(rows[i][j]);
    }
    return m;
}

BundleOnP1 bundle(const TextMatrix& rows) { return BundleOnP1(laurent_from_text(rows)); }

std::string run(const std::string& command, const std::vector<std::string>& inputs, long k, std::size_t truncation,
                const std::optional<std::string>& point, const std::string& format) {
    const auto need = [&](std::size_t count) {
        if (inputs.size() != count)
            throw py::value_error(command + " takes " + std::to_string(count) + " input document(s)");
    };
    ResultDocument doc;
    if (command == "split") { need(1); doc = cmd_split(inputs[0]); }
    else if (command == "factor") { need(1); doc = cmd_factor(inputs[0]); }
    else if (command == "verify") { need(2); doc = cmd_verify(inputs[0], inputs[1]); }
    else if (command == "h0") { need(1); doc = cmd_h0(inputs[0], k); }
    else if (command == "h1") { need(1); doc = cmd_h1(inputs[0], k); }
    else if (command == "rr") { need(1); doc = cmd_rr(inputs[0], k); }
    else if (command == "iso") { need(2); doc = cmd_iso(inputs[0], inputs[1]); }
    else if (command == "fuchs-system") { need(1); doc = cmd_fuchs_system(inputs[0]); }
    else if (command == "fuchs-ode") { need(1); doc = cmd_fuchs_ode(inputs[0]); }
    else if (command == "indicial") { need(1); doc = cmd_indicial(inputs[0], point); }
    else if (command == "frobenius") { need(1); doc = cmd_frobenius(inputs[0], truncation); }
    else if (command == "gauge") { need(2); doc = cmd_gauge(inputs[0], inputs[1]); }
    else if (command == "bolibrukh") { need(1); doc = cmd_bolibrukh(inputs[0]); }
    else throw py::value_error("unknown command '" + command + "'");
    if (format == "text") return doc.to_text();
    if (format != "json") throw py::value_error("format must be 'json' or 'text'");
    return doc.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact splitting types of bundles on P^1, Fuchsian exponents and monodromy checks";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<InvalidBundle>(m, "InvalidBundle", domain.ptr());
    py::register_exception<ResonantExponents>(m, "ResonantExponents", domain.ptr());
    py::register_exception<NotFuchsian>(m, "NotFuchsian", domain.ptr());
    py::register_exception<ConsistencyFailure>(m, "ConsistencyFailure", base.ptr());

    m.def("canonical_laurent", [](const std::string& s) { return parse_laurent(s).to_string(); },
          "Parse a Laurent polynomial and return its canonical text.");

    m.def("splitting_type", [](const TextMatrix& a) { return splitting_type(bundle(a)).indices; }, py::arg("matrix"));

    m.def(
        "factor",
        [](const TextMatrix& a) {
            const auto f = birkhoff_factor(bundle(a));
            py::dict d;
            d["B"] = laurent_to_text(f.b);
            d["C"] = laurent_to_text(f.c);
            d["exponents"] = f.exponents.indices;
            return d;
        },
        py::arg("matrix"), "Return B, C and the exponents with B A C = diag(x^d).");

    m.def(
        "verify",
        [](const TextMatrix& a, const TextMatrix& b, const TextMatrix& c, const std::vector<long>& exponents) {
            const auto r = verify_factorization(laurent_from_text(a),
                                                Factorization{laurent_from_text(b), laurent_from_text(c), {exponents}});
            return py::make_tuple(r.valid, r.failed_clause, r.detail);
        },
        py::arg("matrix"), py::arg("B"), py::arg("C"), py::arg("exponents"));

    m.def("h0", [](const TextMatrix& a, long k) { return h0_count(bundle(a), k); }, py::arg("matrix"), py::arg("k") = 0);
    m.def("h1", [](const TextMatrix& a, long k) { return h1_dim(bundle(a), k); }, py::arg("matrix"), py::arg("k") = 0);
    m.def("riemann_roch", [](const TextMatrix& a, long k) { return riemann_roch_check(bundle(a), k); }, py::arg("matrix"),
          py::arg("k") = 0);
    m.def("degree", [](const TextMatrix& a) { return degree(bundle(a)); }, py::arg("matrix"));
    m.def("is_isomorphic", [](const TextMatrix& a, const TextMatrix& b) { return is_isomorphic(bundle(a), bundle(b)); });

    m.def(
        "bolibrukh",
        [](const std::vector<TextMatrix>& generators) {
            std::vector<RatMatrix> ms;
            for (const auto& g : generators) ms.push_back(rat_from_text(g));
            const auto r = bolibrukh_criterion(MonodromyRep(std::move(ms)));
            py::dict d;
            d["product_is_identity"] = r.product_is_identity;
            d["reducible"] = r.reducible;
            d["all_single_block"] = r.all_single_block;
            py::list eig;
            for (const auto& p : r.profiles)
                eig.append(p.single_eigenvalue ? py::object(py::str(to_string(*p.single_eigenvalue))) : py::object(py::none()));
            d["eigenvalues"] = eig;
            d["eigenvalue_product"] =
                r.eigenvalue_product ? py::object(py::str(to_string(*r.eigenvalue_product))) : py::object(py::none());
            d["witness"] = r.witness ? py::object(py::cast(*r.witness)) : py::object(py::none());
            d["applies"] = r.applies;
            d["reason"] = r.reason;
            return d;
        },
        py::arg("generators"));

    m.def("run", &run, py::arg("command"), py::arg("inputs"), py::arg("k") = 0, py::arg("truncation") = kDefaultTruncation,
          py::arg("point") = py::none(), py::arg("format") = "json",
          "Run a CLI command on input document texts and return the result document.");
}
