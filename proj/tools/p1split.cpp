#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "p1split/commands.hpp"
#include "p1split/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting types of bundles on P^1, Fuchsian exponents and monodromy checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::string format = "json";
    long k = 0;
    std::size_t truncation = 8;
    std::optional<std::string> point;
    std::string file_a;
    std::string file_b;

    app.add_option("--out", out_path, "Write the result document to FILE");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    const auto one = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file_a, "Input document ('-' for stdin)")->required();
        return sub;
    };
    const auto two = [&](const std::string& name, const std::string& help, const std::string& second) {
        auto* sub = one(name, help);
        sub->add_option(second, file_b, "Second input document")->required();
        return sub;
    };

    auto* split = one("split", "Splitting type of a bundle");
    auto* factor = one("factor", "Explicit factorization B A C = diag(x^d)");
    auto* verify = two("verify", "Check a factorization certificate against a matrix", "factorization");
    auto* h0 = one("h0", "Global sections of E(k)");
    auto* h1 = one("h1", "First cohomology of E(k)");
    auto* rr = one("rr", "Riemann-Roch self-check at twist k");
    auto* iso = two("iso", "Decide whether two bundles are isomorphic", "other");
    auto* fsys = one("fuchs-system", "Exponents and Fuchs relation of a Fuchsian system");
    auto* fode = one("fuchs-ode", "Singularities and Fuchs relation of a scalar equation");
    auto* indicial = one("indicial", "Indicial polynomial of a scalar equation at a point");
    auto* frob = one("frobenius", "Frobenius series of a local system with its residual certificate");
    auto* gauge = two("gauge", "Gauge transform P^-1 A P - P^-1 P'", "gauge");
    auto* bolibrukh = one("bolibrukh", "Non-realizability criterion for a monodromy representation");
    for (auto* sub : {h0, h1, rr}) sub->add_option("-k", k, "Twist");
    frob->add_option("-N", truncation, "Truncation order")->check(CLI::PositiveNumber);
    indicial->add_option("--point", point, "Point: a rational number or 'infinity' (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        using namespace p1split;
        const std::string a = read_input(file_a);
        const std::string b = file_b.empty() ? std::string() : read_input(file_b);
        ResultDocument doc;
        if (split->parsed()) doc = cmd_split(a);
        else if (factor->parsed()) doc = cmd_factor(a);
        else if (verify->parsed()) doc = cmd_verify(a, b);
        else if (h0->parsed()) doc = cmd_h0(a, k);
        else if (h1->parsed()) doc = cmd_h1(a, k);
        else if (rr->parsed()) doc = cmd_rr(a, k);
        else if (iso->parsed()) doc = cmd_iso(a, b);
        else if (fsys->parsed()) doc = cmd_fuchs_system(a);
        else if (fode->parsed()) doc = cmd_fuchs_ode(a);
        else if (indicial->parsed()) doc = cmd_indicial(a, point);
        else if (frob->parsed()) doc = cmd_frobenius(a, truncation);
        else if (gauge->parsed()) doc = cmd_gauge(a, b);
        else if (bolibrukh->parsed()) doc = cmd_bolibrukh(a);

        const std::string body = format == "text" ? doc.to_text() : doc.to_json().dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw UsageError("cannot write " + out_path);
            out << body;
        }
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const p1split::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const p1split::DimensionMismatch& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const p1split::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const p1split::ConsistencyFailure& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
