#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "p1split/fuchsian.hpp"
#include "p1split/laurent.hpp"
#include "p1split/linalg.hpp"
#include "p1split/monodromy.hpp"
#include "p1split/ratfunc.hpp"

namespace p1split {

// Line-oriented input documents:
//
//   # comment
//   kind = laurent_matrix, n = 2, version = 1
//   x, 1
//   0, x^-1
//
// Matrix rows are comma-separated expressions in x (z is accepted as an
// alias) with integer or fraction coefficients. fuchsian_system documents
// introduce each residue with "at <point>" ("at infinity" overrides the
// residue at infinity); scalar_ode documents list "a<k> = <expr>" lines.
enum class FileKind { laurent_matrix, rat_matrix_list, fuchsian_system, scalar_ode, monodromy_rep, ratfunc_matrix };

std::string to_string(FileKind kind);

inline constexpr int kFormatVersion = 1;

struct MatrixFile {
    int format_version = kFormatVersion;
    FileKind kind = FileKind::laurent_matrix;
    std::size_t n = 0;
    std::variant<LaurentMatrix, std::vector<RatMatrix>, FuchsianSystem, ScalarODE, RatFuncMatrix> payload;

    const LaurentMatrix& laurent_matrix() const;
    const std::vector<RatMatrix>& matrices() const;
    const FuchsianSystem& fuchsian_system() const;
    const ScalarODE& scalar_ode() const;
    const RatFuncMatrix& ratfunc_matrix() const;
};

// Throws ParseError (with line and column) or DimensionMismatch.
MatrixFile parse_matrix_file(std::string_view text);

// Canonical text; emit(parse(emit(f))) == emit(f).
std::string emit_matrix_file(const MatrixFile& file);

// Expression parsers; columns in errors are 1-based within `text`.
RatFunc parse_ratfunc(std::string_view text, std::size_t line = 1);
LaurentPoly parse_laurent(std::string_view text, std::size_t line = 1);
Rat parse_rational_constant(std::string_view text, std::size_t line = 1);

MatrixFile make_laurent_file(const LaurentMatrix& a);
MatrixFile make_matrix_list_file(FileKind kind, const std::vector<RatMatrix>& ms);

}  // namespace p1split
