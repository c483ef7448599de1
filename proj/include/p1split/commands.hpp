#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "p1split/bundle.hpp"

namespace p1split {

using Json = nlohmann::ordered_json;

// Machine-readable outcome of one command. Fractions appear as "p/q" strings
// and Laurent polynomials in the input grammar, so certificates can be
// re-checked by third parties. No timestamps: equal inputs give equal bytes.
struct ResultDocument {
    std::string command;
    std::string input_digest;
    Json result = Json::object();
    Json certificate = Json::object();

    Json to_json() const;
    std::string to_text() const;
};

// 64-bit FNV-1a over the inputs, rendered as "fnv1a64:<hex>".
std::string input_digest(const std::vector<std::string_view>& inputs);

Json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Json& j);
Json factorization_to_json(const Factorization& f);
// Accepts either a bare certificate or a full factor ResultDocument.
Factorization factorization_from_json(const Json& j);

// Each command takes input document texts and returns the result document.
// Errors propagate as p1split exceptions.
ResultDocument cmd_split(std::string_view text);
ResultDocument cmd_factor(std::string_view text);
ResultDocument cmd_verify(std::string_view matrix_text, std::string_view factorization_json);
ResultDocument cmd_h0(std::string_view text, long k);
ResultDocument cmd_h1(std::string_view text, long k);
ResultDocument cmd_rr(std::string_view text, long k);
ResultDocument cmd_iso(std::string_view text_a, std::string_view text_b);
ResultDocument cmd_fuchs_system(std::string_view text);
ResultDocument cmd_fuchs_ode(std::string_view text);
ResultDocument cmd_indicial(std::string_view text, const std::optional<std::string>& point);
ResultDocument cmd_frobenius(std::string_view text, std::size_t truncation);
ResultDocument cmd_gauge(std::string_view system_text, std::string_view gauge_text);
ResultDocument cmd_bolibrukh(std::string_view text);

}  // namespace p1split
