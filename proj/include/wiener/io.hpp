#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wiener/multiset.hpp"
#include "wiener/quadform.hpp"
#include "wiener/spectral.hpp"
#include "wiener/trees.hpp"
#include "wiener/verify.hpp"

namespace wiener {

// Edge list: one "u v" pair per line, 0-based, whitespace separated; blank
// lines and '#' comments ignored. Throws ParseError with line/column, or
// InvalidTree when the edges do not form a tree.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
std::string write_edge_list(const Tree& t);

// "7:3,2:2,1:2", values strictly descending.
ValueMultiset parse_multiset(std::string_view text);

// "5,5,1,1,5"
Arrangement parse_arrangement(std::string_view text);
std::string format_arrangement(std::span<const std::int64_t> x);

// Doubles rendered with 15 significant digits.
std::string format_real(double v);
// JSON number holding v rounded to 15 significant digits.
nlohmann::ordered_json real_json(double v);

nlohmann::ordered_json to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const MaximizerResult& r, const ValueMultiset& b);
MaximizerResult maximizer_result_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SpectralReport& r);

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_elapsed = false);

// Aligned plain-text tables.
std::string render_text(const ExactPolynomial& p);
std::string render_text(const MaximizerResult& r, const ValueMultiset& b);
std::string render_text(const SpectralReport& r);
std::string render_text(const VerificationReport& r);

}  // namespace wiener
