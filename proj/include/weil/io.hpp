#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "weil/cochain.hpp"
#include "weil/homology.hpp"
#include "weil/poisson.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError on a missing file or bad JSON.
Json read_json_file(const std::filesystem::path& path);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Rationals are written as "p/q" strings; integers and strings are accepted.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

/// {"kind":"jet","generators":r,"order":k}
/// {"kind":"monomial_quotient","vars":[...],"relations":["x^2",...]}
/// {"kind":"table","basis":[...],"table":[[[q,...],...],...],"aug":[...]}
/// Malformed input throws ParseError; an invalid table throws ValidationError.
AlgebraPtr algebra_from_json(const Json& j);
/// Table form, which re-parses to an equal algebra.
Json algebra_to_json(const WeilAlgebra& a);
/// Summary: name, dim, basis, height, augmentation, unit.
Json algebra_info(const WeilAlgebra& a);

/// {"kind":"symplectic","n":2k} | {"kind":"so3"} | {"kind":"zero","n":n}
/// | {"kind":"matrix","n":n,"entries":{"1,2":"z",...}}
PoissonStructure structure_from_json(const Json& j,
                                     PoissonStructure::Jacobi mode = PoissonStructure::Jacobi::check);
/// Matrix form with the nonzero upper-triangle entries.
Json structure_to_json(const PoissonStructure& pi);

/// {"complex":"base|mixed|weil","p":p,"coeffs":{"1,2":"...",...}}; keys are
/// 1-based, strictly increasing and of length p.
ComplexKind cochain_kind(const Json& j);
BaseCochain base_cochain_from_json(const Json& j, std::size_t nvars);
ACochain a_cochain_from_json(const Json& j, std::size_t nvars, const AlgebraPtr& a);
Json cochain_to_json(const BaseCochain& omega);
Json cochain_to_json(const ACochain& omega);

Json report_to_json(const BettiReport& r, std::optional<std::uint64_t> seed = std::nullopt);
std::string report_to_text(const BettiReport& r);

struct GoldenResult {
  bool equal = false;
  std::size_t line = 0;  // first differing line (1-based) when not equal
  std::string expected;
  std::string actual;
};

/// Exact string comparison of `text` against the file at `path`.
GoldenResult compare_golden(const std::string& text, const std::filesystem::path& path);

}  // namespace weil
