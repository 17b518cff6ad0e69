#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "hankel/detkit.hpp"
#include "hankel/identity.hpp"
#include "hankel/moments.hpp"
#include "hankel/multipoly.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

// Key order in every emitted object is fixed, so equal inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

/// {"name": string, "moments": ["p/q" | "p", ...]}. ParseError on malformed
/// input (including zero denominators).
MomentSequence parse_sequence_json(std::string_view text);
MomentSequence load_sequence_file(const std::filesystem::path& path);

/// {"rows": N, "cols": N, "entries": ["p/q", ...]} row-major.
Matrix parse_matrix_json(std::string_view text);
Matrix load_matrix_file(const std::filesystem::path& path);

Json to_json(const Rational& value);
Json to_json(const DetResult& result);
Json to_json(const OrthoPoly& poly);
Json to_json(const VerificationReport& report);
Json to_json(const ReductionTrace& trace);
Json to_json(const MultiPoly& poly);
Json to_json(const CorollaryValues& values, std::size_t m, std::size_t n);

}  // namespace hankel
