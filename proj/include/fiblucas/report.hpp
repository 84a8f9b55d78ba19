#pragma once

// Rendering of results as human text, CSV or JSON. CSV and JSON carry the
// same fields. CSV uses LF line endings and always emits header rows; a
// document with several tables separates them with one blank line. JSON
// integers above 2^53 - 1 are written as decimal strings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fiblucas/identities.hpp"
#include "fiblucas/theorem.hpp"

namespace fiblucas {

enum class OutputFormat { Human, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

inline constexpr std::string_view kWitnessCsvHeader =
    "p,form,r,five_residue,product_kind,index_lo,index_hi,divisible_index,residue_lo,residue_hi";

std::string render_verification(const VerificationReport& report, OutputFormat format);
std::string render_witness(const DivisibilityWitness& witness, OutputFormat format);
std::string render_classification(const PrimeClass& cls, std::optional<ApparitionSide> side,
                                  OutputFormat format);
std::string render_identities(const IdentitySweepReport& report, const IdentityGrid& grid,
                              OutputFormat format);
std::string render_value(SequenceKind kind, Index n, std::optional<std::uint64_t> modulus,
                         const Natural& value, OutputFormat format);

}  // namespace fiblucas
