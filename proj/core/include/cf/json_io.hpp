#pragma once

// JSON document layer. Every document carries {"schema": "cf/1", "type": ...}
// and encodes field elements and big integers as strings so nothing is lost
// to floating point. Emission is deterministic: same inputs, same bytes.
//
// verify_document re-checks a claim from scratch: it reparses the field,
// rebuilds the object, and runs the library's own verification. Structural
// problems (bad JSON, missing keys, unknown type) throw Error(SchemaError);
// semantic failures come back as {valid: false, reason}.

#include <cstdint>
#include <optional>
#include <string>

#include "cf/bounds.hpp"
#include "cf/config.hpp"
#include "cf/field.hpp"
#include "cf/hilbert.hpp"
#include "cf/rational.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"
#include "cf/sweep.hpp"
#include "cf/waring.hpp"

namespace cf::jsonio {

inline constexpr const char* kSchemaTag = "cf/1";

// Witness lists up to this total size serialize as a flat string array;
// larger ones switch to {"value", "count"} pairs. Readers accept both.
inline constexpr std::uint64_t kFlatWitnessLimit = 64;

std::string field_info_json(const FieldHandle& field, bool include_elements = false,
                            const Limits& limits = {});
std::string residue_table_json(const ResidueTable& table);
std::string sigma_chain_json(const SigmaChain& chain);
std::string certificate_json(const PowerSumCertificate& cert,
                             std::optional<std::uint32_t> rank = std::nullopt);
std::string identity_json(const HilbertIdentity& identity);
std::string fermat_solution_json(const SolutionVector& solution, SolveMethod method,
                                 std::uint32_t n);
std::string diagonal_solution_json(const SolutionVector& solution, SolveMethod method);
std::string fermat_no_solution_json(const FieldHandle& field, std::uint64_t d, std::uint32_t n);
std::string diagonal_no_solution_json(const DiagonalForm& form);
std::string schreier_json(const PermGroupSpec& group, const SchreierResult& result);
std::string kummer_bound_json(std::uint64_t d, std::uint64_t g, const BigInt& bound);
std::string generator_bound_json(std::uint64_t g, const BigInt& index, const BigInt& bound);
std::string diagonal_variable_bound_json(std::uint64_t d, std::uint64_t g, const BigInt& n,
                                         const BigInt& big_n);
std::string sweep_report_json(const SweepReport& report);

struct VerifyReport {
  bool valid = false;
  std::string doc_type;
  std::string reason;
};

VerifyReport verify_document(const std::string& text, const Limits& limits = {});
std::string verify_report_json(const VerifyReport& report);

// Round-trip readers for the two certificate-like documents. Structural
// problems throw Error(SchemaError); semantic ones surface as domain errors
// from the reconstructed objects themselves.
PowerSumCertificate parse_certificate(const std::string& text, const Limits& limits = {});
HilbertIdentity parse_identity(const std::string& text);

}  // namespace cf::jsonio
