#include "cf/json_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cf/errors.hpp"

namespace cf::jsonio {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& message) {
  throw Error(ErrorCode::SchemaError, message);
}

Json envelope(const char* type) {
  Json doc;
  doc["schema"] = kSchemaTag;
  doc["type"] = type;
  return doc;
}

Json parse_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) schema_fail("document is not valid JSON");
  return doc;
}

const Json& require_key(const Json& doc, const char* key) {
  if (!doc.is_object()) schema_fail("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) schema_fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string require_string(const Json& doc, const char* key) {
  const Json& value = require_key(doc, key);
  if (!value.is_string()) schema_fail(std::string("key \"") + key + "\" must be a string");
  return value.get<std::string>();
}

std::uint64_t require_uint(const Json& doc, const char* key) {
  const Json& value = require_key(doc, key);
  if (!value.is_number_unsigned())
    schema_fail(std::string("key \"") + key + "\" must be a nonnegative integer");
  return value.get<std::uint64_t>();
}

bool require_bool(const Json& doc, const char* key) {
  const Json& value = require_key(doc, key);
  if (!value.is_boolean()) schema_fail(std::string("key \"") + key + "\" must be a boolean");
  return value.get<bool>();
}

const Json& require_array(const Json& doc, const char* key) {
  const Json& value = require_key(doc, key);
  if (!value.is_array()) schema_fail(std::string("key \"") + key + "\" must be an array");
  return value;
}

std::string require_envelope(const Json& doc) {
  if (require_string(doc, "schema") != kSchemaTag)
    schema_fail(std::string("unsupported schema, expected \"") + kSchemaTag + "\"");
  return require_string(doc, "type");
}

const char* field_kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::Prime: return "prime";
    case FieldKind::Extension: return "extension";
    case FieldKind::Rationals: return "rationals";
    case FieldKind::NumberField: return "number_field";
  }
  return "unknown";
}

Json element_strings(const FieldHandle& field, const std::vector<std::uint64_t>& indices) {
  Json arr = Json::array();
  for (std::uint64_t idx : indices) arr.push_back(field->element_at(idx).str());
  return arr;
}

std::vector<Element> parse_element_array(const FieldHandle& field, const Json& arr,
                                         const char* key) {
  std::vector<Element> out;
  out.reserve(arr.size());
  for (const Json& entry : arr) {
    if (!entry.is_string())
      schema_fail(std::string("entries of \"") + key + "\" must be strings");
    out.push_back(field->parse_element(entry.get<std::string>()));
  }
  return out;
}

std::vector<PowerTerm> parse_witness_array(const FieldHandle& field, const Json& arr) {
  if (arr.empty()) schema_fail("\"witnesses\" must be a nonempty array");
  std::vector<PowerTerm> terms;
  terms.reserve(arr.size());
  for (const Json& entry : arr) {
    if (entry.is_string()) {
      terms.push_back({field->parse_element(entry.get<std::string>()), BigInt(1)});
    } else if (entry.is_object()) {
      terms.push_back({field->parse_element(require_string(entry, "value")),
                       parse_bigint(require_string(entry, "count"))});
    } else {
      schema_fail("witness entries must be strings or {value, count} objects");
    }
  }
  return terms;
}

bool known_method_name(const std::string& name) {
  return name == "certificate" || name == "zero_coefficient" || name == "coset_fermat" ||
         name == "brute_force";
}

// The emitted flag is recomputed here rather than trusted from the solver;
// SolutionVector's constructor already refused anything that does not vanish,
// so this stays an independent restatement at the document boundary.
bool reevaluate_solution(const SolutionVector& solution) {
  const DiagonalForm& form = solution.form();
  Element sum = form.field->zero();
  for (std::size_t i = 0; i < solution.coordinates().size(); ++i)
    sum = sum + form.coefficients[i] * solution.coordinates()[i].pow(form.d);
  bool nonzero = false;
  for (const Element& c : solution.coordinates())
    if (c != form.field->zero()) nonzero = true;
  return nonzero && sum == form.field->zero();
}

Json solution_body(const SolutionVector& solution, SolveMethod method) {
  Json doc;
  doc["method"] = std::string(solve_method_name(method));
  Json coords = Json::array();
  for (const Element& c : solution.coordinates()) coords.push_back(c.str());
  doc["solution"] = std::move(coords);
  doc["verified"] = reevaluate_solution(solution);
  return doc;
}

PowerSumCertificate certificate_from_json(const Json& doc, const Limits& limits) {
  FieldHandle field = Field::make(require_string(doc, "field"));
  std::uint64_t d = require_uint(doc, "d");
  Element target = field->parse_element(require_string(doc, "target"));
  std::vector<PowerTerm> terms = parse_witness_array(field, require_array(doc, "witnesses"));
  PowerSumCertificate cert(std::move(target), d, std::move(terms));
  if (doc.contains("rank")) {
    std::uint64_t claimed = require_uint(doc, "rank");
    WaringResult recomputed = waring_rank(field, d, cert.target(), limits);
    if (claimed != recomputed.rank)
      throw Error(ErrorCode::InvalidDocument,
                  "claimed rank " + std::to_string(claimed) + " but the chain gives rank " +
                      std::to_string(recomputed.rank));
  }
  return cert;
}

HilbertIdentity identity_from_json(const Json& doc) {
  HilbertIdentity id;
  std::uint64_t n = require_uint(doc, "n");
  std::uint64_t d = require_uint(doc, "d");
  if (n < 1 || d < 1) schema_fail("\"n\" and \"d\" must be positive");
  id.n = static_cast<std::size_t>(n);
  id.d = static_cast<unsigned>(d);
  const Json& terms = require_array(doc, "terms");
  for (const Json& term : terms) {
    HilbertTerm t;
    t.lambda = parse_rational(require_string(term, "lambda"));
    const Json& form = require_array(term, "form");
    for (const Json& coeff : form) {
      if (!coeff.is_string()) schema_fail("entries of \"form\" must be strings");
      t.form.push_back(parse_rational(coeff.get<std::string>()));
    }
    id.terms.push_back(std::move(t));
  }
  return id;
}

VerifyReport verify_certificate_doc(const Json& doc, const Limits& limits) {
  PowerSumCertificate cert = certificate_from_json(doc, limits);
  cert.verify();
  return {true, "power_sum_certificate", "ok"};
}

VerifyReport verify_identity_doc(const Json& doc) {
  HilbertIdentity id = identity_from_json(doc);
  if (!verify_identity(id))
    return {false, "hilbert_identity", "identity expansion does not match the power sum"};
  return {true, "hilbert_identity", "ok"};
}

VerifyReport verify_fermat_doc(const Json& doc) {
  FieldHandle field = Field::make(require_string(doc, "field"));
  std::uint64_t d = require_uint(doc, "d");
  std::uint64_t n = require_uint(doc, "n");
  if (n < 1) schema_fail("\"n\" must be positive");
  std::string method = require_string(doc, "method");
  if (!known_method_name(method)) schema_fail("unknown method \"" + method + "\"");
  if (!require_bool(doc, "verified"))
    return {false, "fermat_solution", "document does not assert verification"};
  DiagonalForm form = fermat_form(field, d, static_cast<std::uint32_t>(n));
  std::vector<Element> coords = parse_element_array(field, require_array(doc, "solution"), "solution");
  SolutionVector sol(std::move(form), std::move(coords));
  (void)sol;
  return {true, "fermat_solution", "ok"};
}

VerifyReport verify_diagonal_doc(const Json& doc) {
  FieldHandle field = Field::make(require_string(doc, "field"));
  std::uint64_t d = require_uint(doc, "d");
  std::string method = require_string(doc, "method");
  if (!known_method_name(method)) schema_fail("unknown method \"" + method + "\"");
  if (!require_bool(doc, "verified"))
    return {false, "diagonal_solution", "document does not assert verification"};
  DiagonalForm form{field, d,
                    parse_element_array(field, require_array(doc, "coefficients"), "coefficients")};
  std::vector<Element> coords = parse_element_array(field, require_array(doc, "solution"), "solution");
  SolutionVector sol(std::move(form), std::move(coords));
  (void)sol;
  return {true, "diagonal_solution", "ok"};
}

}  // namespace

std::string field_info_json(const FieldHandle& field, bool include_elements,
                            const Limits& limits) {
  Json doc = envelope("field_info");
  doc["spec"] = field->spec().str();
  doc["kind"] = field_kind_name(field->kind());
  doc["characteristic"] = field->characteristic();
  doc["finite"] = field->is_finite();
  if (field->is_finite()) {
    doc["order"] = field->order();
    doc["degree"] = field->extension_degree();
  }
  if (include_elements) {
    Json arr = Json::array();
    for (const Element& e : field->enumerate(limits)) arr.push_back(e.str());
    doc["elements"] = std::move(arr);
  }
  return doc.dump();
}

std::string residue_table_json(const ResidueTable& table) {
  Json doc = envelope("residue_table");
  doc["field"] = table.field()->spec().str();
  doc["q"] = table.order();
  doc["d"] = table.d();
  doc["class_count"] = table.class_count();
  Json reps = Json::array();
  Json classes = Json::array();
  for (std::uint32_t cls = 0; cls < table.class_count(); ++cls) {
    reps.push_back(table.representative(cls).str());
    classes.push_back(element_strings(table.field(), table.coset(cls)));
  }
  doc["representatives"] = std::move(reps);
  doc["classes"] = std::move(classes);
  return doc.dump();
}

std::string sigma_chain_json(const SigmaChain& chain) {
  const ResidueTable& table = chain.table();
  Json doc = envelope("sigma_chain");
  doc["field"] = table.field()->spec().str();
  doc["d"] = table.d();
  doc["class_count"] = table.class_count();
  doc["stabilization_index"] = chain.stabilization_index();
  doc["stabilized_full"] = chain.stabilized_full();
  Json levels = Json::array();
  for (std::uint32_t r = 1; r <= chain.level_count(); ++r) {
    const SigmaLevel& level = chain.level(r);
    Json entry;
    entry["classes"] = level.classes;
    entry["contains_zero"] = level.contains_zero;
    levels.push_back(std::move(entry));
  }
  doc["levels"] = std::move(levels);
  return doc.dump();
}

std::string certificate_json(const PowerSumCertificate& cert, std::optional<std::uint32_t> rank) {
  Json doc = envelope("power_sum_certificate");
  doc["field"] = cert.field()->spec().str();
  doc["d"] = cert.d();
  doc["target"] = cert.target().str();
  if (rank) doc["rank"] = *rank;
  Json witnesses = Json::array();
  if (cert.witness_count() <= kFlatWitnessLimit) {
    for (const Element& w : cert.flat_witnesses(kFlatWitnessLimit)) witnesses.push_back(w.str());
  } else {
    for (const PowerTerm& term : cert.terms()) {
      Json entry;
      entry["value"] = term.value.str();
      entry["count"] = to_string(term.count);
      witnesses.push_back(std::move(entry));
    }
  }
  doc["witnesses"] = std::move(witnesses);
  return doc.dump();
}

std::string identity_json(const HilbertIdentity& identity) {
  Json doc = envelope("hilbert_identity");
  doc["n"] = identity.n;
  doc["d"] = identity.d;
  Json terms = Json::array();
  for (const HilbertTerm& term : identity.terms) {
    Json entry;
    entry["lambda"] = to_string(term.lambda);
    Json form = Json::array();
    for (const Rational& c : term.form) form.push_back(to_string(c));
    entry["form"] = std::move(form);
    terms.push_back(std::move(entry));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string fermat_solution_json(const SolutionVector& solution, SolveMethod method,
                                 std::uint32_t n) {
  Json doc = envelope("fermat_solution");
  doc["field"] = solution.form().field->spec().str();
  doc["d"] = solution.form().d;
  doc["n"] = n;
  doc.update(solution_body(solution, method));
  return doc.dump();
}

std::string diagonal_solution_json(const SolutionVector& solution, SolveMethod method) {
  Json doc = envelope("diagonal_solution");
  doc["field"] = solution.form().field->spec().str();
  doc["d"] = solution.form().d;
  Json coeffs = Json::array();
  for (const Element& c : solution.form().coefficients) coeffs.push_back(c.str());
  doc["coefficients"] = std::move(coeffs);
  doc.update(solution_body(solution, method));
  return doc.dump();
}

std::string fermat_no_solution_json(const FieldHandle& field, std::uint64_t d, std::uint32_t n) {
  Json doc = envelope("no_solution");
  doc["result"] = "no_solution";
  doc["problem"] = "fermat";
  doc["field"] = field->spec().str();
  doc["d"] = d;
  doc["n"] = n;
  doc["method"] = std::string(solve_method_name(SolveMethod::BruteForce));
  return doc.dump();
}

std::string diagonal_no_solution_json(const DiagonalForm& form) {
  Json doc = envelope("no_solution");
  doc["result"] = "no_solution";
  doc["problem"] = "diagonal";
  doc["field"] = form.field->spec().str();
  doc["d"] = form.d;
  Json coeffs = Json::array();
  for (const Element& c : form.coefficients) coeffs.push_back(c.str());
  doc["coefficients"] = std::move(coeffs);
  doc["method"] = std::string(solve_method_name(SolveMethod::BruteForce));
  return doc.dump();
}

std::string schreier_json(const PermGroupSpec& group, const SchreierResult& result) {
  Json doc = envelope("schreier_result");
  doc["degree"] = group.degree;
  Json gens = Json::array();
  for (const Permutation& g : group.generators) gens.push_back(g.cycle_str());
  doc["generators"] = std::move(gens);
  doc["base"] = result.base;
  doc["orbit"] = result.orbit;
  doc["index"] = result.index;
  doc["generator_count_bound"] = to_string(result.generator_count_bound);
  Json sub = Json::array();
  for (const Permutation& g : result.subgroup_generators) sub.push_back(g.cycle_str());
  doc["subgroup_generators"] = std::move(sub);
  return doc.dump();
}

std::string kummer_bound_json(std::uint64_t d, std::uint64_t g, const BigInt& bound) {
  Json doc = envelope("kummer_bound");
  doc["d"] = d;
  doc["g"] = g;
  doc["bound"] = to_string(bound);
  return doc.dump();
}

std::string generator_bound_json(std::uint64_t g, const BigInt& index, const BigInt& bound) {
  Json doc = envelope("generator_bound");
  doc["generators"] = g;
  doc["index"] = to_string(index);
  doc["bound"] = to_string(bound);
  return doc.dump();
}

std::string diagonal_variable_bound_json(std::uint64_t d, std::uint64_t g, const BigInt& n,
                                         const BigInt& big_n) {
  Json doc = envelope("diagonal_variable_bound");
  doc["d"] = d;
  doc["g"] = g;
  doc["variables"] = to_string(n);
  doc["variables_squared"] = to_string(big_n);
  return doc.dump();
}

std::string sweep_report_json(const SweepReport& report) {
  Json doc = envelope("sweep_report");
  doc["q_max"] = report.options.q_max;
  doc["d_max"] = report.options.d_max;
  doc["trials"] = report.options.trials;
  doc["seed"] = report.options.seed;
  Json cells = Json::array();
  for (const SweepCell& cell : report.cells) {
    Json entry;
    entry["q"] = cell.q;
    entry["d"] = cell.d;
    entry["class_count"] = cell.class_count;
    entry["formula_class_count"] = cell.formula_class_count;
    entry["stabilization_index"] = cell.stabilization_index;
    entry["minus_one_rank"] = cell.minus_one_rank;
    entry["constructive_n"] = cell.constructive_n;
    entry["oracle_min_n"] = cell.oracle_min_n;
    entry["kummer_bound"] = to_string(cell.kummer_bound);
    entry["violations"] = cell.violations;
    cells.push_back(std::move(entry));
  }
  doc["cells"] = std::move(cells);
  doc["violations"] = report.violations;
  doc["pass"] = report.violations.empty();
  return doc.dump();
}

VerifyReport verify_document(const std::string& text, const Limits& limits) {
  Json doc = parse_json(text);
  std::string type = require_envelope(doc);
  try {
    if (type == "power_sum_certificate") return verify_certificate_doc(doc, limits);
    if (type == "hilbert_identity") return verify_identity_doc(doc);
    if (type == "fermat_solution") return verify_fermat_doc(doc);
    if (type == "diagonal_solution") return verify_diagonal_doc(doc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError || e.category() == ErrorCategory::Resource) throw;
    return {false, type, e.what()};
  }
  schema_fail("unverifiable document type \"" + type + "\"");
}

std::string verify_report_json(const VerifyReport& report) {
  Json doc = envelope("verify_report");
  doc["doc_type"] = report.doc_type;
  doc["valid"] = report.valid;
  doc["reason"] = report.reason;
  return doc.dump();
}

PowerSumCertificate parse_certificate(const std::string& text, const Limits& limits) {
  Json doc = parse_json(text);
  if (require_envelope(doc) != "power_sum_certificate")
    schema_fail("expected a power_sum_certificate document");
  return certificate_from_json(doc, limits);
}

HilbertIdentity parse_identity(const std::string& text) {
  Json doc = parse_json(text);
  if (require_envelope(doc) != "hilbert_identity")
    schema_fail("expected a hilbert_identity document");
  return identity_from_json(doc);
}

}  // namespace cf::jsonio
