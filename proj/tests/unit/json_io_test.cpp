#include <doctest.h>

#include <string>
#include <vector>

#include "cf/errors.hpp"
#include "cf/field.hpp"
#include "cf/hilbert.hpp"
#include "cf/json_io.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"
#include "cf/waring.hpp"

using namespace cf;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("[TRIVIAL] certificate documents round-trip") {
  FieldHandle f = Field::make("p=7");
  WaringResult r = waring_rank(f, 2, f->from_integer(6));
  std::string doc = jsonio::certificate_json(r.certificate, r.rank);
  CHECK(contains(doc, "\"rank\":2"));
  CHECK(contains(doc, "\"witnesses\":[\"2\",\"3\"]"));

  PowerSumCertificate back = jsonio::parse_certificate(doc);
  CHECK(back.target() == f->from_integer(6));
  CHECK(back.witness_count() == BigInt(2));

  jsonio::VerifyReport report = jsonio::verify_document(doc);
  CHECK(report.valid);
  CHECK(report.doc_type == "power_sum_certificate");
}

TEST_CASE("[DERIVED] witness lists switch to value/count pairs past the flat limit") {
  FieldHandle f = Field::make("Q");
  // 65 copies of 1: total above the limit, so the compressed form is used
  PowerSumCertificate wide(f->from_integer(65), 1, {{f->one(), BigInt(65)}});
  std::string doc = jsonio::certificate_json(wide);
  CHECK(contains(doc, "\"count\":\"65\""));
  CHECK(jsonio::verify_document(doc).valid);

  // 64 copies stays flat
  PowerSumCertificate at_limit(f->from_integer(64), 1, {{f->one(), BigInt(64)}});
  std::string flat = jsonio::certificate_json(at_limit);
  CHECK(!contains(flat, "count"));
  CHECK(jsonio::verify_document(flat).valid);

  // both forms parse back to the same certificate
  PowerSumCertificate a = jsonio::parse_certificate(flat);
  CHECK(a.terms().size() == 1);
  CHECK(a.terms()[0].count == BigInt(64));
}

TEST_CASE("[TRIVIAL] identity documents round-trip") {
  HilbertIdentity id = find_hilbert_identity(2, 3);
  std::string doc = jsonio::identity_json(id);
  HilbertIdentity back = jsonio::parse_identity(doc);
  CHECK(back.n == id.n);
  CHECK(back.d == id.d);
  REQUIRE(back.terms.size() == id.terms.size());
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    CHECK(back.terms[i].lambda == id.terms[i].lambda);
    CHECK(back.terms[i].form == id.terms[i].form);
  }
  CHECK(jsonio::verify_document(doc).valid);
}

TEST_CASE("[TRIVIAL] solution documents verify") {
  FieldHandle f = Field::make("q=9");
  SolveOutcome fermat = fermat_point(f, 2, 2);
  REQUIRE(fermat.solution.has_value());
  std::string doc = jsonio::fermat_solution_json(*fermat.solution, fermat.method, 2);
  CHECK(contains(doc, "\"verified\":true"));
  CHECK(jsonio::verify_document(doc).valid);

  DiagonalForm form{f, 2, {f->one(), f->generator(), f->generator() + f->one()}};
  SolveOutcome diag = diagonal_solve(form, {});
  REQUIRE(diag.solution.has_value());
  std::string ddoc = jsonio::diagonal_solution_json(*diag.solution, diag.method);
  CHECK(jsonio::verify_document(ddoc).valid);
}

TEST_CASE("[DERIVED] corrupted documents fail verification with a reason") {
  FieldHandle f = Field::make("p=7");
  WaringResult r = waring_rank(f, 2, f->from_integer(6));
  std::string doc = jsonio::certificate_json(r.certificate, r.rank);

  // 2^2 + 5^2 = 29 = 1 != 6
  jsonio::VerifyReport bad_witness =
      jsonio::verify_document(replace_once(doc, "\"2\",\"3\"", "\"2\",\"5\""));
  CHECK(!bad_witness.valid);
  CHECK(contains(bad_witness.reason, "sum"));

  jsonio::VerifyReport bad_rank =
      jsonio::verify_document(replace_once(doc, "\"rank\":2", "\"rank\":1"));
  CHECK(!bad_rank.valid);

  jsonio::VerifyReport bad_target =
      jsonio::verify_document(replace_once(doc, "\"target\":\"6\"", "\"target\":\"5\""));
  CHECK(!bad_target.valid);

  // malformed structure is a schema error, not a semantic failure
  CHECK_THROWS_AS((void)jsonio::verify_document("{\"schema\":\"cf/1\"}"), Error);
  CHECK_THROWS_AS((void)jsonio::verify_document("garbage"), Error);
  CHECK_THROWS_AS((void)jsonio::verify_document(replace_once(doc, "\"cf/1\"", "\"cf/2\"")), Error);
  CHECK_THROWS_AS(
      (void)jsonio::verify_document(replace_once(doc, "power_sum_certificate", "residue_table")),
      Error);
  try {
    (void)jsonio::verify_document(replace_once(doc, "power_sum_certificate", "no_solution"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
}

TEST_CASE("[DERIVED] identity corruption is caught by re-expansion") {
  HilbertIdentity id = find_hilbert_identity(2, 2);
  std::string doc = jsonio::identity_json(id);
  jsonio::VerifyReport bad =
      jsonio::verify_document(replace_once(doc, "\"2/3\"", "\"3/4\""));
  CHECK(!bad.valid);
  CHECK(contains(bad.reason, "expansion"));
}

TEST_CASE("[DERIVED] solution corruption is caught by re-evaluation") {
  FieldHandle f = Field::make("p=7");
  SolveOutcome out = fermat_point(f, 2, 2);
  REQUIRE(out.solution.has_value());
  std::string doc = jsonio::fermat_solution_json(*out.solution, out.method, 2);

  jsonio::VerifyReport bad =
      jsonio::verify_document(replace_once(doc, "\"solution\":[\"1\"", "\"solution\":[\"5\""));
  CHECK(!bad.valid);

  jsonio::VerifyReport unverified =
      jsonio::verify_document(replace_once(doc, "\"verified\":true", "\"verified\":false"));
  CHECK(!unverified.valid);
  CHECK(contains(unverified.reason, "assert"));

  // an unknown method name is structural
  CHECK_THROWS_AS(
      (void)jsonio::verify_document(replace_once(doc, "certificate", "oracle")), Error);
}

TEST_CASE("[TRIVIAL] emission is deterministic") {
  FieldHandle f = Field::make("q=25");
  ResidueTable table(f, 4);
  CHECK(jsonio::residue_table_json(table) == jsonio::residue_table_json(table));
  SigmaChain chain(f, 4);
  CHECK(jsonio::sigma_chain_json(chain) == jsonio::sigma_chain_json(chain));
  CHECK(jsonio::field_info_json(f, true) == jsonio::field_info_json(f, true));
}

TEST_CASE("[TRIVIAL] number field elements survive the round-trip") {
  FieldHandle f = Field::make("Q[x]/(x^2+1)");
  PowerSumCertificate squares = PowerSumCertificate::from_witnesses(
      f->from_integer(-1), 2, {f->generator()});
  PowerSumCertificate cert = represent_minus_one(f, 4, squares);
  std::string doc = jsonio::certificate_json(cert);
  PowerSumCertificate back = jsonio::parse_certificate(doc);
  CHECK(back.witness_count() == cert.witness_count());
  CHECK(back.terms().size() == cert.terms().size());
  CHECK(jsonio::verify_document(doc).valid);
}
