#include "cf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cf/bounds.hpp"
#include "cf/config.hpp"
#include "cf/errors.hpp"
#include "cf/field.hpp"
#include "cf/hilbert.hpp"
#include "cf/json_io.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"
#include "cf/sweep.hpp"
#include "cf/waring.hpp"

namespace cf::cli {
namespace {

struct GlobalOptions {
  std::string format = "json";
  Limits limits;
};

void load_config(const std::string& path, bool explicit_path, GlobalOptions& g) {
  std::ifstream in(path);
  if (!in) {
    if (explicit_path) throw Error(ErrorCode::BadArgument, "cannot open config file " + path);
    return;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto doc = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error(ErrorCode::SchemaError, "config file is not a JSON object: " + path);
  if (doc.contains("format")) {
    if (!doc["format"].is_string())
      throw Error(ErrorCode::SchemaError, "config key \"format\" must be a string");
    g.format = doc["format"].get<std::string>();
    if (g.format != "json" && g.format != "text")
      throw Error(ErrorCode::SchemaError, "config key \"format\" must be json or text");
  }
  if (doc.contains("brute_force_cap")) {
    if (!doc["brute_force_cap"].is_number_unsigned())
      throw Error(ErrorCode::SchemaError, "config key \"brute_force_cap\" must be a nonnegative integer");
    g.limits.brute_force_cap = doc["brute_force_cap"].get<std::uint64_t>();
  }
  if (doc.contains("enumeration_cap")) {
    if (!doc["enumeration_cap"].is_number_unsigned())
      throw Error(ErrorCode::SchemaError, "config key \"enumeration_cap\" must be a nonnegative integer");
    g.limits.enumeration_cap = doc["enumeration_cap"].get<std::uint64_t>();
  }
  if (doc.contains("hilbert_max_height")) {
    if (!doc["hilbert_max_height"].is_number_unsigned())
      throw Error(ErrorCode::SchemaError, "config key \"hilbert_max_height\" must be a nonnegative integer");
    g.limits.hilbert_max_height = doc["hilbert_max_height"].get<int>();
  }
}

std::string render_text(const std::string& json_text) {
  auto doc = nlohmann::ordered_json::parse(json_text);
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  return os.str();
}

void emit(const std::string& json_text, const GlobalOptions& g, std::ostream& out) {
  if (g.format == "text") {
    out << render_text(json_text);
  } else {
    out << json_text << '\n';
  }
}

FieldHandle resolve_field(const std::string& spec, std::uint64_t q) {
  if (!spec.empty() && q != 0)
    throw Error(ErrorCode::BadArgument, "give either --field or --q, not both");
  if (!spec.empty()) return Field::make(spec);
  if (q != 0) return Field::make("q=" + std::to_string(q));
  throw Error(ErrorCode::BadArgument, "a field is required: --field or --q");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  for (std::string& part : parts) {
    std::size_t lo = part.find_first_not_of(" \t");
    std::size_t hi = part.find_last_not_of(" \t");
    part = (lo == std::string::npos) ? std::string() : part.substr(lo, hi - lo + 1);
    if (part.empty())
      throw Error(ErrorCode::BadArgument, "empty entry in comma-separated list");
  }
  return parts;
}

std::vector<Element> parse_elements(const FieldHandle& field, const std::string& text) {
  std::vector<Element> out;
  for (const std::string& part : split_commas(text)) out.push_back(field->parse_element(part));
  return out;
}

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadArgument, "cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

struct FieldArgs {
  std::string spec;
  std::uint64_t q = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--field,-f", spec,
                    "field spec: p=7, q=9, q=9:x^2+1, Q, or Q[x]/(x^2+1)");
    cmd->add_option("--q", q, "finite field order, shorthand for --field q=N");
  }
  FieldHandle resolve() const { return resolve_field(spec, q); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions g;

  // The config file has to load before CLI11 sees the flags so that flags
  // override it; scan for --config by hand first.
  std::string config_path = "cf.config.json";
  bool explicit_config = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      explicit_config = true;
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      explicit_config = true;
    }
  }
  try {
    load_config(config_path, explicit_config, g);
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_status(e.category());
  }

  CLI::App app{"exact arithmetic for power residue classes, power-sum certificates, "
               "Hilbert identities, and points on diagonal forms"};
  app.require_subcommand(1);

  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON config file (default cf.config.json)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", g.limits.brute_force_cap, "brute-force point budget");
  app.add_option("--enum-cap", g.limits.enumeration_cap, "field enumeration budget");
  app.add_option("--max-height", g.limits.hilbert_max_height,
                 "height limit for the identity search");

  int exit_code = 0;

  auto* field_cmd = app.add_subcommand("field", "describe a field");
  FieldArgs field_field;
  field_field.attach(field_cmd);
  bool list_elements = false;
  field_cmd->add_flag("--elements", list_elements, "list the elements (finite fields)");
  field_cmd->fallthrough();
  field_cmd->callback([&] {
    emit(jsonio::field_info_json(field_field.resolve(), list_elements, g.limits), g, out);
  });

  auto* residue_cmd = app.add_subcommand("residue", "d-th power residue classes");
  FieldArgs residue_field;
  residue_field.attach(residue_cmd);
  std::uint64_t residue_d = 1;
  bool residue_chain = false;
  residue_cmd->add_option("--d", residue_d, "exponent")->required();
  residue_cmd->add_flag("--chain", residue_chain, "emit the cumulative sum chain instead");
  residue_cmd->fallthrough();
  residue_cmd->callback([&] {
    FieldHandle field = residue_field.resolve();
    if (residue_chain) {
      SigmaChain chain(field, residue_d, g.limits);
      emit(jsonio::sigma_chain_json(chain), g, out);
    } else {
      ResidueTable table(field, residue_d, g.limits);
      emit(jsonio::residue_table_json(table), g, out);
    }
  });

  auto* waring_cmd = app.add_subcommand("waring", "power-sum rank and certificate");
  FieldArgs waring_field;
  waring_field.attach(waring_cmd);
  std::uint64_t waring_d = 1;
  std::string waring_target = "-1";
  std::string waring_squares;
  waring_cmd->add_option("--d", waring_d, "exponent")->required();
  waring_cmd->add_option("--target", waring_target, "element to represent (default -1)");
  waring_cmd->add_option("--minus-one-squares", waring_squares,
                         "comma-separated squares witnessing -1 (characteristic 0)");
  waring_cmd->fallthrough();
  waring_cmd->callback([&] {
    FieldHandle field = waring_field.resolve();
    if (field->is_finite()) {
      if (!waring_squares.empty())
        throw Error(ErrorCode::BadArgument,
                    "--minus-one-squares only applies to characteristic-zero fields");
      WaringResult result = waring_rank(field, waring_d, field->parse_element(waring_target),
                                        g.limits);
      emit(jsonio::certificate_json(result.certificate, result.rank), g, out);
    } else {
      if (field->parse_element(waring_target) != field->from_integer(-1))
        throw Error(ErrorCode::BadArgument,
                    "characteristic-zero targets other than -1 are not supported");
      if (waring_squares.empty())
        throw Error(ErrorCode::BadArgument,
                    "characteristic-zero fields need --minus-one-squares");
      PowerSumCertificate squares = PowerSumCertificate::from_witnesses(
          field->from_integer(-1), 2, parse_elements(field, waring_squares));
      emit(jsonio::certificate_json(represent_minus_one(field, waring_d, squares, g.limits)),
           g, out);
    }
  });

  auto* hilbert_cmd = app.add_subcommand("hilbert", "identity (x_1^2+...+x_n^2)^d as a "
                                                    "positive combination of 2d-th powers");
  std::uint64_t hilbert_n = 1;
  std::uint64_t hilbert_d = 1;
  hilbert_cmd->add_option("--n", hilbert_n, "number of variables")->required();
  hilbert_cmd->add_option("--d", hilbert_d, "outer exponent")->required();
  hilbert_cmd->fallthrough();
  hilbert_cmd->callback([&] {
    HilbertIdentity identity = find_hilbert_identity(static_cast<std::size_t>(hilbert_n),
                                                     static_cast<unsigned>(hilbert_d), g.limits);
    emit(jsonio::identity_json(identity), g, out);
  });

  auto* fermat_cmd = app.add_subcommand("fermat", "nontrivial zero of x_0^d+...+x_n^d");
  FieldArgs fermat_field;
  fermat_field.attach(fermat_cmd);
  std::uint64_t fermat_d = 1;
  std::uint64_t fermat_n = 1;
  fermat_cmd->add_option("--d", fermat_d, "exponent")->required();
  fermat_cmd->add_option("--n", fermat_n, "index n, giving n+1 variables")->required();
  fermat_cmd->fallthrough();
  fermat_cmd->callback([&] {
    FieldHandle field = fermat_field.resolve();
    auto n = static_cast<std::uint32_t>(fermat_n);
    SolveOutcome outcome = fermat_point(field, fermat_d, n, g.limits);
    if (outcome.solution) {
      emit(jsonio::fermat_solution_json(*outcome.solution, outcome.method, n), g, out);
    } else {
      emit(jsonio::fermat_no_solution_json(field, fermat_d, n), g, out);
      exit_code = 1;
    }
  });

  auto* diagonal_cmd = app.add_subcommand("diagonal", "nontrivial zero of a diagonal form");
  FieldArgs diagonal_field;
  diagonal_field.attach(diagonal_cmd);
  std::uint64_t diagonal_d = 1;
  std::string diagonal_coeffs;
  diagonal_cmd->add_option("--d", diagonal_d, "exponent")->required();
  diagonal_cmd->add_option("--coefficients", diagonal_coeffs,
                           "comma-separated coefficients, e.g. 1,2,3")->required();
  diagonal_cmd->fallthrough();
  diagonal_cmd->callback([&] {
    FieldHandle field = diagonal_field.resolve();
    DiagonalForm form{field, diagonal_d, parse_elements(field, diagonal_coeffs)};
    SolveOutcome outcome = diagonal_solve(form, g.limits);
    if (outcome.solution) {
      emit(jsonio::diagonal_solution_json(*outcome.solution, outcome.method), g, out);
    } else {
      emit(jsonio::diagonal_no_solution_json(form), g, out);
      exit_code = 1;
    }
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "effective bounds");
  bounds_cmd->require_subcommand(1);
  bounds_cmd->fallthrough();

  auto* kummer_cmd = bounds_cmd->add_subcommand("kummer", "class-count bound d^{dg+1}");
  std::uint64_t kummer_d = 1;
  std::uint64_t kummer_g = 1;
  kummer_cmd->add_option("--d", kummer_d, "exponent")->required();
  kummer_cmd->add_option("--g", kummer_g, "number of simultaneous exponents");
  kummer_cmd->fallthrough();
  kummer_cmd->callback([&] {
    emit(jsonio::kummer_bound_json(kummer_d, kummer_g, kummer_bound(kummer_d, kummer_g)), g, out);
  });

  auto* generator_cmd = bounds_cmd->add_subcommand("generator",
                                                   "subgroup generator bound 1 + index*(g-1)");
  std::uint64_t generator_g = 1;
  std::string generator_index = "1";
  generator_cmd->add_option("--g", generator_g, "number of group generators")->required();
  generator_cmd->add_option("--index", generator_index, "subgroup index")->required();
  generator_cmd->fallthrough();
  generator_cmd->callback([&] {
    BigInt index = parse_bigint(generator_index);
    emit(jsonio::generator_bound_json(generator_g, index, generator_bound(generator_g, index)),
         g, out);
  });

  auto* diagvars_cmd = bounds_cmd->add_subcommand("diagvars",
                                                  "variable count bound for diagonal forms");
  std::uint64_t diagvars_d = 1;
  std::uint64_t diagvars_g = 1;
  diagvars_cmd->add_option("--d", diagvars_d, "exponent")->required();
  diagvars_cmd->add_option("--g", diagvars_g, "number of simultaneous exponents");
  diagvars_cmd->fallthrough();
  diagvars_cmd->callback([&] {
    auto [n, big_n] = diagonal_variable_bound(diagvars_d, diagvars_g);
    emit(jsonio::diagonal_variable_bound_json(diagvars_d, diagvars_g, n, big_n), g, out);
  });

  auto* schreier_cmd = bounds_cmd->add_subcommand("schreier",
                                                  "Schreier generators of a point stabilizer");
  std::uint64_t schreier_degree = 1;
  std::uint64_t schreier_base = 0;
  std::string schreier_gens;
  schreier_cmd->add_option("--degree", schreier_degree, "points 0..degree-1")->required();
  schreier_cmd->add_option("--generators", schreier_gens,
                           "comma-separated cycles, e.g. \"(0 1),(0 1 2)\"")->required();
  schreier_cmd->add_option("--base", schreier_base, "stabilized point (default 0)");
  schreier_cmd->fallthrough();
  schreier_cmd->callback([&] {
    PermGroupSpec group = parse_group(schreier_gens, static_cast<std::uint32_t>(schreier_degree));
    SchreierResult result = schreier_generators(group, static_cast<std::uint32_t>(schreier_base));
    emit(jsonio::schreier_json(group, result), g, out);
  });

  auto* verify_cmd = app.add_subcommand("verify", "re-check an emitted document");
  std::string verify_input = "-";
  verify_cmd->add_option("input", verify_input, "path to a JSON document, or - for stdin");
  verify_cmd->fallthrough();
  verify_cmd->callback([&] {
    jsonio::VerifyReport report = jsonio::verify_document(read_input(verify_input), g.limits);
    emit(jsonio::verify_report_json(report), g, out);
    if (!report.valid) exit_code = 1;
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "grid check over prime powers");
  SweepOptions sweep_options;
  sweep_cmd->add_option("--q-max", sweep_options.q_max, "largest prime power");
  sweep_cmd->add_option("--d-max", sweep_options.d_max, "largest exponent");
  sweep_cmd->add_option("--trials", sweep_options.trials, "random diagonal forms per cell");
  sweep_cmd->add_option("--seed", sweep_options.seed, "seed for the random trials");
  sweep_cmd->add_option("--threads", sweep_options.threads, "worker threads (0 = hardware)");
  sweep_cmd->fallthrough();
  sweep_cmd->callback([&] {
    sweep_options.limits = g.limits;
    SweepReport report = run_sweep(sweep_options);
    emit(jsonio::sweep_report_json(report), g, out);
    if (!report.violations.empty()) exit_code = 1;
  });

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("cf");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : exit_status(ErrorCategory::Usage);
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_status(e.category());
  }
  return exit_code;
}

}  // namespace cf::cli
