#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lme/errors.hpp"
#include "lme/generators.hpp"
#include "lme/kernel.hpp"
#include "lme/lrcalc.hpp"
#include "lme/powerdecomp.hpp"
#include "lme/serialize.hpp"
#include "lme/states.hpp"
#include "lme/tables.hpp"
#include "lme/telescope.hpp"

namespace {

using lme::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitVerify = 3;

struct Config {
  std::string format = "json";
  std::string lambda;
  std::string eta;
  int m = 2;
  int n_parties = 1;
  std::string method = "iterated";
  std::uint64_t cap_dims = lme::kDefaultDimCap;
  std::size_t max_diagrams = 1'000'000;
  bool serial = false;
  // construct
  bool trace = false;
  // verify-theorem
  int min_n = 2;
  int max_n = 5;
  int max_part = 4;
  bool check_iterated = false;
  // synthesize
  std::string group = "su";
  int d = 2;
  int modes = 3;
  int bosons = 2;
  bool basis = false;
  bool all_roots = false;
  // tables
  int table = 1;
  int d_min = 0;
  int d_max = 0;
  int n_min = 1;
  int n_max = 0;
};

void print_json(const Json& body) { std::cout << lme::with_schema(body).dump(2) << '\n'; }

bool ascii(const Config& c) { return c.format == "ascii"; }

lme::PowerOptions power_options(const Config& c) {
  lme::PowerOptions o;
  o.max_diagrams = c.max_diagrams;
  o.parallel = !c.serial;
  return o;
}

int cmd_decompose(const Config& c) {
  const lme::Partition lambda = lme::parse_lambda(c.lambda);
  const lme::Partition eta = lme::parse_lambda(c.eta);
  const lme::Decomposition d = lme::lr_expand(lambda, eta, c.m);
  if (ascii(c)) {
    for (const auto& [nu, mult] : d.entries()) {
      std::cout << mult.get_str() << " x (" << nu.key() << ")\n" << lme::render_ascii(nu) << '\n';
    }
    return kExitOk;
  }
  print_json({{"lambda", lme::to_json(lambda)},
              {"eta", lme::to_json(eta)},
              {"m", c.m},
              {"decomposition", lme::to_json(d)}});
  return kExitOk;
}

int cmd_power(const Config& c) {
  const lme::PowerQuery q{lme::parse_lambda(c.lambda), c.m, c.n_parties};
  const lme::Decomposition d = lme::tensor_power_decompose(q, power_options(c));
  lme::BigInt trivial = 0;
  for (const auto& [nu, mult] : d.entries()) {
    if (lme::is_trivial_for(nu, c.m)) trivial += mult;
  }
  if (ascii(c)) {
    for (const auto& [nu, mult] : d.entries()) std::cout << mult.get_str() << " x (" << nu.key() << ")\n";
    std::cout << "trivial multiplicity: " << trivial.get_str() << '\n';
    return kExitOk;
  }
  print_json({{"lambda", lme::to_json(q.lambda)},
              {"m", q.m},
              {"N", q.n_parties},
              {"decomposition", lme::to_json(d)},
              {"trivial_multiplicity", trivial.get_str()}});
  return kExitOk;
}

int cmd_trivial_mult(const Config& c) {
  const lme::PowerQuery q{lme::parse_lambda(c.lambda), c.m, c.n_parties};
  const lme::TrivialMethod method = lme::parse_trivial_method(c.method);
  const lme::BigInt mult = lme::trivial_multiplicity(q, method, power_options(c));
  if (ascii(c)) {
    std::cout << mult.get_str() << '\n';
    return kExitOk;
  }
  print_json({{"lambda", lme::to_json(q.lambda)},
              {"m", q.m},
              {"N", q.n_parties},
              {"trivial_multiplicity", mult.get_str()},
              {"method", lme::to_string(method)}});
  return kExitOk;
}

Json conditions_json(const lme::ConditionReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"i", f.i}, {"k", f.k}, {"m", f.m}});
  return {{"nonnegative_delta", r.nonnegative_delta},
          {"delta_dominates", r.delta_dominates},
          {"row_counting", r.row_counting},
          {"column_counting", r.column_counting},
          {"trace_shapes", r.trace_shapes},
          {"formula_matches_trace", r.formula_matches_trace},
          {"rectangular", r.rectangular},
          {"failures", failures}};
}

int cmd_construct(const Config& c) {
  const lme::Partition lambda = lme::parse_lambda(c.lambda);
  const lme::ExpansionPlan plan = lme::build_expansion_plan(lambda, c.n_parties);
  std::optional<lme::ExecutionResult> result;
  std::string failure;
  try {
    result = lme::execute_plan(plan);
  } catch (const lme::ConditionViolation& e) {
    failure = e.what();
  }
  const lme::ConditionReport report = lme::verify_conditions(lambda, c.n_parties);
  const bool pass = result.has_value() && report.ok();

  if (ascii(c)) {
    if (c.trace && result) {
      for (std::size_t k = 0; k < result->trace.size(); ++k) {
        std::cout << "step " << k + 1 << ":\n" << lme::render_ascii(result->trace[k]) << '\n';
      }
    }
    if (result) std::cout << "final (" << result->final_shape.key() << ")\n";
    if (!failure.empty()) std::cout << "failed: " << failure << '\n';
    std::cout << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitOk : kExitVerify;
  }
  Json body = {{"lambda", lme::to_json(lambda)}, {"N", c.n_parties}};
  body["final"] = result ? lme::to_json(result->final_shape) : Json(nullptr);
  body["pass"] = pass;
  if (!failure.empty()) body["failure"] = failure;
  body["conditions"] = conditions_json(report);
  if (c.trace) body["trace"] = lme::trace_json(plan);
  print_json(body);
  return pass ? kExitOk : kExitVerify;
}

int cmd_verify_theorem(const Config& c) {
  lme::SweepOptions o;
  o.iterated = c.check_iterated;
  o.parallel = !c.serial;
  const auto cases = lme::theorem_sweep(c.min_n, c.max_n, c.max_part, o);
  std::size_t failed = 0;
  Json failures = Json::array();
  for (const auto& s : cases) {
    if (s.ok()) continue;
    ++failed;
    failures.push_back({{"lambda", lme::to_json(s.lambda)}, {"N", s.n}, {"failure", s.failure}});
  }
  if (ascii(c)) {
    std::cout << "cases: " << cases.size() << "\npassed: " << cases.size() - failed << "\nfailed: " << failed
              << '\n';
    for (const auto& f : failures) std::cout << "  " << f.dump() << '\n';
  } else {
    print_json({{"min_N", c.min_n},
                {"max_N", c.max_n},
                {"max_part", c.max_part},
                {"cases", cases.size()},
                {"passed", cases.size() - failed},
                {"failed", failed},
                {"failures", failures}});
  }
  return failed == 0 ? kExitOk : kExitVerify;
}

int cmd_synthesize(const Config& c) {
  const lme::Group group = lme::parse_group(c.group);
  const lme::GeneratorSet gens = group == lme::Group::boson
                                     ? lme::make_generators(group, c.modes, c.bosons, c.all_roots)
                                     : lme::make_generators(group, c.d, 1, c.all_roots);
  lme::KernelOptions ko;
  ko.max_dim = c.cap_dims;
  ko.parallel = !c.serial;
  const auto basis = lme::trivial_subspace(gens, c.n_parties, ko);
  bool lme_ok = true;
  for (const auto& v : basis) lme_ok = lme_ok && lme::is_lme(v);

  if (ascii(c)) {
    std::cout << "kernel dimension: " << basis.size() << "\nall basis vectors LME: " << (lme_ok ? "yes" : "no")
              << '\n';
    if (c.basis) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::cout << "vector " << b << ":\n";
        for (const auto& [x, a] : basis[b].amplitudes()) {
          std::cout << "  |";
          const auto digits = lme::decode_index(x, gens.d, c.n_parties);
          for (std::size_t p = 0; p < digits.size(); ++p) std::cout << (p ? "," : "") << digits[p];
          std::cout << "> " << a.str() << '\n';
        }
      }
    }
    return lme_ok ? kExitOk : kExitVerify;
  }
  Json body = {{"group", lme::to_string(group)}, {"d", gens.d}, {"N", c.n_parties}};
  if (group == lme::Group::boson) {
    body["modes"] = c.modes;
    body["bosons"] = c.bosons;
  }
  body["kernel_dim"] = basis.size();
  body["lme"] = lme_ok;
  if (c.basis) {
    Json states = Json::array();
    for (const auto& v : basis) states.push_back(lme::to_json(v));
    body["basis"] = states;
  }
  print_json(body);
  return lme_ok ? kExitOk : kExitVerify;
}

Json table_json(const lme::MultiplicityTable& t) {
  Json cells = Json::array();
  for (const auto& cell : t.cells) {
    Json j = {{"d", cell.d}, {"N", cell.n}};
    j["value"] = cell.value ? Json(cell.value->get_str()) : Json(nullptr);
    j["method"] = cell.method;
    if (cell.catalan) j["catalan"] = cell.catalan->get_str();
    if (cell.lme) j["lme"] = *cell.lme;
    cells.push_back(j);
  }
  return {{"table", t.id}, {"d", {t.d_min, t.d_max}}, {"N", {t.n_min, t.n_max}}, {"cells", cells}};
}

int cmd_tables(const Config& c) {
  lme::MultiplicityTable t;
  if (c.table == 1) {
    t = lme::table_su(c.d_min > 0 ? c.d_min : 2, c.d_max > 0 ? c.d_max : 6, c.n_min,
                      c.n_max > 0 ? c.n_max : 12, power_options(c));
  } else if (c.table == 2) {
    lme::SoTableOptions o;
    o.max_dim = c.cap_dims;
    o.parallel = !c.serial;
    t = lme::table_so(c.d_min > 0 ? c.d_min : 3, c.d_max > 0 ? c.d_max : 7, c.n_min,
                      c.n_max > 0 ? c.n_max : 10, o);
  } else {
    throw lme::Error("table must be 1 or 2");
  }
  if (ascii(c)) {
    std::cout << lme::render_ascii(t);
  } else {
    print_json(table_json(t));
  }
  return kExitOk;
}

void add_format(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  sub->add_flag("--serial", c.serial, "Use the serial reference paths");
}

void add_power_query(CLI::App* sub, Config& c) {
  sub->add_option("--lambda", c.lambda, "Young diagram, e.g. 5,3,2")->required();
  sub->add_option("--m", c.m, "Rank of SU(m)")->required()->check(CLI::PositiveNumber);
  sub->add_option("--n-parties", c.n_parties, "Tensor power N")->required()->check(CLI::PositiveNumber);
  sub->add_option("--max-diagrams", c.max_diagrams, "Cap on intermediate diagrams")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Littlewood-Richardson, telescope and LME-state toolkit"};
  app.require_subcommand(1);
  Config c;

  auto* decompose = app.add_subcommand("decompose", "Decompose E^lambda (x) E^eta over SU(m)");
  decompose->add_option("--lambda", c.lambda, "First diagram")->required();
  decompose->add_option("--eta", c.eta, "Second diagram")->required();
  decompose->add_option("--m", c.m, "Rank of SU(m)")->required()->check(CLI::PositiveNumber);
  add_format(decompose, c);

  auto* power = app.add_subcommand("power", "Decompose (E^lambda)^{(x) N} over SU(m)");
  add_power_query(power, c);
  add_format(power, c);

  auto* trivial = app.add_subcommand("trivial-mult", "Multiplicity of the trivial irrep in (E^lambda)^{(x) N}");
  add_power_query(trivial, c);
  trivial->add_option("--method", c.method, "iterated or staircase")
      ->check(CLI::IsMember({"iterated", "staircase"}));
  add_format(trivial, c);

  auto* construct = app.add_subcommand("construct", "Run and check the telescope construction");
  construct->add_option("--lambda", c.lambda, "Young diagram with at most N-1 rows")->required();
  construct->add_option("--n-parties", c.n_parties, "N")->required()->check(CLI::PositiveNumber);
  construct->add_flag("--trace", c.trace, "Print every step");
  add_format(construct, c);

  auto* verify = app.add_subcommand("verify-theorem", "Sweep the construction over all small diagrams");
  verify->add_option("--min-n", c.min_n, "Smallest N")->check(CLI::Range(2, 64));
  verify->add_option("--max-n", c.max_n, "Largest N")->check(CLI::Range(2, 64));
  verify->add_option("--max-part", c.max_part, "Largest part")->check(CLI::PositiveNumber);
  verify->add_flag("--check-iterated", c.check_iterated, "Also compare with iterated LR products");
  add_format(verify, c);

  auto* synth = app.add_subcommand("synthesize", "Exact basis of the diagonal-symmetry kernel");
  synth->add_option("--group", c.group, "su, so or boson")->check(CLI::IsMember({"su", "so", "boson"}));
  synth->add_option("--d", c.d, "Local dimension for su and so")->check(CLI::PositiveNumber);
  synth->add_option("--modes", c.modes, "Bosonic modes")->check(CLI::PositiveNumber);
  synth->add_option("--bosons", c.bosons, "Bosons per trap")->check(CLI::PositiveNumber);
  synth->add_option("--n-parties", c.n_parties, "N")->required()->check(CLI::PositiveNumber);
  synth->add_flag("--basis", c.basis, "Print the basis vectors");
  synth->add_flag("--all-roots", c.all_roots, "Use every root operator instead of simple roots");
  synth->add_option("--cap-dims", c.cap_dims, "Cap on d^N")->check(CLI::PositiveNumber);
  add_format(synth, c);

  auto* tables = app.add_subcommand("tables", "Trivial multiplicity tables (1: SU(d), 2: SO(d))");
  tables->add_option("table", c.table, "1 or 2")->required()->check(CLI::Range(1, 2));
  tables->add_option("--d-min", c.d_min, "Smallest d")->check(CLI::PositiveNumber);
  tables->add_option("--d-max", c.d_max, "Largest d")->check(CLI::PositiveNumber);
  tables->add_option("--n-min", c.n_min, "Smallest N")->check(CLI::PositiveNumber);
  tables->add_option("--n-max", c.n_max, "Largest N")->check(CLI::PositiveNumber);
  tables->add_option("--cap-dims", c.cap_dims, "Cap on d^N for kernels")->check(CLI::PositiveNumber);
  tables->add_option("--max-diagrams", c.max_diagrams, "Cap on intermediate diagrams")->check(CLI::PositiveNumber);
  add_format(tables, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*decompose) return cmd_decompose(c);
    if (*power) return cmd_power(c);
    if (*trivial) return cmd_trivial_mult(c);
    if (*construct) return cmd_construct(c);
    if (*verify) return cmd_verify_theorem(c);
    if (*synth) return cmd_synthesize(c);
    if (*tables) return cmd_tables(c);
  } catch (const lme::ResourceBound& e) {
    std::cerr << "resource bound: " << e.what() << '\n';
    return kExitResource;
  } catch (const lme::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
