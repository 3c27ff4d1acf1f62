#include "lapvol/direct.hpp"
#include "lapvol/error.hpp"
#include "lapvol/instance_io.hpp"
#include "lapvol/oracle.hpp"
#include "lapvol/polytope.hpp"
#include "lapvol/transform.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

using namespace lapvol;

namespace {

struct VolumeArgs {
  std::string file;
  std::string method = "both";
  int digits = 12;
  bool check_only = false;
  bool verify_mc = false;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  bool stats = false;
  std::string abscissae;
  bool tolerate_floats = false;
};

std::string join(const RatVector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(v(i));
  }
  return out + "]";
}

RatVector parse_abscissae(const std::string& text) {
  std::vector<Rat> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    values.push_back(parse_rat(item));
  RatVector c(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = values[i];
  return c;
}

void print_levels(const char* method, const std::vector<LevelStats>& levels) {
  for (const auto& s : levels)
    std::cout << method << " " << to_string(s.var) << ": terms_in=" << s.terms_in
              << " poles=" << s.poles_found << " left=" << s.left_closures
              << " right=" << s.right_closures << " terms_out=" << s.terms_out
              << " perturbations=" << s.perturbations << "\n";
}

void print_ledger(const char* method, const ContourConfig& config) {
  for (const auto& r : config.ledger)
    std::cout << method << " shift " << to_string(r.level) << ": delta=" << to_string(r.delta)
              << " epsilon=" << to_string(r.epsilon) << "\n";
}

int check_only(const PolytopeInstance& inst) {
  NormalizedInstance norm = normalize(inst);
  std::cout << "rows: " << norm.rows() << " kept, " << norm.dropped_zero_rows
            << " vacuous dropped, " << norm.merged_duplicates << " duplicates merged\n";
  std::cout << "dim: " << norm.dim() << "\n";
  auto u = compactness_witness(norm.a);
  std::cout << "compact: " << (u ? "yes" : "no") << "\n";
  if (u)
    std::cout << "compact witness u: " << join(*u) << "\n";
  // with b > 0, c > 0 and A'c > 0 exists exactly when the polytope is bounded
  std::cout << "pointed: " << (u ? "yes" : "no") << "\n";
  if (u)
    std::cout << "interior c: " << join(find_strict_interior(norm.a)) << "\n";
  if (!u) {
    const bool blind = has_blind_direction(norm.a);
    std::cout << "blind direction (x >= 0, x != 0, Ax = 0): " << (blind ? "yes" : "no") << "\n";
    throw Error(blind ? Errc::NotPointed : Errc::NotCompact,
                blind ? "polytope is not pointed (nonzero x >= 0 with Ax = 0)"
                      : "polytope is unbounded (compactness LP infeasible)");
  }
  return 0;
}

int run_volume(const VolumeArgs& args) {
  std::vector<std::string> warnings;
  PolytopeInstance inst =
      read_instance_file(args.file, ParseOptions{args.tolerate_floats}, &warnings);
  for (const auto& w : warnings)
    std::cerr << "warning: " << w << "\n";
  if (args.check_only)
    return check_only(inst);

  NormalizedInstance norm = prepare(inst);
  std::optional<RatVector> c;
  if (!args.abscissae.empty()) {
    c = parse_abscissae(args.abscissae);
    if (c->size() != norm.rows())
      throw Error(Errc::InvalidInput, "--abscissae needs " + std::to_string(norm.rows()) +
                                          " entries (one per kept row)");
  }

  std::optional<DirectRun> direct;
  std::optional<TransformRun> transform;
  if (args.method == "direct" || args.method == "both")
    direct = run_direct(norm, DirectOptions{c});
  if (args.method == "transform" || args.method == "both")
    transform = run_transform(norm, TransformOptions{c, {}});

  if (direct && transform && direct->result != transform->result) {
    std::cerr << "error: methods disagree: direct = " << to_string(direct->result)
              << ", transform = " << to_string(transform->result) << "\n";
    return exit_code(Errc::Internal);
  }
  const Rat volume = direct ? direct->result : transform->result;
  std::cout << to_string(volume) << " (" << to_decimal(volume, args.digits) << ")\n";
  if (direct && transform)
    std::cout << "methods agree: direct == transform\n";

  if (args.stats) {
    if (direct) {
      std::cout << "direct abscissae: " << join(direct->initial_abscissae) << "\n";
      print_levels("direct", direct->levels);
      std::cout << "direct leaves: " << direct->leaves << "\n";
      for (std::size_t i = 0; i < direct->branch_partials.size(); ++i)
        std::cout << "direct branch " << i << ": " << to_string(direct->branch_partials[i])
                  << "\n";
      print_ledger("direct", direct->config);
    }
    if (transform) {
      std::cout << "transform abscissae: " << join(transform->initial_abscissae) << "\n";
      print_levels("transform", transform->levels);
      std::cout << "transform surviving terms: " << transform->surviving_terms << "\n";
      std::cout << "transform C: " << to_string(transform->h_coefficient) << "\n";
      print_ledger("transform", transform->config);
    }
  }

  if (args.verify_mc) {
    McEstimate mc = mc_volume(inst, args.samples, args.seed);
    const double exact = to_double(volume);
    const double z = mc.std_error > 0 ? (mc.estimate - exact) / mc.std_error : 0.0;
    std::cout << "mc: estimate=" << mc.estimate << " stderr=" << mc.std_error << " z=" << z
              << " samples=" << mc.samples << " seed=" << mc.seed << "\n";
  }
  return 0;
}

int run_gen(const std::string& spec) {
  KnownKind kind;
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  int n = 0;
  if (colon != std::string::npos) {
    try {
      n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad dimension in '" + spec + "'");
    }
  }
  if (name == "simplex" && colon != std::string::npos)
    kind = Simplex{n};
  else if (name == "box" && colon != std::string::npos)
    kind = Box{RatVector::Ones(std::max(n, 0))};
  else if (name == "paper-example" && colon == std::string::npos)
    kind = PaperExample{};
  else
    throw Error(Errc::InvalidInput, "unknown generator '" + spec +
                                        "' (simplex:N, box:N or paper-example)");
  std::cout << format_instance(known_instance(kind).instance);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact volume of {x >= 0, Ax <= b} by residue inversion of its Laplace transform"};
  app.require_subcommand(0, 1);
  std::string gen;
  app.add_option("--gen", gen, "Write a generator instance: simplex:N, box:N, paper-example");

  VolumeArgs args;
  auto* volume = app.add_subcommand("volume", "Compute the exact volume of an instance file");
  volume->add_option("file", args.file, "Instance JSON")->required();
  volume->add_option("--method", args.method, "direct, transform or both")
      ->check(CLI::IsMember({"direct", "transform", "both"}));
  volume->add_option("--digits", args.digits, "Decimal digits in the report")
      ->check(CLI::Range(0, 1000));
  volume->add_flag("--check-only", args.check_only, "Only validate the instance");
  volume->add_flag("--verify-mc", args.verify_mc, "Append a Monte Carlo cross-check");
  volume->add_option("--samples", args.samples, "Monte Carlo samples");
  volume->add_option("--seed", args.seed, "Monte Carlo seed");
  volume->add_flag("--stats", args.stats, "Per-level diagnostics");
  volume->add_option("--abscissae", args.abscissae, "Initial c, comma separated rationals");
  volume->add_flag("--tolerate-floats", args.tolerate_floats,
                   "Accept decimal literals, converted exactly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(Errc::InvalidInput);
  }

  try {
    if (!gen.empty())
      return run_gen(gen);
    if (*volume)
      return run_volume(args);
    std::cout << app.help();
    return exit_code(Errc::InvalidInput);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::DegenerateInstance)
      std::cerr << "hint: axis-parallel rows (boxes) and parallel columns of A give repeated "
                   "poles; perturb A into general position, or compare against the known "
                   "volume of a --gen instance\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(Errc::Internal);
  }
}
