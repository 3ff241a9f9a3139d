#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvslice/io.hpp"
#include "mvslice/verify.hpp"

using namespace mvslice;
using io::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string shape, weight, tableau, in, out;
  std::uint64_t seed = 0;
  int bound = 10;
  int retries = 1000;
  int samples = 0;
  int max_n = 5;
  int max_resamples = 20;
  bool corrupt_sampler = false;
};

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw ParseError("cannot write " + opt.out);
  f << text;
}

// A g-file is either a bare matrix or {"mu": [...], "g": matrix}.
PolyMatrix g_from(const Json& j) { return io::poly_matrix_from_json(j.is_object() ? j.at("g") : j); }

RunConfig config_for(const std::string& command, const Options& opt, int default_samples) {
  RunConfig c;
  c.command = command;
  c.seed = opt.seed;
  c.bound = opt.bound;
  c.retries = opt.retries;
  c.samples = opt.samples > 0 ? opt.samples : default_samples;
  c.max_n = opt.max_n;
  c.max_resamples = opt.max_resamples;
  c.violate_exclusion = opt.corrupt_sampler;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

const auto start_time = std::chrono::steady_clock::now();

// Timing goes to stderr so that reports stay byte-identical across runs.
int finish(const Options& opt, const Report& report) {
  emit(opt, report.to_jsonl());
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_time;
  std::cerr << (report.passed ? "PASS" : "FAIL") << " in " << elapsed.count() << " s\n";
  return report.passed ? 0 : kExitFailure;
}

int run_tableaux(const Options& opt) {
  RunConfig c = config_for("tableaux", opt, 1);
  c.shape = parse_partition(opt.shape);
  c.weight = parse_int_list(opt.weight);
  return finish(opt, cmd_tableaux(c));
}

int run_sample(const Options& opt) {
  const Tableau t = parse_tableau(opt.tableau);
  const auto s = sample_point(t, {opt.seed, opt.bound, opt.retries, opt.corrupt_sampler});
  Json j = io::to_json(s.point, s.seed);
  j["tableau"] = to_string(t);
  Json stages = Json::array();
  for (const auto& st : s.stages) {
    Json r;
    r["stage"] = Json::array({st.step.letter, st.step.occurrence});
    r["row"] = st.step.row;
    r["col"] = st.step.col;
    r["preimage_dim"] = st.preimage_dim;
    r["solution_dim"] = st.solution_dim;
    r["draws"] = st.draws;
    stages.push_back(std::move(r));
  }
  j["stages"] = std::move(stages);
  emit(opt, j.dump() + "\n");
  return 0;
}

int run_phi(const Options& opt) {
  const auto file = io::slice_point_from_json(read_json(opt.in));
  Json j;
  j["mu"] = file.point.shape().mu().parts();
  j["g"] = io::to_json(mv_phi(file.point));
  emit(opt, j.dump() + "\n");
  return 0;
}

int run_phi_inverse(const Options& opt) {
  const Json in = read_json(opt.in);
  Partition mu;
  if (!opt.weight.empty()) {
    mu = parse_partition(opt.weight);
  } else if (in.is_object() && in.contains("mu")) {
    mu = Partition(io::detail::ints_from(in.at("mu"), "mu"));
  } else {
    throw ParseError("phi-inverse needs --weight or a \"mu\" field");
  }
  const auto g = g_from(in);
  emit(opt, io::to_json(mv_phi_inverse_point(g, mu), std::nullopt).dump() + "\n");
  return 0;
}

// Accepts a slice point (mapped through phi first) or a g-file.
int run_lusztig_geo(const Options& opt) {
  const Json in = read_json(opt.in);
  const PolyMatrix g = in.is_object() && in.contains("free") ? mv_phi(io::slice_point_from_json(in).point) : g_from(in);
  Json j = io::to_json(geometric_lusztig(g));
  const auto defect = genericity_defect(g);
  j["generic"] = !defect.has_value();
  emit(opt, j.dump() + "\n");
  return defect ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirković–Vybornov slices, tableaux and MV cycles"};
  app.require_subcommand(1);
  Options opt;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write the report here instead of stdout"); };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Base seed")->envname("MVSLICE_SEED");
  };
  auto add_sampler = [&](CLI::App* sub) {
    add_seed(sub);
    sub->add_option("--bound", opt.bound, "Draw free coordinates from [-bound, bound]")->check(CLI::PositiveNumber);
    sub->add_option("--retries", opt.retries, "Draws per stage before giving up")->check(CLI::PositiveNumber);
    sub->add_flag("--corrupt-sampler", opt.corrupt_sampler)->group("");
  };

  auto* tableaux = app.add_subcommand("tableaux", "List the semistandard tableaux of a shape and weight");
  tableaux->add_option("--shape", opt.shape, "Partition, e.g. 3,2")->required();
  tableaux->add_option("--weight", opt.weight, "Weight, e.g. 2,2,1")->required();
  add_out(tableaux);

  auto* sample = app.add_subcommand("sample", "Sample a point of the slice component of a tableau");
  sample->add_option("--tableau", opt.tableau, "Rows separated by '/', e.g. 112/23")->required();
  add_sampler(sample);
  add_out(sample);

  auto* phi = app.add_subcommand("phi", "Map a slice point to its lattice matrix g");
  phi->add_option("--in", opt.in, "Slice point JSON")->required()->check(CLI::ExistingFile);
  add_out(phi);

  auto* phi_inv = app.add_subcommand("phi-inverse", "Recover the slice point of a lattice matrix g");
  phi_inv->add_option("--in", opt.in, "Matrix JSON")->required()->check(CLI::ExistingFile);
  phi_inv->add_option("--weight", opt.weight, "Weight mu (defaults to the file's \"mu\")");
  add_out(phi_inv);

  auto* geo = app.add_subcommand("lusztig-geo", "D-table and Lusztig datum of a lattice matrix or slice point");
  geo->add_option("--in", opt.in, "Matrix or slice point JSON")->required()->check(CLI::ExistingFile);
  add_out(geo);

  auto add_sweep = [&](CLI::App* sub, int default_samples) {
    sub->add_option("--max-n", opt.max_n, "Largest N swept")->check(CLI::Range(1, 10));
    sub->add_option("--samples", opt.samples, "Samples per tableau")
        ->default_str(std::to_string(default_samples))
        ->check(CLI::PositiveNumber);
    add_sampler(sub);
    add_out(sub);
  };
  auto* verify_a = app.add_subcommand("verify-a", "Sweep membership and dimension checks");
  add_sweep(verify_a, 20);
  auto* verify_b = app.add_subcommand("verify-b", "Sweep geometric against combinatorial Lusztig data");
  add_sweep(verify_b, 5);
  verify_b->add_option("--max-resamples", opt.max_resamples, "Fresh draws allowed per non-generic sample")
      ->check(CLI::PositiveNumber);
  auto* roundtrip = app.add_subcommand("roundtrip", "Check phi and its inverse on sampled points");
  add_sweep(roundtrip, 5);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tableaux) return run_tableaux(opt);
    if (*sample) return run_sample(opt);
    if (*phi) return run_phi(opt);
    if (*phi_inv) return run_phi_inverse(opt);
    if (*geo) return run_lusztig_geo(opt);
    if (*verify_a) return finish(opt, cmd_verify_theorem_a(config_for("verify-a", opt, 20)));
    if (*verify_b) return finish(opt, cmd_verify_theorem_b(config_for("verify-b", opt, 5)));
    if (*roundtrip) return finish(opt, cmd_roundtrip(config_for("roundtrip", opt, 5)));
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInSlice& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EmptyPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
