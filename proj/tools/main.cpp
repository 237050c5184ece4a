// sda: exclusion computations for automorphisms of extremal self-dual codes.
//
// Exit codes: 0 = completed with the expected outcome, 2 = completed with
// unresolved tasks, 64 = usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "sda/casesearch.hpp"
#include "sda/code.hpp"
#include "sda/decomp.hpp"
#include "sda/exclusion.hpp"
#include "sda/lowweight.hpp"
#include "sda/modfield.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sda;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 64;

BinaryCode resolve_code(const std::string& spec) {
  for (const auto& name : registry_names())
    if (name == spec) return registry(name);
  return load_code_file(spec);
}

unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

/// Output directory resolution: flag, else $SDA_OUT_DIR, else none.
std::optional<fs::path> resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("SDA_OUT_DIR")) return fs::path(env);
  return std::nullopt;
}

void write_config(const fs::path& dir, const json& config) {
  fs::create_directories(dir);
  std::ofstream out(dir / "config.json");
  out << config.dump(2) << "\n";
}

json record_to_json(const TaskRecord& r) {
  return json{{"id", r.id},
              {"refuted", r.refuted},
              {"route", r.route},
              {"witness_weight", r.witness_weight},
              {"heavy_mod4_weight", r.heavy_mod4_weight},
              {"iterations", r.iterations}};
}

TaskRecord record_from_json(const json& j) {
  TaskRecord r;
  r.id = j.at("id").get<std::uint64_t>();
  r.refuted = j.at("refuted").get<bool>();
  r.route = j.at("route").get<std::string>();
  r.witness_weight = j.at("witness_weight").get<std::size_t>();
  r.heavy_mod4_weight = j.value("heavy_mod4_weight", std::size_t{0});
  r.iterations = j.at("iterations").get<std::uint64_t>();
  return r;
}

/// Load prior records from an existing results.jsonl for --resume.
std::vector<TaskRecord> load_prior(const fs::path& file) {
  std::vector<TaskRecord> prior;
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    prior.push_back(record_from_json(json::parse(line)));
  }
  return prior;
}

/// Wire an output directory into sweep options: serialized config, JSONL
/// record sink, and the resume cursor.
struct RunLog {
  std::optional<fs::path> dir;
  std::ofstream results;

  void open(const std::optional<fs::path>& d, const json& config, bool resume,
            SweepOptions& opt) {
    dir = d;
    if (!dir) return;
    write_config(*dir, config);
    auto file = *dir / "results.jsonl";
    if (resume && fs::exists(file)) {
      opt.prior_records = load_prior(file);
      opt.start_index = opt.prior_records.size();
      results.open(file, std::ios::app);
    } else {
      results.open(file, std::ios::trunc);
    }
    opt.sink = [this](const TaskRecord& r) {
      results << record_to_json(r).dump() << "\n";
      results.flush();
    };
  }
};

void print_sweep_summary(const SweepReport& rep) {
  std::cout << rep.label << ": " << rep.completed() << "/" << rep.total_tasks
            << " tasks, " << rep.refuted() << " refuted, " << rep.unresolved()
            << " unresolved (seed " << rep.master_seed << ")\n";
}

int finish_sweep(const SweepReport& rep, const std::optional<fs::path>& dir) {
  print_sweep_summary(rep);
  if (dir) {
    json summary{{"label", rep.label},
                 {"master_seed", rep.master_seed},
                 {"total_tasks", rep.total_tasks},
                 {"completed", rep.completed()},
                 {"refuted", rep.refuted()},
                 {"unresolved", rep.unresolved()}};
    std::ofstream(*dir / "summary.json") << summary.dump(2) << "\n";
  }
  return rep.unresolved() == 0 && rep.completed() == rep.total_tasks
             ? kExitOk
             : kExitUnresolved;
}

// ---------------------------------------------------------------------------

int cmd_types(std::size_t n, std::size_t d, std::uint32_t p,
              const std::string& preset, bool final_table) {
  if (final_table) {
    std::cout << "final type table at (120, 24):\n  p | c | f\n";
    for (const auto& [prime, types] : final_type_table_120())
      for (const auto& t : types)
        std::cout << "  " << prime << " | " << t.c << " | " << t.f << "\n";
    return kExitOk;
  }
  auto lemmas = lemma_preset(preset);
  std::vector<std::uint32_t> primes;
  if (p) {
    primes.push_back(p);
  } else {
    for (std::uint32_t q = 3; q <= n; ++q) {
      bool prime = q > 1;
      for (std::uint32_t i = 2; i * i <= q; ++i) prime &= q % i != 0;
      if (prime) primes.push_back(q);
    }
  }
  std::cout << "surviving types at (" << n << ", " << d << "), preset "
            << preset << ":\n";
  for (auto prime : primes) {
    auto verdicts = feasible_types(n, d, prime, lemmas);
    std::ostringstream cs, fsx;
    bool any = false;
    for (const auto& v : verdicts) {
      if (!v.survives) continue;
      if (any) {
        cs << ", ";
        fsx << ", ";
      }
      cs << v.candidate.c;
      fsx << v.candidate.f;
      any = true;
    }
    if (any)
      std::cout << "  " << prime << " | " << cs.str() << " | " << fsx.str()
                << "\n";
    if (p) {  // single-prime mode: also show every exclusion reason
      for (const auto& v : verdicts)
        for (const auto& r : v.reasons)
          std::cout << "    " << prime << "-(" << v.candidate.c << ";"
                    << v.candidate.f << ") excluded by " << lemma_name(r.lemma)
                    << ": " << r.detail << "\n";
    }
  }
  return kExitOk;
}

int cmd_enumerator(std::size_t n) {
  auto w = extremal_type2_enumerator(n);
  std::cout << "extremal Type II weight enumerator, n = " << n << ":\n";
  for (std::size_t i = 0; i <= n; ++i)
    if (w.counts[i] != 0)
      std::cout << "  A_" << i << " = " << w.counts[i] << "\n";
  return kExitOk;
}

int cmd_p59_orbits(const std::string& out_flag) {
  auto t0 = std::chrono::steady_clock::now();
  auto summary = p59_orbit_representatives();
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  std::cout << "doubling orbits of Z_" << kP59Modulus << ":\n"
            << "  with the zero class:    " << summary.count_with_zero << "\n"
            << "  without the zero class: " << summary.count_without_zero
            << "\n"
            << "  count 156889 matches the " << summary.matching_convention
            << " convention\n"
            << "  (" << secs << " s)\n";
  if (auto dir = resolve_out_dir(out_flag)) {
    fs::create_directories(*dir);
    std::ofstream out(*dir / "orbit_representatives.txt");
    for (auto r : summary.representatives) out << r << "\n";
    std::cout << "  representatives written to "
              << (*dir / "orbit_representatives.txt") << "\n";
  }
  return kExitOk;
}

int cmd_p59_sweep(std::size_t sample, bool run_all, std::uint64_t seed,
                  unsigned jobs, std::uint64_t iters, const std::string& out_flag,
                  bool resume) {
  auto summary = p59_orbit_representatives();
  std::vector<std::uint32_t> reps;
  if (run_all) {
    reps = summary.representatives;
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> pool = summary.representatives;
    std::shuffle(pool.begin(), pool.end(), rng);
    reps.assign(pool.begin(), pool.begin() + std::min(sample, pool.size()));
    std::sort(reps.begin(), reps.end());
  }

  auto field = PField::make(59);
  auto alpha = find_primitive(field, seed);
  SearchBudget budget{.max_iterations = iters, .seed = 0};
  SweepOptions opt;
  opt.jobs = jobs;
  opt.master_seed = seed;
  json config{{"command", "p59 sweep"}, {"sample", sample},
              {"all", run_all},         {"seed", seed},
              {"jobs", jobs},           {"iterations", iters},
              {"alpha_bits", alpha.bits()}};
  RunLog log;
  log.open(resolve_out_dir(out_flag), config, resume, opt);

  auto t0 = std::chrono::steady_clock::now();
  auto rep = p59_sweep(reps, alpha, budget, opt);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  if (!run_all && rep.completed() > opt.start_index) {
    double per_task = secs / double(rep.completed() - opt.start_index);
    std::cout << "sampled " << rep.completed() << " of "
              << summary.representatives.size() << " orbit tasks; full sweep ≈ "
              << per_task * double(summary.representatives.size()) / 3600.0
              << " h at this rate (use --all to run it)\n";
  }
  return finish_sweep(rep, log.dir);
}

int cmd_sweep(const std::string& case_name, const std::string& code_spec,
              std::uint32_t p, std::size_t f, std::size_t d, bool mod4,
              bool mod7, std::size_t sample, std::uint64_t seed, unsigned jobs,
              const std::string& out_flag, bool resume) {
  if (!case_name.empty()) {
    // A case tag p-c-f sets the sweep parameters; --code picks the projected
    // code the sweep runs on.
    std::uint32_t cp;
    std::size_t cc, cf;
    char d1, d2;
    std::istringstream is(case_name);
    if (!(is >> cp >> d1 >> cc >> d2 >> cf) || d1 != '-' || d2 != '-')
      throw CLI::ValidationError("--case", "expected a tag like 5-22-10");
    p = cp;
    f = cf;
    if (p == 7) mod4 = true;
  }
  if (mod7) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = golay_mod7_test(sample, seed, jobs);
    auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << "golay mod-7 congruence test: " << rep.records.size()
              << " subsets, "
              << (rep.all_inconsistent ? "all inconsistent"
                                       : "CONSISTENT SUBSET FOUND")
              << " (" << secs << " s)\n";
    if (auto dir = resolve_out_dir(out_flag)) {
      write_config(*dir, json{{"command", "sweep"},
                              {"mod7", true},
                              {"sample", sample},
                              {"seed", seed}});
      std::ofstream out(*dir / "results.jsonl");
      for (const auto& r : rep.records)
        out << json{{"subset", r.subset_mask},
                    {"a28_prime", r.a28_prime.str()},
                    {"congruent", r.congruent}}
                   .dump()
            << "\n";
    }
    return rep.all_inconsistent ? kExitOk : kExitUnresolved;
  }
  if (p == 0 || code_spec.empty())
    throw CLI::ValidationError("sweep", "need --case or --code with --p/--f");
  auto code = resolve_code(code_spec);

  FixedPointSweepOptions opt;
  opt.sample = sample;
  opt.mod4_obstruction = mod4;
  opt.sweep.jobs = jobs;
  opt.sweep.master_seed = seed;
  json config{{"command", "sweep"}, {"case", case_name}, {"code", code_spec},
              {"p", p},             {"f", f},            {"d", d},
              {"mod4", mod4},       {"sample", sample},  {"seed", seed},
              {"jobs", jobs}};
  RunLog log;
  log.open(resolve_out_dir(out_flag), config, resume, opt.sweep);
  auto rep = fixed_point_sweep(code, p, f, d, opt);
  return finish_sweep(rep, log.dir);
}

int cmd_decompose(const std::string& code_spec, const std::string& sigma_text) {
  auto code = resolve_code(code_spec);
  auto sigma = Permutation::parse(sigma_text, code.length());
  auto dec = decompose(code, sigma);
  const auto& s = dec.structure;
  std::cout << "sigma = " << sigma.to_cycle_string() << "\n"
            << "type " << s.p << "-(" << s.c << ";" << s.f << ") on ["
            << code.length() << "," << code.dimension() << "]\n"
            << "dim F = " << dec.F.dimension()
            << ", dim E = " << dec.E.dimension() << "\n";
  auto report = check_selfdual_conditions(code, sigma);
  std::cout << "pi(F) self-dual: " << (report.pi_self_dual ? "yes" : "no")
            << " (length " << report.pi_length << ")\n"
            << "phi(E) hermitian self-dual: "
            << (report.phi_hermitian_self_dual ? "yes" : "no")
            << " (GF(2) dimension " << report.phi_gf2_dimension << ")\n"
            << "field mode (s(p) = p-1): "
            << (report.field_mode ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_lowweight(const std::string& code_spec, std::size_t target,
                  std::uint64_t iters, std::size_t window, std::uint64_t seed) {
  auto code = resolve_code(code_spec);
  SearchBudget budget{.max_iterations = iters, .window_size = window,
                      .seed = seed};
  std::cout << "searching [" << code.length() << "," << code.dimension()
            << "] for weight < " << target << " (seed " << seed << ")\n";
  auto w = find_below(code, target, budget);
  if (!w) {
    std::cout << "no witness within " << iters
              << " iterations (not a distance proof)\n";
    return kExitUnresolved;
  }
  std::cout << "witness of weight " << w->weight << " after "
            << w->iterations_used << " iterations:\n  "
            << w->codeword.to_string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exclusion computations for automorphisms of extremal "
               "self-dual binary codes"};
  app.require_subcommand(1);

  std::size_t n = 120, d = 24, f = 0, target = 24, sample = 0, window = 2;
  std::uint32_t p = 0;
  std::uint64_t seed = 0, iters = 2000;
  unsigned jobs = default_jobs();
  std::string preset = "paper-table", code_spec, sigma_text, out_dir, case_name;
  bool final_table = false, run_all = false, resume = false, mod4 = false,
       mod7 = false;

  auto* types = app.add_subcommand("types", "lemma-filtered cycle type table");
  types->add_option("--n", n);
  types->add_option("--d", d);
  types->add_option("--p", p, "restrict to one prime and show reasons");
  types->add_option("--preset", preset, "paper-table | full | none");
  types->add_flag("--final", final_table,
                  "the final (120, 24) table after the case refutations");

  auto* enumerator =
      app.add_subcommand("enumerator", "extremal Type II weight enumerator");
  enumerator->add_option("--n", n)->required();

  auto* p59 = app.add_subcommand("p59", "the order-59 candidate family");
  p59->require_subcommand(1);
  auto* orbits = p59->add_subcommand("orbits", "doubling-orbit representatives");
  orbits->add_option("--out", out_dir);
  auto* psweep = p59->add_subcommand("sweep", "refute candidates by ISD");
  psweep->add_option("--sample", sample, "orbit representatives to sample")
      ->default_val(20);
  psweep->add_flag("--all", run_all, "run every orbit representative");
  psweep->add_option("--seed", seed);
  psweep->add_option("--jobs", jobs);
  psweep->add_option("--iters", iters, "ISD iterations per task");
  psweep->add_option("--out", out_dir);
  psweep->add_flag("--resume", resume, "continue from --out's results.jsonl");

  auto* sweep = app.add_subcommand("sweep", "fixed-point subset sweeps");
  sweep->add_option("--case", case_name, "tag like 5-22-10 or 7-16-8");
  sweep->add_option("--code", code_spec, "registry name or code file");
  sweep->add_option("--p", p);
  sweep->add_option("--f", f);
  sweep->add_option("--d", d);
  sweep->add_flag("--mod4", mod4, "also refute on expanded weight != 0 mod 4");
  sweep->add_flag("--mod7", mod7, "golay A_28 congruence test (7-(16;8))");
  sweep->add_option("--sample", sample, "subsets to sample; 0 = all");
  sweep->add_option("--seed", seed);
  sweep->add_option("--jobs", jobs);
  sweep->add_option("--out", out_dir);
  sweep->add_flag("--resume", resume);

  auto* dec = app.add_subcommand("decompose", "C = F ⊕ E under sigma");
  dec->add_option("--code", code_spec)->required();
  dec->add_option("--sigma", sigma_text, "cycle notation or 1-based images")
      ->required();

  auto* low = app.add_subcommand("lowweight", "Lee–Brickell low-weight search");
  low->add_option("--code", code_spec)->required();
  low->add_option("--target", target)->required();
  low->add_option("--iters", iters);
  low->add_option("--window", window);
  low->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*types) return cmd_types(n, d, p, preset, final_table);
    if (*enumerator) return cmd_enumerator(n);
    if (*orbits) return cmd_p59_orbits(out_dir);
    if (*psweep)
      return cmd_p59_sweep(sample, run_all, seed, jobs, iters, out_dir, resume);
    if (*sweep)
      return cmd_sweep(case_name, code_spec, p, f, d, mod4, mod7, sample, seed,
                       jobs, out_dir, resume);
    if (*dec) return cmd_decompose(code_spec, sigma_text);
    if (*low) return cmd_lowweight(code_spec, target, iters, window, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
