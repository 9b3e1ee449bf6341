// Copyright 2026 The SPLIC Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: complete, defend, compare and rank-sweep.
//
// Exit codes: 0 success, 2 invalid input or arguments, 3 non-convergence
// under --strict, 1 anything unexpected.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "splic/baselines.hpp"
#include "splic/config_io.hpp"
#include "splic/error.hpp"
#include "splic/image_io.hpp"
#include "splic/metrics.hpp"
#include "splic/sampling.hpp"
#include "splic/solver.hpp"

namespace fs = std::filesystem;

namespace splic {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotConverged = 3;

// Solver flags shared by every subcommand. Values given on the command line
// override the --config file, which overrides the built-in defaults.
struct SolverFlags {
  std::string config_path;
  std::int64_t rank = 0;
  double lambda = 0, rho = 0, mu = 0, epsilon = 0;
  int maxiter = 0, inner_steps = 0;
  std::uint64_t seed = 0;
  std::string tv_mode;
  bool no_clamp = false;

  CLI::Option* config_opt = nullptr;
  CLI::Option* rank_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* rho_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;
  CLI::Option* maxiter_opt = nullptr;
  CLI::Option* inner_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* tv_opt = nullptr;

  void attach(CLI::App* app, bool with_rank) {
    config_opt = app->add_option("--config", config_path,
                                 "JSON config; flags override its values");
    if (with_rank) {
      rank_opt = app->add_option("--rank", rank,
                                 "target rank r (default round(min(m,n)/4))");
    }
    lambda_opt = app->add_option("--lambda", lambda, "TV weight");
    rho_opt = app->add_option("--rho", rho, "smoothness decay per block");
    mu_opt = app->add_option("--mu", mu, "gradient step size");
    epsilon_opt = app->add_option("--epsilon", epsilon,
                                  "stop when ||dX||_F/(mn) falls to this");
    maxiter_opt = app->add_option("--maxiter", maxiter, "iteration cap");
    inner_opt = app->add_option("--inner-steps", inner_steps,
                                "steps per smoothness level");
    seed_opt = app->add_option("--seed", seed, "mask seed");
    tv_opt = app->add_option("--tv-mode", tv_mode, "exact or paper");
    app->add_flag("--no-clamp", no_clamp,
                  "keep values outside [0, 1] (the writer then rejects them)");
  }

  SplicConfig build() const {
    SplicConfig cfg;
    if (config_opt->count()) {
      std::vector<std::string> warnings;
      cfg = read_config_json(config_path, &warnings);
      for (const std::string& w : warnings) std::cerr << "splic: " << w << '\n';
    }
    if (rank_opt && rank_opt->count()) cfg.r = static_cast<Eigen::Index>(rank);
    if (lambda_opt->count()) cfg.lambda = lambda;
    if (rho_opt->count()) cfg.rho = rho;
    if (mu_opt->count()) cfg.mu = mu;
    if (epsilon_opt->count()) cfg.epsilon = epsilon;
    if (maxiter_opt->count()) cfg.maxiter = maxiter;
    if (inner_opt->count()) cfg.inner_steps = inner_steps;
    if (seed_opt->count()) cfg.seed = seed;
    if (tv_opt->count()) cfg.tv_mode = parse_tv_mode(tv_mode);
    if (no_clamp) cfg.clamp_output = false;
    validate(cfg);
    return cfg;
  }
};

struct NoiseFlags {
  double amplitude = 0.0;
  std::uint64_t seed = 0;
  CLI::Option* amplitude_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* app) {
    amplitude_opt = app->add_option(
        "--add-uniform-noise", amplitude,
        "corrupt the input with uniform noise in [-AMP, AMP] first");
    seed_opt = app->add_option("--noise-seed", seed,
                               "noise seed (default: mask seed + 1)");
  }

  // Channel c draws from noise_seed + c.
  void apply(std::vector<Matrix>* planes, const SplicConfig& cfg) const {
    if (!amplitude_opt->count()) return;
    const std::uint64_t base = seed_opt->count() ? seed : cfg.seed + 1;
    for (std::size_t c = 0; c < planes->size(); ++c) {
      (*planes)[c] = add_uniform_noise((*planes)[c], amplitude, base + c);
    }
  }
};

std::vector<std::string> provenance(const SplicConfig& cfg) {
  return {"splic seed=" + std::to_string(cfg.seed) +
          " cfg-hash=" + config_hash(cfg)};
}

void require_same_geometry(const Image& a, const Image& b,
                           const std::string& what) {
  if (a.channels.size() != b.channels.size() || a.height() != b.height() ||
      a.width() != b.width()) {
    throw ValidationError(what + " does not match the input geometry");
  }
}

std::vector<Matrix> clipped(const std::vector<Matrix>& planes) {
  std::vector<Matrix> out;
  out.reserve(planes.size());
  for (const Matrix& p : planes) out.push_back(p.cwiseMax(0.0).cwiseMin(1.0));
  return out;
}

// ---------------------------------------------------------------------------
// complete / defend

struct CompleteArgs {
  SolverFlags solver;
  NoiseFlags noise;
  std::string input;
  std::string output;
  std::string mask_path;
  std::string trace_path;
  double anchor_fraction = 0.5;
  CLI::Option* mask_opt = nullptr;
  CLI::Option* fraction_opt = nullptr;
  CLI::Option* trace_opt = nullptr;
  bool strict = false;

  // defend only
  bool alternated = false;
  bool batch = false;
  std::string reference_dir;
  std::string summary_path;
  unsigned jobs = 1;
};

void attach_complete(CLI::App* app, CompleteArgs* args) {
  app->add_option("--input", args->input, "input PGM/PPM")->required();
  app->add_option("--output", args->output, "output PGM/PPM")->required();
  args->mask_opt = app->add_option("--mask", args->mask_path,
                                   "anchor mask PGM (maxval = anchor)");
  args->fraction_opt =
      app->add_option("--anchor-fraction", args->anchor_fraction,
                      "fraction of pixels kept as anchors");
  args->mask_opt->excludes(args->fraction_opt);
  args->trace_opt =
      app->add_option("--trace", args->trace_path, "convergence trace CSV");
  app->add_flag("--strict", args->strict,
                "exit 3 if the solver stops at --maxiter");
  args->solver.attach(app, true);
  args->noise.attach(app);
}

struct ImageOutcome {
  std::string name;
  double psnr_input = 0.0;
  double psnr_output = 0.0;
  int iterations = 0;
  bool converged = true;
  bool has_reference = false;
};

ImageOutcome run_one(const CompleteArgs& args, const SplicConfig& base_cfg,
                     const fs::path& input, const fs::path& output,
                     const std::optional<fs::path>& trace,
                     const std::optional<fs::path>& reference) {
  SplicConfig cfg = base_cfg;
  if (args.fraction_opt->count()) cfg.anchor_fraction = args.anchor_fraction;
  validate(cfg);

  const Image image = read_image(input);
  std::vector<Matrix> planes = image.channels;
  args.noise.apply(&planes, cfg);

  BinaryMask mask = args.mask_opt->count()
                        ? read_mask(args.mask_path)
                        : generate_mask(image.height(), image.width(),
                                        cfg.anchor_fraction, cfg.seed);
  if (mask.rows() != image.height() || mask.cols() != image.width()) {
    throw ValidationError("mask is " + std::to_string(mask.rows()) + "x" +
                          std::to_string(mask.cols()) + ", image is " +
                          std::to_string(image.height()) + "x" +
                          std::to_string(image.width()));
  }

  const std::vector<CompletionResult> results =
      args.alternated ? splic_alternated_channels(planes, mask, cfg)
                      : splic_complete_channels(planes, mask, cfg);

  ImageOutcome outcome;
  outcome.name = input.filename().string();
  std::vector<Matrix> completed;
  ConvergenceTrace all_traces;
  for (const CompletionResult& r : results) {
    completed.push_back(r.completed);
    outcome.iterations += r.iterations;
    outcome.converged = outcome.converged && r.converged;
    all_traces.insert(all_traces.end(), r.trace.begin(), r.trace.end());
  }

  const std::string bytes =
      encode_image(completed, image.format, image.maxval, provenance(cfg));
  write_file_atomic(output, bytes);
  if (trace) write_trace_csv(all_traces, *trace);

  if (reference) {
    const Image ref = read_image(*reference);
    require_same_geometry(image, ref, "reference " + reference->string());
    outcome.has_reference = true;
    outcome.psnr_input = psnr(planes, ref.channels);
    outcome.psnr_output = psnr(parse_image(bytes).channels, ref.channels);
  }
  return outcome;
}

bool is_image_file(const fs::path& p) {
  const std::string ext = p.extension().string();
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

int run_complete(const CompleteArgs& args) {
  const SplicConfig cfg = args.solver.build();
  if (!args.batch) {
    std::optional<fs::path> trace;
    if (args.trace_opt->count()) trace = args.trace_path;
    const ImageOutcome out =
        run_one(args, cfg, args.input, args.output, trace, std::nullopt);
    if (!out.converged) {
      std::cerr << "splic: stopped at maxiter without reaching epsilon\n";
      if (args.strict) return kExitNotConverged;
    }
    return kExitOk;
  }

  // Batch: --input and --output are directories; --trace, if given, names a
  // directory that receives one CSV per image.
  if (!fs::is_directory(args.input)) {
    throw ValidationError("--batch needs an input directory: " + args.input);
  }
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(args.input)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());
  fs::create_directories(args.output);
  if (args.trace_opt->count()) fs::create_directories(args.trace_path);

  std::vector<std::optional<ImageOutcome>> outcomes(inputs.size());
  std::vector<std::string> errors(inputs.size());
  std::vector<int> codes(inputs.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < inputs.size(); k = next++) {
      const fs::path& in = inputs[k];
      try {
        std::optional<fs::path> trace;
        if (args.trace_opt->count()) {
          trace = fs::path(args.trace_path) / (in.stem().string() + ".csv");
        }
        std::optional<fs::path> reference;
        if (!args.reference_dir.empty()) {
          reference = fs::path(args.reference_dir) / in.filename();
        }
        outcomes[k] = run_one(args, cfg, in, fs::path(args.output) / in.filename(),
                              trace, reference);
      } catch (const std::exception& e) {
        errors[k] = e.what();
        codes[k] = kExitInvalid;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         args.jobs, static_cast<unsigned>(
                                                        inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int code = kExitOk;
  std::string summary = "image,psnr_input,psnr_output,iterations,converged\n";
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (!outcomes[k]) {
      std::cerr << "splic: " << inputs[k].string() << ": " << errors[k] << '\n';
      code = std::max(code, codes[k]);
      continue;
    }
    const ImageOutcome& o = *outcomes[k];
    if (!o.converged) {
      std::cerr << "splic: " << o.name << ": stopped at maxiter\n";
      if (args.strict) code = std::max(code, kExitNotConverged);
    }
    if (o.has_reference) {
      summary += o.name + ',' + format_number(o.psnr_input) + ',' +
                 format_number(o.psnr_output) + ',' +
                 std::to_string(o.iterations) + ',' +
                 (o.converged ? "true" : "false") + '\n';
    }
  }
  if (!args.reference_dir.empty()) {
    const fs::path path = args.summary_path.empty()
                              ? fs::path(args.output) / "summary.csv"
                              : fs::path(args.summary_path);
    write_file_atomic(path, summary);
  }
  return code;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  SolverFlags solver;
  NoiseFlags noise;
  std::string input;
  std::string reference;
  std::string output;
  std::vector<double> fractions = {0.3, 0.5, 0.7};
  BaselineOptions baselines;
};

int run_compare(const CompareArgs& args) {
  const SplicConfig cfg = args.solver.build();
  const Image image = read_image(args.input);
  std::vector<Matrix> corrupt = image.channels;
  args.noise.apply(&corrupt, cfg);
  std::vector<Matrix> clean = image.channels;
  if (!args.reference.empty()) {
    const Image ref = read_image(args.reference);
    require_same_geometry(image, ref, "--reference");
    clean = ref.channels;
  }
  for (double f : args.fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ValidationError("anchor fraction must lie in (0, 1], got " +
                            format_number(f));
    }
  }
  if (args.baselines.soft_iters < 1 || !(args.baselines.soft_tau_fraction >= 0) ||
      !(args.baselines.usvt_eta >= 0)) {
    throw ValidationError("baseline options out of range");
  }

  std::string csv = "fraction,method,psnr_db,rank,iters,seconds\n";
  for (double f : args.fractions) {
    const BinaryMask mask =
        generate_mask(image.height(), image.width(), f, cfg.seed);
    const ComparisonRecord rec =
        compare_methods(clean, corrupt, mask, cfg, args.baselines);
    // Reuse the plain record layout, prefixed with the fraction.
    const std::string body = format_comparison_csv(rec);
    std::size_t start = body.find('\n') + 1;
    while (start < body.size()) {
      const std::size_t end = body.find('\n', start);
      csv += format_number(f) + ',' + body.substr(start, end - start + 1);
      start = end + 1;
    }
  }
  if (args.output.empty()) {
    std::cout << csv;
  } else {
    write_file_atomic(args.output, csv);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rank-sweep

struct RankSweepArgs {
  SolverFlags solver;
  NoiseFlags noise;
  std::string input;
  std::string reference;
  std::string output_dir;
  std::string csv_path;
  std::vector<std::int64_t> ranks;
  double anchor_fraction = 0.5;
  CLI::Option* fraction_opt = nullptr;
  bool strict = false;
};

// Each rank writes <stem>_r<rank>.<ext>: the rank-r estimate, clipped to
// [0, 1]. The CSV reports PSNR of that image and the numerical rank of the
// estimate before clipping.
int run_rank_sweep(const RankSweepArgs& args) {
  SplicConfig cfg = args.solver.build();
  if (args.fraction_opt->count()) cfg.anchor_fraction = args.anchor_fraction;
  const Image image = read_image(args.input);
  for (std::int64_t r : args.ranks) {
    SplicConfig probe = cfg;
    probe.r = static_cast<Eigen::Index>(r);
    validate(probe);
    resolve_rank(probe, image.height(), image.width());
  }
  std::vector<Matrix> planes = image.channels;
  args.noise.apply(&planes, cfg);
  std::vector<Matrix> clean = image.channels;
  if (!args.reference.empty()) {
    const Image ref = read_image(args.reference);
    require_same_geometry(image, ref, "--reference");
    clean = ref.channels;
  }
  const BinaryMask mask = generate_mask(image.height(), image.width(),
                                        cfg.anchor_fraction, cfg.seed);
  fs::create_directories(args.output_dir);
  const fs::path in(args.input);

  int code = kExitOk;
  std::string csv = "rank,psnr,numerical_rank,converged\n";
  for (std::int64_t r : args.ranks) {
    SplicConfig run_cfg = cfg;
    run_cfg.r = static_cast<Eigen::Index>(r);
    const std::vector<CompletionResult> results =
        splic_complete_channels(planes, mask, run_cfg);
    std::vector<Matrix> estimate;
    Eigen::Index rank = 0;
    bool converged = true;
    for (const CompletionResult& res : results) {
      estimate.push_back(res.low_rank);
      rank = std::max(rank, numerical_rank(res.low_rank, kComparisonRankTol));
      converged = converged && res.converged;
    }
    const std::vector<Matrix> shown = clipped(estimate);
    write_image(shown,
                fs::path(args.output_dir) /
                    (in.stem().string() + "_r" + std::to_string(r) +
                     in.extension().string()),
                image.format, image.maxval, provenance(run_cfg));
    csv += std::to_string(r) + ',' + format_number(psnr(shown, clean)) + ',' +
           std::to_string(rank) + ',' + (converged ? "true" : "false") + '\n';
    if (!converged) {
      std::cerr << "splic: rank " << r << " stopped at maxiter\n";
      if (args.strict) code = kExitNotConverged;
    }
  }
  write_file_atomic(args.csv_path.empty()
                        ? fs::path(args.output_dir) / "rank_sweep.csv"
                        : fs::path(args.csv_path),
                    csv);
  return code;
}

int report(const std::exception& e, int code) {
  std::cerr << "splic: " << e.what() << '\n';
  return code;
}

}  // namespace
}  // namespace splic

int main(int argc, char** argv) {
  using namespace splic;
  CLI::App app{"Structure-preserving low-rank image completion"};
  app.require_subcommand(1);

  CompleteArgs complete;
  CLI::App* complete_cmd =
      app.add_subcommand("complete", "complete the target pixels of an image");
  attach_complete(complete_cmd, &complete);

  CompleteArgs defend;
  defend.alternated = true;
  CLI::App* defend_cmd = app.add_subcommand(
      "defend", "two alternating passes so every pixel is re-estimated");
  attach_complete(defend_cmd, &defend);
  defend_cmd->add_flag("--batch", defend.batch,
                       "treat --input and --output as directories");
  defend_cmd->add_option("--reference-dir", defend.reference_dir,
                         "clean images with matching names (batch)");
  defend_cmd->add_option("--summary", defend.summary_path,
                         "PSNR summary CSV (default <output>/summary.csv)");
  defend_cmd->add_option("--jobs", defend.jobs, "images processed at once")
      ->check(CLI::PositiveNumber);

  CompareArgs compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "SPLIC against SRF-only, Soft-Impute and USVT");
  compare_cmd->add_option("--input", compare.input, "corrupted image")
      ->required();
  compare_cmd->add_option("--reference", compare.reference,
                          "clean image (default: the input)");
  compare_cmd->add_option("--anchor-fraction", compare.fractions,
                          "fractions to sweep")
      ->delimiter(',');
  compare_cmd->add_option("--output", compare.output, "CSV (default stdout)");
  compare_cmd->add_option("--soft-tau-fraction",
                          compare.baselines.soft_tau_fraction,
                          "Soft-Impute tau as a fraction of sigma_1");
  compare_cmd->add_option("--soft-iters", compare.baselines.soft_iters,
                          "Soft-Impute iteration cap");
  compare_cmd->add_option("--soft-tol", compare.baselines.soft_tol,
                          "Soft-Impute stopping tolerance");
  compare_cmd->add_option("--usvt-eta", compare.baselines.usvt_eta,
                          "USVT threshold slack");
  compare.solver.attach(compare_cmd, true);
  compare.noise.attach(compare_cmd);

  RankSweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "rank-sweep", "complete at several target ranks");
  sweep_cmd->add_option("--input", sweep.input, "input image")->required();
  sweep_cmd->add_option("--reference", sweep.reference,
                        "clean image (default: the input)");
  sweep_cmd->add_option("--ranks", sweep.ranks, "e.g. 56,28,14,7")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--output-dir", sweep.output_dir,
                        "directory for images and rank_sweep.csv")
      ->required();
  sweep_cmd->add_option("--csv", sweep.csv_path, "CSV path override");
  sweep.fraction_opt = sweep_cmd->add_option(
      "--anchor-fraction", sweep.anchor_fraction, "anchor fraction");
  sweep_cmd->add_flag("--strict", sweep.strict,
                      "exit 3 if any rank stops at --maxiter");
  sweep.solver.attach(sweep_cmd, false);
  sweep.noise.attach(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (complete_cmd->parsed()) return run_complete(complete);
    if (defend_cmd->parsed()) return run_complete(defend);
    if (compare_cmd->parsed()) return run_compare(compare);
    if (sweep_cmd->parsed()) return run_rank_sweep(sweep);
  } catch (const ValidationError& e) {
    return report(e, kExitInvalid);
  } catch (const ConfigError& e) {
    return report(e, kExitInvalid);
  } catch (const ParseError& e) {
    return report(e, kExitInvalid);
  } catch (const TruncatedPayloadError& e) {
    return report(e, kExitInvalid);
  } catch (const IoError& e) {
    return report(e, kExitInvalid);
  } catch (const fs::filesystem_error& e) {
    return report(e, kExitInvalid);
  } catch (const std::exception& e) {
    return report(e, kExitInternal);
  }
  return kExitInternal;
}
