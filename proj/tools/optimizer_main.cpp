// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsp/generators.hpp"
#include "optimizer/bench.hpp"
#include "optimizer/block_registry.hpp"
#include "optimizer/run_optimize.hpp"

namespace fs = std::filesystem;

namespace {

fs::path self_executable(const char* argv0) {
  std::error_code ec;
  const fs::path p = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::absolute(argv0) : p;
}

std::vector<fs::path> profile_dirs(const fs::path& exe) {
  const fs::path dir = exe.parent_path();
  return {dir / "profiles", dir.parent_path() / "share" / "optimizer" / "profiles", fs::path(OPTIMIZER_PROFILE_DIR)};
}

}  // namespace

int main(int argc, char** argv) {
  // Installed copies named after a generator behave as that generator.
  const std::string invoked_as = fs::path(argv[0]).filename().string();
  for (const auto name : dsp::kShippedGenerators) {
    if (invoked_as == name) return dsp::run_generator(name, {argv + 1, argv + argc}, std::cout, std::cerr);
  }

  const fs::path exe = self_executable(argv[0]);

  CLI::App app{"Replaces pragma-annotated regions of C/C++ source with the best building-block candidate"};
  app.require_subcommand(0, 1);

  optimizer::RunConfig cfg;
  std::string input;
  std::string output;
  double timeout_s = static_cast<double>(optimizer::kDefaultGeneratorTimeout.count());
  app.add_option("input", input, "Annotated C/C++ source file");
  app.add_option("--bbs", cfg.bbs_dir, "Directory of building-block generator executables");
  app.add_option("--arch", cfg.arch, "Architecture profile name or path");
  app.add_option("-o,--output", output, "Output file");
  app.add_flag("--dry-run", cfg.dry_run, "Print each region's candidate costs and the winner without writing");
  app.add_option("--guard-macro", cfg.guard_macro, "Preprocessor macro guarding optimized code")
      ->capture_default_str();
  app.add_option("--indent-unit", cfg.indent_unit, "Spaces added in front of emitted body lines")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  app.add_flag("--in-place", cfg.in_place, "Overwrite the input file");
  app.add_option("--timeout", timeout_s, "Generator wall-clock budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Time naive and optimized kernel variants");
  std::string bench_kernel;
  optimizer::BenchDims dims;
  std::size_t reps = 1000;
  std::size_t warmup = 100;
  std::string format = "table";
  bench->add_option("kernel", bench_kernel, "beamform or fftfilter")->required();
  bench->add_option("--f", dims.f, "Flows (beamform)")->capture_default_str();
  bench->add_option("--b", dims.b, "Resource elements (beamform)")->capture_default_str();
  bench->add_option("--antennas", dims.antennas, "Antennas (beamform)")->capture_default_str();
  bench->add_option("--n", dims.n, "FFT size (fftfilter)")->capture_default_str();
  bench->add_option("--reps", reps, "Timed repetitions")->capture_default_str();
  bench->add_option("--warmup", warmup, "Untimed warmup runs")->capture_default_str();
  bench->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  auto* list = app.add_subcommand("list-kernels", "List generators in a building-block directory");
  fs::path list_dir;
  list->add_option("--bbs", list_dir, "Building-block directory")->required();

  auto* install = app.add_subcommand("install-bbs", "Install the shipped beamform and fftfilter generators");
  fs::path install_dir;
  install->add_option("dir", install_dir, "Target directory")->required();

  auto* generate = app.add_subcommand("generate", "Run a shipped generator directly");
  std::string gen_name;
  std::vector<std::string> gen_args;
  generate->add_option("name", gen_name, "beamform or fftfilter")->required();
  generate->add_option("args", gen_args, "Generator parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : optimizer::kExitIoOrConfigError;
  }

  try {
    if (*bench) {
      const auto report = optimizer::run_bench(bench_kernel, dims, reps, warmup);
      if (format == "csv") {
        std::cerr << optimizer::kMachineDisclaimer << "\n";
        std::cout << optimizer::format_csv(report);
      } else {
        std::cout << optimizer::format_table(report);
      }
      return 0;
    }
    if (*list) {
      const auto registry = optimizer::BlockRegistry::load(list_dir);
      for (const auto& [name, id] : registry.blocks()) std::cout << name << "\n";
      return 0;
    }
    if (*install) {
      dsp::make_bbs_generators(install_dir, exe);
      return 0;
    }
    if (*generate) return dsp::run_generator(gen_name, gen_args, std::cout, std::cerr);
  } catch (const optimizer::EquivalenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return optimizer::kExitIoOrConfigError;
  }

  if (input.empty() || cfg.bbs_dir.empty() || cfg.arch.empty()) {
    std::cerr << "usage: optimizer <input> --bbs <dir> --arch <name|path> -o <output> [options]\n"
              << "run with --help for details\n";
    return optimizer::kExitIoOrConfigError;
  }
  cfg.input_path = input;
  if (!output.empty()) cfg.output_path = output;
  cfg.profile_search_dirs = profile_dirs(exe);
  cfg.generator_timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
  return optimizer::run_optimize(cfg, std::cout, std::cerr);
}
