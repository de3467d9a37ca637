// SPDX-License-Identifier: Apache-2.0

#include "optimizer/run_optimize.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "optimizer/arch_profile.hpp"
#include "optimizer/pragma_parser.hpp"
#include "optimizer/variant_selector.hpp"

namespace optimizer {

namespace fs = std::filesystem;

namespace {

struct RegionOutcome {
  std::vector<Candidate> candidates;
  std::string generator_stderr;
  std::optional<RegistryError> error;
};

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

}  // namespace

int run_optimize(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const std::string input_name = config.input_path.string();

  std::optional<fs::path> output = config.output_path;
  if (config.in_place) {
    if (output && !same_file(*output, config.input_path)) {
      diag << "error: --in-place conflicts with -o " << output->string() << "\n";
      return kExitIoOrConfigError;
    }
    output = config.input_path;
  } else if (output && same_file(*output, config.input_path)) {
    diag << "error: output path equals input path; pass --in-place to overwrite " << input_name << "\n";
    return kExitIoOrConfigError;
  }
  if (!output && !config.dry_run) {
    diag << "error: no output path given (use -o, --in-place or --dry-run)\n";
    return kExitIoOrConfigError;
  }

  std::string text;
  {
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) {
      diag << input_name << ": error: cannot read input file\n";
      return kExitIoOrConfigError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  AnnotatedSource source;
  try {
    source = parse(text, input_name);
  } catch (const ParseError& e) {
    diag << e.what() << "\n";
    return kExitParseError;
  }

  ArchProfile arch;
  try {
    arch = resolve_arch_profile(config.arch, config.profile_search_dirs);
  } catch (const ProfileError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitIoOrConfigError;
  }

  BlockRegistry registry;
  try {
    registry = BlockRegistry::load(config.bbs_dir, [&](const std::string& msg) { diag << msg; });
  } catch (const RegistryError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitIoOrConfigError;
  }

  const auto regions = source.regions();
  for (const auto* region : regions) {
    if (!registry.contains(region->kernel_name())) {
      diag << input_name << ':' << region->begin.line.index << ": error: UnknownKernel: no building block '"
           << region->kernel_name() << "' in " << config.bbs_dir.string() << "\n";
      return kExitUnknownKernel;
    }
  }

  // Generators run concurrently; results are consumed in region order.
  std::vector<std::future<RegionOutcome>> pending;
  for (const auto* region : regions) {
    pending.push_back(std::async(std::launch::async, [&, region] {
      RegionOutcome outcome;
      try {
        outcome.candidates = registry.invoke(region->kernel_name(), region->full_params, arch.name,
                                             config.generator_timeout,
                                             [&](const std::string& s) { outcome.generator_stderr += s; });
      } catch (const RegistryError& e) {
        outcome.error = e;
      }
      return outcome;
    }));
  }
  std::vector<RegionOutcome> outcomes;
  for (auto& p : pending) outcomes.push_back(p.get());

  std::vector<Candidate> winners;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const PragmaRegion& region = *regions[i];
    RegionOutcome& outcome = outcomes[i];
    const std::string where = input_name + ":" + std::to_string(region.begin.line.index);
    diag << outcome.generator_stderr;
    if (outcome.error) {
      diag << where << ": error: " << outcome.error->what() << "\n";
      return outcome.error->kind() == RegistryErrorKind::UnknownKernel ? kExitUnknownKernel : kExitGeneratorError;
    }

    Selection selection;
    try {
      selection = select(outcome.candidates, arch);
    } catch (const SelectionError& e) {
      diag << where << ": error: " << e.what() << "\n";
      return kExitGeneratorError;
    }

    if (config.dry_run) {
      out << where << ": region '" << region.kernel_name() << "' (params: " << join(region.full_params) << ") on "
          << arch.name << "\n";
      for (std::size_t c = 0; c < outcome.candidates.size(); ++c) {
        out << "  candidate " << outcome.candidates[c].label << ": ";
        if (selection.estimates[c]) out << format_rational(selection.estimates[c]->cycles) << " cycles\n";
        else out << "inadmissible (requires fma)\n";
      }
      out << "  selected: " << outcome.candidates[selection.winner].label << "\n";
    }
    winners.push_back(std::move(outcome.candidates[selection.winner]));
  }

  if (config.dry_run) return kExitSuccess;

  EmitOptions options;
  options.guard_macro = config.guard_macro;
  options.indent_unit = std::string(config.indent_unit, ' ');
  const std::string result = emit(make_rewrite_plan(std::move(source), std::move(winners)), options);

  std::ofstream dest(*output, std::ios::binary | std::ios::trunc);
  if (!dest || !(dest << result) || !dest.flush()) {
    diag << output->string() << ": error: cannot write output file\n";
    return kExitIoOrConfigError;
  }
  return kExitSuccess;
}

}  // namespace optimizer
