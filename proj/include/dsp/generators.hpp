// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dsp/beamform.hpp"
#include "optimizer/candidate.hpp"

namespace dsp {

enum class FilterVariant { Naive, Optimized };

/// Names under which the generators are installed into a bbs directory.
inline constexpr std::array<std::string_view, 2> kShippedGenerators{"beamform", "fftfilter"};

/// Instrumented counts of one weight-row product at (f, b).
OpCounts beamform_row_counts(BeamformVariant variant, std::size_t f, std::size_t b);
/// Instrumented counts of one filter application at size n.
OpCounts fftfilter_counts(FilterVariant variant, std::size_t n);

/// Candidates `naive` then `optimized`. Emitted helpers take interleaved
/// float pointers `w` (f weights), `s` (f x b symbols) and `r` (b outputs).
std::vector<optimizer::Candidate> beamform_candidates(std::size_t f, std::size_t b);
/// Candidates `naive` then `optimized` over interleaved `s`, spectrum `h`
/// and output `y`, each n complex samples.
std::vector<optimizer::Candidate> fftfilter_candidates(std::size_t n);

/// Generator entry point: writes a candidate stream to `out`, or a message to
/// `err` and returns nonzero for bad arguments.
int run_generator(std::string_view name, const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err);

/// Installs the shipped generators into `install_dir` as copies of `driver`,
/// a binary that dispatches to run_generator on its own file name.
void make_bbs_generators(const std::filesystem::path& install_dir, const std::filesystem::path& driver);

}  // namespace dsp
