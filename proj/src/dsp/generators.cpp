// SPDX-License-Identifier: Apache-2.0

#include "dsp/generators.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "dsp/filter.hpp"

namespace dsp {

namespace {

using optimizer::Candidate;

constexpr std::size_t kMaxBeamformDim = 4096;
constexpr std::size_t kMaxFilterSize = std::size_t{1} << 20;

std::string substitute(std::string text, const std::vector<std::pair<std::string, std::string>>& vars) {
  for (const auto& [key, value] : vars) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
      text.replace(pos, key.size(), value);
      pos += value.size();
    }
  }
  return text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

constexpr const char* kBeamformNaive = R"(// R = w * S, w: @F@ weights, S: @F@ x @B@ symbols, r: @B@ outputs (interleaved complex float)
static inline void optimizer_beamform_naive_f@F@_b@B@(const float* w, const float* s, float* r)
{
    for (int j = 0; j < @B@; ++j) {
        r[2 * j] = 0.0f;
        r[2 * j + 1] = 0.0f;
    }
    for (int k = 0; k < @F@; ++k) {
        for (int j = 0; j < @B@; ++j) {
            const float* sk = s + 2 * (k * @B@ + j);
            const float t1_re = w[2 * k] * sk[0];
            const float t1_im = w[2 * k] * sk[1];
            const float t2_re = w[2 * k + 1] * sk[1];
            const float t2_im = w[2 * k + 1] * sk[0];
            r[2 * j] += t1_re - t2_re;
            r[2 * j + 1] += t1_im + t2_im;
        }
    }
})";

constexpr const char* kBeamformOptimized = R"(// R = w * S, w: @F@ weights, S: @F@ x @B@ symbols, r: @B@ outputs (interleaved complex float)
static inline void optimizer_beamform_optimized_f@F@_b@B@(const float* w, const float* s, float* r)
{
    float w_re[@FA@];
    float w_im[@FA@];
    for (int k = 0; k < @F@; ++k) {
        w_re[k] = w[2 * k];
        w_im[k] = w[2 * k + 1];
    }
    for (int j = 0; j < @B@; ++j) {
        float acc_re = 0.0f;
        float acc_im = 0.0f;
        for (int k = 0; k < @F@; ++k) {
            const float* sk = s + 2 * (k * @B@ + j);
            acc_re = std::fma(w_re[k], sk[0], acc_re);
            acc_re = std::fma(-w_im[k], sk[1], acc_re);
            acc_im = std::fma(w_re[k], sk[1], acc_im);
            acc_im = std::fma(w_im[k], sk[0], acc_im);
        }
        r[2 * j] = acc_re;
        r[2 * j + 1] = acc_im;
    }
})";

constexpr const char* kFilterNaive = R"(// y = IFFT(h .* FFT(s)), n = @N@, interleaved complex float
static void optimizer_fftfilter_naive_n@N@_transform(float* x, int inverse)
{
    const int n = @N@;
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    for (int i = 0; i < n; ++i) {
        int j = 0;
        for (int bit = 0; bit < bits; ++bit) j |= ((i >> bit) & 1) << (bits - 1 - bit);
        if (i < j) {
            const float tr = x[2 * i];
            const float ti = x[2 * i + 1];
            x[2 * i] = x[2 * j];
            x[2 * i + 1] = x[2 * j + 1];
            x[2 * j] = tr;
            x[2 * j + 1] = ti;
        }
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        const double angle = sign * 2.0 * 3.14159265358979323846 / len;
        const double step_re = std::cos(angle);
        const double step_im = std::sin(angle);
        for (int i = 0; i < n; i += len) {
            double w_re = 1.0;
            double w_im = 0.0;
            for (int j = 0; j < half; ++j) {
                float* top = x + 2 * (i + j);
                float* bottom = x + 2 * (i + j + half);
                const float wr = (float)w_re;
                const float wi = (float)w_im;
                const float tr = bottom[0] * wr - bottom[1] * wi;
                const float ti = bottom[0] * wi + bottom[1] * wr;
                const float ur = top[0];
                const float ui = top[1];
                top[0] = ur + tr;
                top[1] = ui + ti;
                bottom[0] = ur - tr;
                bottom[1] = ui - ti;
                const double next_re = w_re * step_re - w_im * step_im;
                const double next_im = w_re * step_im + w_im * step_re;
                w_re = next_re;
                w_im = next_im;
            }
        }
    }
    if (inverse) {
        const float scale = 1.0f / n;
        for (int i = 0; i < 2 * n; ++i) x[i] *= scale;
    }
}

static inline void optimizer_fftfilter_naive_n@N@(const float* s, const float* h, float* y)
{
    for (int i = 0; i < 2 * @N@; ++i) y[i] = s[i];
    optimizer_fftfilter_naive_n@N@_transform(y, 0);
    for (int k = 0; k < @N@; ++k) {
        const float ar = y[2 * k];
        const float ai = y[2 * k + 1];
        y[2 * k] = ar * h[2 * k] - ai * h[2 * k + 1];
        y[2 * k + 1] = ar * h[2 * k + 1] + ai * h[2 * k];
    }
    optimizer_fftfilter_naive_n@N@_transform(y, 1);
})";

constexpr const char* kFilterOptimized = R"(// y = IFFT(h .* FFT(s)), n = @N@, interleaved complex float
struct optimizer_fftfilter_plan_n@N@ {
    float tw_re[@HA@];
    float tw_im_fwd[@HA@];
    float tw_im_inv[@HA@];
    int reverse[@N@];

    optimizer_fftfilter_plan_n@N@()
    {
        int bits = 0;
        while ((1 << bits) < @N@) ++bits;
        for (int i = 0; i < @N@; ++i) {
            int r = 0;
            for (int bit = 0; bit < bits; ++bit) r |= ((i >> bit) & 1) << (bits - 1 - bit);
            reverse[i] = r;
        }
        for (int j = 0; j < @H@; ++j) {
            const double angle = 2.0 * 3.14159265358979323846 * j / @N@;
            tw_re[j] = (float)std::cos(angle);
            tw_im_fwd[j] = (float)-std::sin(angle);
            tw_im_inv[j] = -tw_im_fwd[j];
        }
    }
};

static const optimizer_fftfilter_plan_n@N@& optimizer_fftfilter_plan_n@N@_get()
{
    static const optimizer_fftfilter_plan_n@N@ plan;
    return plan;
}

static void optimizer_fftfilter_optimized_n@N@_transform(float* x, const float* tw_im)
{
    const optimizer_fftfilter_plan_n@N@& plan = optimizer_fftfilter_plan_n@N@_get();
    for (int i = 0; i < @N@; ++i) {
        const int j = plan.reverse[i];
        if (i < j) {
            const float tr = x[2 * i];
            const float ti = x[2 * i + 1];
            x[2 * i] = x[2 * j];
            x[2 * i + 1] = x[2 * j + 1];
            x[2 * j] = tr;
            x[2 * j + 1] = ti;
        }
    }
    for (int len = 2; len <= @N@; len <<= 1) {
        const int half = len / 2;
        const int stride = @N@ / len;
        for (int i = 0; i < @N@; i += len) {
            for (int j = 0; j < half; ++j) {
                const float wr = plan.tw_re[j * stride];
                const float wi = tw_im[j * stride];
                float* top = x + 2 * (i + j);
                float* bottom = x + 2 * (i + j + half);
                const float tr = std::fma(-bottom[1], wi, bottom[0] * wr);
                const float ti = std::fma(bottom[1], wr, bottom[0] * wi);
                const float ur = top[0];
                const float ui = top[1];
                top[0] = ur + tr;
                top[1] = ui + ti;
                bottom[0] = ur - tr;
                bottom[1] = ui - ti;
            }
        }
    }
}

static inline void optimizer_fftfilter_optimized_n@N@(const float* s, const float* h, float* y)
{
    const optimizer_fftfilter_plan_n@N@& plan = optimizer_fftfilter_plan_n@N@_get();
    for (int i = 0; i < 2 * @N@; ++i) y[i] = s[i];
    optimizer_fftfilter_optimized_n@N@_transform(y, plan.tw_im_fwd);
    for (int k = 0; k < @N@; ++k) {
        const float ar = y[2 * k];
        const float ai = y[2 * k + 1];
        y[2 * k] = std::fma(-ai, h[2 * k + 1], ar * h[2 * k]);
        y[2 * k + 1] = std::fma(ai, h[2 * k], ar * h[2 * k + 1]);
    }
    optimizer_fftfilter_optimized_n@N@_transform(y, plan.tw_im_inv);
    const float scale = 1.0f / @N@;
    for (int i = 0; i < 2 * @N@; ++i) y[i] *= scale;
})";

Candidate make_candidate(std::string label, std::vector<std::string> includes, const std::string& functions,
                         std::string body, OpCounts counts) {
  Candidate c;
  c.label = std::move(label);
  c.fragment.includes = std::move(includes);
  c.fragment.functions = lines_of(functions);
  c.fragment.body = {std::move(body)};
  c.op_counts = counts;
  return c;
}

bool parse_size(const std::string& text, std::size_t& value) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return !text.empty() && ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

OpCounts beamform_row_counts(BeamformVariant variant, std::size_t f, std::size_t b) {
  const std::vector<cf32> w(f);
  const ComplexMat S(f, b);
  FlopCounter counter;
  if (variant == BeamformVariant::Naive) beamform_row_naive(w, S, &counter);
  else beamform_row_optimized(w, S, &counter);
  return counter.total();
}

OpCounts fftfilter_counts(FilterVariant variant, std::size_t n) {
  const ComplexVec s(n);
  const FilterConfig config{n, ComplexVec(n)};
  FlopCounter counter;
  if (variant == FilterVariant::Naive) filter_apply_naive(s, config, &counter);
  else filter_apply(s, config, &counter);
  return counter.total();
}

std::vector<Candidate> beamform_candidates(std::size_t f, std::size_t b) {
  const std::vector<std::pair<std::string, std::string>> vars{
      {"@FA@", std::to_string(f > 0 ? f : 1)}, {"@F@", std::to_string(f)}, {"@B@", std::to_string(b)}};
  const std::string suffix = "f" + std::to_string(f) + "_b" + std::to_string(b);
  return {
      make_candidate("naive", {}, substitute(kBeamformNaive, vars), "optimizer_beamform_naive_" + suffix + "(w, s, r);",
                     beamform_row_counts(BeamformVariant::Naive, f, b)),
      make_candidate("optimized", {"#include <cmath>"}, substitute(kBeamformOptimized, vars),
                     "optimizer_beamform_optimized_" + suffix + "(w, s, r);",
                     beamform_row_counts(BeamformVariant::Optimized, f, b)),
  };
}

std::vector<Candidate> fftfilter_candidates(std::size_t n) {
  const std::vector<std::pair<std::string, std::string>> vars{
      {"@HA@", std::to_string(n / 2 > 0 ? n / 2 : 1)}, {"@H@", std::to_string(n / 2)}, {"@N@", std::to_string(n)}};
  const std::string suffix = "n" + std::to_string(n);
  return {
      make_candidate("naive", {"#include <cmath>"}, substitute(kFilterNaive, vars),
                     "optimizer_fftfilter_naive_" + suffix + "(s, h, y);", fftfilter_counts(FilterVariant::Naive, n)),
      make_candidate("optimized", {"#include <cmath>"}, substitute(kFilterOptimized, vars),
                     "optimizer_fftfilter_optimized_" + suffix + "(s, h, y);",
                     fftfilter_counts(FilterVariant::Optimized, n)),
  };
}

int run_generator(std::string_view name, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (name == "beamform") {
    std::size_t f = 0;
    std::size_t b = 0;
    if (args.size() != 2 || !parse_size(args[0], f) || !parse_size(args[1], b)) {
      err << "usage: beamform <f> <b>   (non-negative integers)\n";
      return 2;
    }
    if (b < 1 || f > kMaxBeamformDim || b > kMaxBeamformDim) {
      err << "beamform: need 0 <= f <= " << kMaxBeamformDim << " and 1 <= b <= " << kMaxBeamformDim << "\n";
      return 2;
    }
    optimizer::write_candidate_stream(out, beamform_candidates(f, b));
    return 0;
  }
  if (name == "fftfilter") {
    std::size_t n = 0;
    if (args.size() != 1 || !parse_size(args[0], n)) {
      err << "usage: fftfilter <n>   (power of two)\n";
      return 2;
    }
    if (!is_power_of_two(n) || n > kMaxFilterSize) {
      err << "fftfilter: n must be a power of two no larger than " << kMaxFilterSize << "\n";
      return 2;
    }
    optimizer::write_candidate_stream(out, fftfilter_candidates(n));
    return 0;
  }
  err << "unknown generator '" << name << "'\n";
  return 2;
}

void make_bbs_generators(const std::filesystem::path& install_dir, const std::filesystem::path& driver) {
  namespace fs = std::filesystem;
  fs::create_directories(install_dir);
  for (const auto name : kShippedGenerators) {
    const fs::path target = install_dir / std::string(name);
    fs::copy_file(driver, target, fs::copy_options::overwrite_existing);
    fs::permissions(target,
                    fs::perms::owner_all | fs::perms::group_read | fs::perms::group_exec | fs::perms::others_read |
                        fs::perms::others_exec,
                    fs::perm_options::replace);
  }
}

}  // namespace dsp
