// SPDX-License-Identifier: Apache-2.0

#include "dsp/complex_types.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dsp {

ComplexVec read_complex_text(std::istream& in) {
  std::vector<cf32> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    float re = 0, im = 0;
    std::string extra;
    if (!(fields >> re >> im) || (fields >> extra))
      throw std::runtime_error("complex text line " + std::to_string(lineno) + ": expected '<re> <im>'");
    samples.emplace_back(re, im);
  }
  return ComplexVec(std::move(samples));
}

void write_complex_text(std::ostream& out, const ComplexVec& v) {
  const auto old = out.precision(std::numeric_limits<float>::max_digits10);
  for (const auto& s : v) out << s.real() << ' ' << s.imag() << '\n';
  out.precision(old);
}

}  // namespace dsp
