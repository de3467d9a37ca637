// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <sys/stat.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "dsp/complex_types.hpp"

namespace test_support {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "optimizer-test-XXXXXX").string();
    if (!::mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

inline void write_script(const fs::path& p, const std::string& body) {
  write_file(p, "#!/bin/sh\n" + body);
  fs::permissions(p, fs::perms::owner_all, fs::perm_options::replace);
}

/// Shell script that prints one minimal candidate.
inline std::string minimal_candidate_script(const std::string& label = "only", const std::string& body = "/* k */") {
  return "cat <<'OUT'\n=== CANDIDATE " + label +
         " ===\n;; ops fma=0 mul=0 add=0 perm=0 load=0 store=0\n--- INCLUDES ---\n--- FUNCTIONS ---\n--- BODY ---\n" +
         body + "\nOUT\n";
}

inline dsp::ComplexVec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<float> uni(-1.0f, 1.0f);
  dsp::ComplexVec v(n);
  for (auto& x : v) x = {uni(rng), uni(rng)};
  return v;
}

inline dsp::ComplexMat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<float> uni(-1.0f, 1.0f);
  dsp::ComplexMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& x : m.row(r)) x = {uni(rng), uni(rng)};
  return m;
}

}  // namespace test_support
