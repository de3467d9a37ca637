// SPDX-License-Identifier: Apache-2.0

#include "optimizer/arch_profile.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace optimizer {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  text = trim(text);
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (dot != std::string_view::npos && !all_digits(frac)))
    throw ProfileError("not a non-negative decimal number: '" + std::string(text) + "'");

  using boost::multiprecision::cpp_int;
  cpp_int numerator(whole.empty() ? std::string("0") : std::string(whole));
  cpp_int denominator = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  cpp_int scale = 1;
  int places = 0;
  while (places <= 6) {
    if ((num * scale) % den == 0) {
      const cpp_int scaled = num * scale / den;
      std::string digits = scaled.str();
      if (places == 0) return digits;
      const bool negative = digits.front() == '-';
      if (negative) digits.erase(0, 1);
      if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, places - digits.size() + 1, '0');
      digits.insert(digits.size() - places, ".");
      return negative ? "-" + digits : digits;
    }
    scale *= 10;
    ++places;
  }
  return num.str() + "/" + den.str();
}

ArchProfile parse_arch_profile(std::string_view text, const std::string& origin) {
  ArchProfile profile;
  std::set<std::string> seen;
  std::optional<unsigned> vector_bits;
  std::optional<bool> has_fma;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ProfileError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) fail("duplicate key '" + key + "'");

    if (key == "name") {
      if (value.empty()) fail("empty profile name");
      profile.name = std::string(value);
    } else if (key == "vector_bits") {
      unsigned bits = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), bits);
      if (ec != std::errc{} || ptr != value.data() + value.size() || bits == 0 || bits % 8 != 0)
        fail("vector_bits must be a positive multiple of 8");
      vector_bits = bits;
    } else if (key == "has_fma") {
      if (value == "true") has_fma = true;
      else if (value == "false") has_fma = false;
      else fail("has_fma must be true or false");
    } else if (key.rfind("recip.", 0) == 0) {
      const std::string_view cls = std::string_view(key).substr(6);
      std::optional<OpClass> op;
      for (auto c : kOpClasses)
        if (to_string(c) == cls) op = c;
      if (!op) fail("unknown key '" + key + "'");
      Rational r;
      try {
        r = parse_decimal(value);
      } catch (const ProfileError& e) {
        fail(e.what());
      }
      if (r <= 0) fail("reciprocal throughput for '" + key + "' must be positive");
      profile.recip_throughput[*op] = r;
    } else {
      fail("unknown key '" + key + "'");
    }
  }

  lineno = 0;
  if (profile.name.empty()) fail("missing key 'name'");
  if (!vector_bits) fail("missing key 'vector_bits'");
  if (!has_fma) fail("missing key 'has_fma'");
  for (auto c : kOpClasses)
    if (!profile.recip_throughput.count(c)) fail("missing key 'recip." + std::string(to_string(c)) + "'");
  profile.vector_bits = *vector_bits;
  profile.has_fma = *has_fma;
  return profile;
}

ArchProfile load_arch_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot read architecture profile " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arch_profile(buf.str(), path.string());
}

ArchProfile resolve_arch_profile(const std::string& name_or_path,
                                 const std::vector<std::filesystem::path>& search_dirs) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(name_or_path, ec)) return load_arch_profile(name_or_path);
  for (const auto& dir : search_dirs) {
    const fs::path candidate = dir / (name_or_path + ".profile");
    if (fs::is_regular_file(candidate, ec)) return load_arch_profile(candidate);
  }
  throw ProfileError("unknown architecture profile '" + name_or_path + "'");
}

}  // namespace optimizer
