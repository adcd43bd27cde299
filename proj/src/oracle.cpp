#include "systemt/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace systemt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Nat parse_nat(std::string_view s) {
  s = trim(s);
  Nat v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad natural number in oracle spec: '" + std::string(s) + "'");
  return v;
}

// Splits "a,b,c;default=d" into entries and the default (0 when absent).
std::pair<std::vector<Nat>, Nat> parse_spec(std::string_view spec) {
  std::vector<Nat> entries;
  Nat dflt = 0;
  std::string_view table = spec;
  if (auto semi = spec.find(';'); semi != std::string_view::npos) {
    table = spec.substr(0, semi);
    std::string_view rest = trim(spec.substr(semi + 1));
    if (rest.substr(0, 8) != "default=")
      throw std::invalid_argument("oracle spec: expected 'default=' after ';'");
    dflt = parse_nat(rest.substr(8));
  } else if (trim(spec).substr(0, 8) == "default=") {
    return {{}, parse_nat(trim(spec).substr(8))};
  }
  table = trim(table);
  while (!table.empty()) {
    auto comma = table.find(',');
    entries.push_back(parse_nat(table.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    table.remove_prefix(comma + 1);
  }
  return {std::move(entries), dflt};
}

}  // namespace

std::string Oracle::str() const {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(prefix[i]);
  }
  if (!out.empty()) out += ';';
  return out + "default=" + std::to_string(default_value);
}

Oracle Oracle::parse(std::string_view spec) {
  auto [entries, dflt] = parse_spec(spec);
  return Oracle{std::move(entries), dflt};
}

bool operator==(const Oracle& a, const Oracle& b) {
  if (a.default_value != b.default_value) return false;
  std::size_t n = std::max(a.prefix.size(), b.prefix.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string BoolOracle::str() const {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out += ',';
    out += prefix[i] ? '1' : '0';
  }
  if (!out.empty()) out += ';';
  return out + "default=" + (default_value ? "1" : "0");
}

BoolOracle BoolOracle::parse(std::string_view spec) {
  auto [entries, dflt] = parse_spec(spec);
  BoolOracle o;
  for (Nat e : entries) {
    if (e > 1) throw std::invalid_argument("boolean oracle entries must be 0 or 1");
    o.prefix.push_back(e == 1);
  }
  if (dflt > 1) throw std::invalid_argument("boolean oracle default must be 0 or 1");
  o.default_value = dflt == 1;
  return o;
}

Oracle embed(const BoolOracle& a) {
  Oracle o;
  o.prefix.reserve(a.prefix.size());
  for (bool b : a.prefix) o.prefix.push_back(embed_bit(b));
  o.default_value = embed_bit(a.default_value);
  return o;
}

}  // namespace systemt
