#include "nullity/groups.hpp"

#include "nullity/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>

namespace nullity {

namespace {

std::string triple(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

CayleyGroup parse_factor(std::string_view spec, std::string_view whole) {
  if (spec == "S3") return CayleyGroup::s3();
  if (spec == "Q8") return CayleyGroup::q8();
  if (!spec.empty() && spec[0] == 'C') {
    auto digits = spec.substr(1);
    if (!digits.empty() && digits[0] == ':') digits = digits.substr(1);
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() && n >= 1)
      return CayleyGroup::cyclic(n);
  }
  throw Error(ErrorCode::parse, "group spec '" + std::string(whole) + "': cannot parse factor '" + std::string(spec) + "'");
}

}  // namespace

std::optional<std::string> validate_group(std::uint32_t n, const std::vector<std::uint32_t>& t) {
  if (n == 0) return "group must have at least one element";
  if (t.size() != std::size_t{n} * n) return "table is not " + std::to_string(n) + "x" + std::to_string(n);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n) return "entry out of range at i=" + std::to_string(i / n) + ", j=" + std::to_string(i % n);
  auto at = [&](std::uint32_t i, std::uint32_t j) { return t[std::size_t{i} * n + j]; };
  for (std::uint32_t j = 0; j < n; ++j)
    if (at(0, j) != j || at(j, 0) != j) return "identity axiom violated at j=" + std::to_string(j);
  std::vector<char> seen(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]) return "Latin square violated: row " + std::to_string(i) + " repeats " + std::to_string(at(i, j));
      seen[at(i, j)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]) return "Latin square violated: column " + std::to_string(i) + " repeats " + std::to_string(at(j, i));
      seen[at(j, i)] = 1;
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k))) return "associativity violated at " + triple(i, j, k);
  return std::nullopt;
}

void CayleyGroup::finish() {
  inverse_.assign(order_, 0);
  for (std::uint32_t i = 0; i < order_; ++i)
    for (std::uint32_t j = 0; j < order_; ++j)
      if (mul(i, j) == 0) inverse_[i] = j;
}

bool CayleyGroup::is_abelian() const noexcept {
  for (std::uint32_t i = 0; i < order_; ++i)
    for (std::uint32_t j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

CayleyGroup CayleyGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cyclic group order must be >= 1");
  CayleyGroup g;
  g.order_ = n;
  g.table_.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) g.table_[std::size_t{i} * n + j] = (i + j) % n;
  g.names_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) g.names_[i] = i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i);
  g.label_ = "C:" + std::to_string(n);
  g.cyclic_order_ = n;
  g.finish();
  return g;
}

CayleyGroup CayleyGroup::product(const CayleyGroup& a, const CayleyGroup& b) {
  CayleyGroup g;
  const std::uint32_t na = a.order(), nb = b.order();
  g.order_ = na * nb;
  g.table_.resize(std::size_t{g.order_} * g.order_);
  for (std::uint32_t i = 0; i < g.order_; ++i)
    for (std::uint32_t j = 0; j < g.order_; ++j)
      g.table_[std::size_t{i} * g.order_ + j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  g.names_.resize(g.order_);
  for (std::uint32_t i = 0; i < g.order_; ++i) g.names_[i] = "(" + a.names()[i / nb] + "," + b.names()[i % nb] + ")";
  g.label_ = a.label() + "x" + b.label();
  g.finish();
  return g;
}

CayleyGroup CayleyGroup::s3() {
  // Images of (1,2,3) under each permutation, in canonical order.
  static constexpr std::array<std::array<int, 3>, 6> perms{{
      {1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};
  CayleyGroup g;
  g.order_ = 6;
  g.table_.resize(36);
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j) {
      std::array<int, 3> composed{};
      for (int x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x] - 1];
      const auto it = std::find(perms.begin(), perms.end(), composed);
      g.table_[i * 6 + j] = static_cast<std::uint32_t>(it - perms.begin());
    }
  g.names_ = {"e", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"};
  g.label_ = "S3";
  g.finish();
  return g;
}

CayleyGroup CayleyGroup::q8() {
  // Element a^i b^j sits at index 4j + i.
  CayleyGroup g;
  g.order_ = 8;
  g.table_.resize(64);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      const std::uint32_t i = x % 4, j = x / 4, k = y % 4, l = y / 4;
      // a^i b^j a^k b^l = a^{i + (-1)^j k} b^{j+l}, and b^2 = a^2.
      std::uint32_t exp = j == 0 ? i + k : i + 4 - k;
      std::uint32_t bpow = j + l;
      if (bpow == 2) {
        exp += 2;
        bpow = 0;
      }
      g.table_[x * 8 + y] = 4 * bpow + exp % 4;
    }
  g.names_ = {"1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"};
  g.label_ = "Q8";
  g.finish();
  return g;
}

CayleyGroup CayleyGroup::from_table(std::vector<std::vector<std::uint32_t>> rows, std::string label) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  std::vector<std::uint32_t> flat;
  flat.reserve(std::size_t{n} * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::invalid_argument, "Cayley table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (auto violation = validate_group(n, flat)) throw Error(ErrorCode::invalid_argument, *violation);
  CayleyGroup g;
  g.order_ = n;
  g.table_ = std::move(flat);
  g.names_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) g.names_[i] = "g" + std::to_string(i);
  g.label_ = std::move(label);
  g.finish();
  return g;
}

CayleyGroup CayleyGroup::parse(std::string_view spec) {
  if (!spec.empty() && spec[0] == '@') {
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open group table '" + path + "'");
    std::vector<std::vector<std::uint32_t>> rows;
    try {
      rows = nlohmann::json::parse(in).get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, "group table '" + path + "': " + e.what());
    }
    return from_table(std::move(rows), std::string(spec));
  }
  std::optional<CayleyGroup> result;
  std::size_t start = 0;
  while (true) {
    const auto x = spec.find('x', start);
    const auto factor = parse_factor(spec.substr(start, x == std::string_view::npos ? x : x - start), spec);
    result = result ? product(*result, factor) : factor;
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  return *result;
}

}  // namespace nullity
