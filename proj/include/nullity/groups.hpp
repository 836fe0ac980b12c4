#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nullity {

/// A finite group as a Cayley table. Element 0 is the identity and
/// table(i, j) is the index of g_i * g_j. The element order fixed by each
/// constructor is part of the public contract: coefficient vectors and
/// regular-representation matrices are laid out in it.
class CayleyGroup {
 public:
  /// e, a, a^2, ..., a^{n-1}.
  static CayleyGroup cyclic(std::uint32_t n);
  /// Pairs (g, h) ordered lexicographically, first factor major.
  static CayleyGroup product(const CayleyGroup& first, const CayleyGroup& second);
  /// Permutations of {1,2,3}: e, (1 2), (1 3), (2 3), (1 2 3), (1 3 2).
  /// The product g*h applies h first, then g.
  static CayleyGroup s3();
  /// 1, a, a^2, a^3, b, ab, a^2b, a^3b with a^4 = 1, b^2 = a^2, ba = a^3 b.
  static CayleyGroup q8();
  /// Validates the table (identity at index 0, Latin square, associativity).
  static CayleyGroup from_table(std::vector<std::vector<std::uint32_t>> rows, std::string label = "table");
  /// Parses "C:n", "Cn", "S3", "Q8", products "AxB" and "@file.json".
  static CayleyGroup parse(std::string_view spec);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t i, std::uint32_t j) const noexcept {
    return table_[std::size_t{i} * order_ + j];
  }
  [[nodiscard]] std::uint32_t inverse(std::uint32_t i) const noexcept { return inverse_[i]; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] bool is_abelian() const noexcept;
  /// Flat row-major table.
  [[nodiscard]] const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  /// Cyclic order n when this group was built by cyclic(n).
  [[nodiscard]] std::optional<std::uint32_t> cyclic_order() const noexcept { return cyclic_order_; }

 private:
  CayleyGroup() = default;
  void finish();

  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::string> names_;
  std::string label_;
  std::optional<std::uint32_t> cyclic_order_;
};

/// Empty when the table is a group, otherwise the first violated axiom with
/// witness indices, e.g. "identity axiom violated at j=1".
std::optional<std::string> validate_group(std::uint32_t order, const std::vector<std::uint32_t>& table);

}  // namespace nullity
