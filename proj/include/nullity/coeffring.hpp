#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nullity {

/// Canonical element index of a coefficient ring. 0 is the additive zero and
/// 1 the multiplicative one. For F_{p^m} the base-p digits of the index,
/// least significant first, are the polynomial coefficients a0 + a1 t + ...
using RingElem = std::uint32_t;

enum class RingKind { prime_field, extension_field, mod_n };

inline constexpr std::uint64_t kDefaultRingSizeCap = std::uint64_t{1} << 22;

/// Rings up to this size carry full add/mul tables; larger rings compute.
inline constexpr std::uint64_t kTableThreshold = 1024;

struct RingSpec {
  RingKind kind = RingKind::prime_field;
  std::uint32_t p = 0;  // fields only
  std::uint32_t m = 0;  // fields only
  std::uint32_t n = 0;  // mod-n only
};

/// A finite coefficient ring: F_p, F_{p^m} (lexicographically smallest monic
/// irreducible modulus) or Z/nZ. Immutable after construction.
class CoeffRing {
 public:
  static CoeffRing field(std::uint32_t p, std::uint32_t m = 1,
                         std::uint64_t size_cap = kDefaultRingSizeCap);
  static CoeffRing integers_mod(std::uint32_t n, std::uint64_t size_cap = kDefaultRingSizeCap);
  static CoeffRing make(const RingSpec& spec, std::uint64_t size_cap = kDefaultRingSizeCap);

  /// Parses "F:p^m", "F:q" (q must be a prime power) or "Z:n".
  static CoeffRing parse(std::string_view spec, std::uint64_t size_cap = kDefaultRingSizeCap);

  [[nodiscard]] RingKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_field() const noexcept { return kind_ != RingKind::mod_n; }
  [[nodiscard]] std::uint32_t size() const noexcept { return size_; }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return kind_ == RingKind::mod_n ? n_ : p_; }
  [[nodiscard]] std::uint32_t prime() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t degree() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return n_; }
  /// Non-leading coefficients (a0, ..., a_{m-1}) of the defining polynomial.
  [[nodiscard]] const std::vector<std::uint32_t>& modulus_poly() const noexcept { return modulus_poly_; }
  /// Canonical spec string: "F:p^m", "F:p" or "Z:n".
  [[nodiscard]] std::string spec() const;
  /// Human readable form of an element, e.g. "t+1" or "3".
  [[nodiscard]] std::string format(RingElem a) const;

  [[nodiscard]] RingElem add(RingElem a, RingElem b) const {
    if (!add_table_.empty()) return add_table_[std::size_t{a} * size_ + b];
    return add_slow(a, b);
  }
  [[nodiscard]] RingElem mul(RingElem a, RingElem b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * size_ + b];
    return mul_slow(a, b);
  }
  [[nodiscard]] RingElem neg(RingElem a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  [[nodiscard]] RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
  /// Throws Error(not_invertible) for zero and for non-units of Z/nZ.
  [[nodiscard]] RingElem inv(RingElem a) const;
  [[nodiscard]] bool is_unit(RingElem a) const;
  [[nodiscard]] RingElem pow(RingElem a, std::uint64_t e) const;

 private:
  CoeffRing() = default;
  void build_tables();
  [[nodiscard]] RingElem add_slow(RingElem a, RingElem b) const;
  [[nodiscard]] RingElem mul_slow(RingElem a, RingElem b) const;
  [[nodiscard]] RingElem neg_slow(RingElem a) const;
  [[nodiscard]] RingElem inv_slow(RingElem a) const;

  RingKind kind_ = RingKind::prime_field;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_poly_;

  std::vector<RingElem> add_table_;
  std::vector<RingElem> mul_table_;
  std::vector<RingElem> neg_table_;
  std::vector<RingElem> inv_table_;  // 0 marks "not invertible"
};

/// First (x, y) in index order (x outer, y inner) with x^2 + y^2 = -1.
/// Requires a field.
std::optional<std::pair<RingElem, RingElem>> solve_sum_of_squares_minus_one(const CoeffRing& k);

// Number-theory helpers shared with the formulas module.
bool is_prime(std::uint64_t n);
/// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Trial-division irreducibility test over F_p; coefficients are
/// (a0, ..., a_{m-1}) of a monic degree-m polynomial.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic_low_coeffs);

}  // namespace nullity
