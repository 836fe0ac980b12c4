#pragma once

#include "nullity/coeffring.hpp"
#include "nullity/groups.hpp"
#include "nullity/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nullity {

/// Coefficient vector over a CayleyGroup: coeffs[i] multiplies g_i.
using GroupRingElement = std::vector<RingElem>;

/// Which annihilator: left = {a : a x = 0}, right = {a : x a = 0},
/// twosided = both.
enum class Side { left, right, twosided };

/// The matrix of a multiplication map. side == right represents a -> a x
/// (kernel Ann_l(x)); side == left represents a -> x a (kernel Ann_r(x)).
enum class MapSide { left, right };

struct RepMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<RingElem> entries;  // row-major
  MapSide side = MapSide::right;

  [[nodiscard]] RingElem at(std::uint32_t i, std::uint32_t j) const { return entries[std::size_t{i} * cols + j]; }
};

const char* to_string(Side side);
Side parse_side(std::string_view text);

/// Group algebra K[G]. Holds both operands by value.
class GroupRing {
 public:
  GroupRing(CoeffRing coeffs, CayleyGroup group);

  [[nodiscard]] const CoeffRing& coeffs() const noexcept { return k_; }
  [[nodiscard]] const CayleyGroup& group() const noexcept { return g_; }
  [[nodiscard]] std::uint32_t dim() const noexcept { return g_.order(); }

  [[nodiscard]] GroupRingElement zero() const { return GroupRingElement(dim(), 0); }
  [[nodiscard]] GroupRingElement one() const;

  /// Element with index `index` in [0, |K|^n): base-|K| digits, coefficient of
  /// g_0 least significant.
  void decode(std::uint64_t index, std::span<RingElem> out) const;
  [[nodiscard]] GroupRingElement decode(std::uint64_t index) const;
  [[nodiscard]] std::uint64_t encode(std::span<const RingElem> x) const;
  /// |K|^n, or throws cap_exceeded if it does not fit in 64 bits.
  [[nodiscard]] std::uint64_t element_count() const;

  /// Convolution product (ab)_h = sum over g g' = h of a_g b_g'.
  [[nodiscard]] GroupRingElement multiply(std::span<const RingElem> a, std::span<const RingElem> b) const;
  void multiply_into(std::span<const RingElem> a, std::span<const RingElem> b, std::span<RingElem> out) const;

  [[nodiscard]] RepMatrix regular_matrix(std::span<const RingElem> x, MapSide side) const;

  /// |Ann_side(x)|. Fields use rank-nullity; Z/nZ enumerates all |K|^n
  /// candidates (limited by max_elements).
  [[nodiscard]] BigInt annihilator_size(std::span<const RingElem> x, Side side,
                                        std::uint64_t max_elements = std::uint64_t{1} << 22) const;
  /// Kernel dimension of the relevant multiplication map (fields only).
  [[nodiscard]] std::uint32_t annihilator_dimension(std::span<const RingElem> x, Side side) const;
  /// Literal count of a with a x = 0 (left), x a = 0 (right) or both.
  [[nodiscard]] std::uint64_t annihilator_size_enumerated(std::span<const RingElem> x, Side side,
                                                          std::uint64_t max_elements = std::uint64_t{1} << 22) const;

  /// position maps: for side right, entry (i, j) of the matrix of a -> a x is
  /// x[right_positions()[i*n+j]]; likewise for left.
  [[nodiscard]] const std::vector<std::uint32_t>& right_positions() const noexcept { return right_pos_; }
  [[nodiscard]] const std::vector<std::uint32_t>& left_positions() const noexcept { return left_pos_; }

 private:
  void check_dim(std::size_t len) const;

  CoeffRing k_;
  CayleyGroup g_;
  std::vector<std::uint32_t> right_pos_;
  std::vector<std::uint32_t> left_pos_;
};

/// Rank of a rows x cols matrix over the field k. `m` is scratch and is
/// destroyed.
std::uint32_t rank_in_place(const CoeffRing& k, std::span<RingElem> m, std::uint32_t rows, std::uint32_t cols);

}  // namespace nullity
