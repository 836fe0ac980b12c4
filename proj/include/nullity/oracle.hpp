#pragma once

#include "nullity/finite_ring.hpp"
#include "nullity/groupring.hpp"
#include "nullity/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nullity {

struct Limits {
  std::uint64_t max_elements = std::uint64_t{1} << 22;
  std::uint64_t max_pairs = std::uint64_t{1} << 20;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/// counts[k] = number of x in K[G] with |Ann_side(x)| = |K|^k, k = 0..n.
struct AnnihilatorHistogram {
  std::string group;
  std::string coeff;
  Side side = Side::left;
  std::uint64_t base = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint32_t dim() const { return static_cast<std::uint32_t>(counts.size() - 1); }
  [[nodiscard]] std::vector<BigInt> ann_sizes() const;
  /// Sum of |Ann(x)| over all x.
  [[nodiscard]] BigInt annihilator_sum() const;
  [[nodiscard]] BigInt total() const;
  [[nodiscard]] std::uint64_t units() const { return counts.front(); }
  /// annihilator_sum / |K|^{2n}, reduced.
  [[nodiscard]] BigRational probability() const;
};

/// One rank computation per element of K[G]; K must be a field. The result
/// does not depend on limits.workers.
AnnihilatorHistogram annihilator_histogram(const GroupRing& ring, Side side, const Limits& limits = {});

/// Pr over uniform pairs (a, b): ab = 0 for left/right, ab = 0 and ba = 0
/// for twosided. Fields use the histogram, Z/nZ the naive pair counter.
BigRational nullity_probability(const GroupRing& ring, Side side, const Limits& limits = {});

enum class Relation { product_zero, both_products_zero };

/// Literal double loop over all pairs; independent of any linear algebra.
std::uint64_t pair_count_naive(const FiniteRing& ring, Relation relation, const Limits& limits = {});
std::uint64_t pair_count_naive(const GroupRing& ring, Relation relation, const Limits& limits = {});

/// Enumeration census for any finite ring: annihilator size -> element count.
std::map<std::uint64_t, std::uint64_t> annihilator_census(const FiniteRing& ring, Side side, const Limits& limits = {});

/// Number of x having some y with xy = 1 (by enumeration).
std::uint64_t unit_count_naive(const FiniteRing& ring, const Limits& limits = {});

/// Pr from an enumeration census: sum(size * count) / |R|^2.
BigRational census_probability(const std::map<std::uint64_t, std::uint64_t>& census, std::uint64_t ring_size);

}  // namespace nullity
