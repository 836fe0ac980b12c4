#include "nullity/oracle.hpp"

#include "nullity/error.hpp"
#include "nullity/parallel.hpp"

#include <algorithm>
#include <memory>

namespace nullity {

namespace {

void require_pairs(std::uint64_t size, const Limits& limits, const std::string& what) {
  if (size > 0xffffffffULL || size * size > limits.max_pairs)
    throw Error(ErrorCode::cap_exceeded, what + " has " + std::to_string(size) + "^2 pairs, above the pair cap " +
                                             std::to_string(limits.max_pairs));
}

template <typename Map>
void merge_into(Map& into, const Map& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

}  // namespace

std::vector<BigInt> AnnihilatorHistogram::ann_sizes() const {
  std::vector<BigInt> sizes;
  BigInt s = 1;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    sizes.push_back(s);
    s *= base;
  }
  return sizes;
}

BigInt AnnihilatorHistogram::annihilator_sum() const {
  BigInt sum = 0;
  const auto sizes = ann_sizes();
  for (std::size_t k = 0; k < counts.size(); ++k) sum += sizes[k] * counts[k];
  return sum;
}

BigInt AnnihilatorHistogram::total() const {
  BigInt t = 0;
  for (auto c : counts) t += c;
  return t;
}

BigRational AnnihilatorHistogram::probability() const {
  return BigRational(annihilator_sum(), big_pow(BigInt(base), 2ULL * dim()));
}

AnnihilatorHistogram annihilator_histogram(const GroupRing& ring, Side side, const Limits& limits) {
  const auto& k = ring.coeffs();
  if (!k.is_field())
    throw Error(ErrorCode::domain, "annihilator histogram needs field coefficients; " + k.spec() +
                                       " is not a field (use the pair counter)");
  const std::uint32_t n = ring.dim();
  const std::uint64_t total = ring.element_count();
  if (total > limits.max_elements)
    throw Error(ErrorCode::cap_exceeded, "|K|^n = " + std::to_string(k.size()) + "^" + std::to_string(n) + " = " +
                                             std::to_string(total) + " elements exceeds the element cap " +
                                             std::to_string(limits.max_elements) + " (raise --max-elements)");
  const std::size_t block = std::size_t{n} * n;
  const bool use_right_map = side != Side::right;  // a -> a x, kernel Ann_l
  const bool use_left_map = side != Side::left;    // a -> x a, kernel Ann_r
  const auto rows = static_cast<std::uint32_t>((use_right_map && use_left_map ? 2 : 1) * n);
  const auto& rpos = ring.right_positions();
  const auto& lpos = ring.left_positions();
  const std::uint32_t q = k.size();

  auto locals = parallel_chunks<std::vector<std::uint64_t>>(
      total, limits.workers, std::vector<std::uint64_t>(n + 1, 0),
      [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
        std::vector<RingElem> x(n), m(std::size_t{rows} * n);
        ring.decode(begin, x);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          std::size_t off = 0;
          if (use_right_map) {
            for (std::size_t e = 0; e < block; ++e) m[e] = x[rpos[e]];
            off = block;
          }
          if (use_left_map)
            for (std::size_t e = 0; e < block; ++e) m[off + e] = x[lpos[e]];
          counts[n - rank_in_place(k, m, rows, n)] += 1;
          // odometer increment
          for (std::uint32_t i = 0; i < n; ++i) {
            if (++x[i] < q) break;
            x[i] = 0;
          }
        }
      });

  AnnihilatorHistogram h;
  h.group = ring.group().label();
  h.coeff = k.spec();
  h.side = side;
  h.base = q;
  h.counts.assign(n + 1, 0);
  for (const auto& local : locals)
    for (std::uint32_t i = 0; i <= n; ++i) h.counts[i] += local[i];
  return h;
}

std::uint64_t pair_count_naive(const FiniteRing& ring, Relation relation, const Limits& limits) {
  const std::uint64_t size = ring.size();
  require_pairs(size, limits, ring.label());
  auto locals = parallel_chunks<std::uint64_t>(
      size, limits.workers, 0,
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& count) {
        for (std::uint64_t a = begin; a < end; ++a)
          for (std::uint64_t b = 0; b < size; ++b) {
            if (ring.multiply(a, b) != 0) continue;
            if (relation == Relation::both_products_zero && ring.multiply(b, a) != 0) continue;
            ++count;
          }
      },
      64);
  std::uint64_t total = 0;
  for (auto c : locals) total += c;
  return total;
}

std::uint64_t pair_count_naive(const GroupRing& ring, Relation relation, const Limits& limits) {
  const std::uint64_t size = ring.element_count();
  require_pairs(size, limits, ring.coeffs().spec() + "[" + ring.group().label() + "]");
  GroupRingView view(std::make_shared<const GroupRing>(ring));
  // Tabulate when affordable: products are then single lookups.
  if (size <= 1024) return pair_count_naive(TabulatedRing(view), relation, limits);
  return pair_count_naive(view, relation, limits);
}

std::map<std::uint64_t, std::uint64_t> annihilator_census(const FiniteRing& ring, Side side, const Limits& limits) {
  const std::uint64_t size = ring.size();
  require_pairs(size, limits, ring.label());
  using Census = std::map<std::uint64_t, std::uint64_t>;
  auto locals = parallel_chunks<Census>(
      size, limits.workers, Census{},
      [&](std::uint64_t begin, std::uint64_t end, Census& census) {
        for (std::uint64_t x = begin; x < end; ++x) {
          std::uint64_t ann = 0;
          for (std::uint64_t a = 0; a < size; ++a) {
            const bool l = side == Side::right || ring.multiply(a, x) == 0;
            const bool r = side == Side::left || ring.multiply(x, a) == 0;
            ann += (l && r) ? 1 : 0;
          }
          census[ann] += 1;
        }
      },
      64);
  Census merged;
  for (const auto& c : locals) merge_into(merged, c);
  return merged;
}

std::uint64_t unit_count_naive(const FiniteRing& ring, const Limits& limits) {
  const std::uint64_t size = ring.size();
  require_pairs(size, limits, ring.label());
  const std::uint64_t one = ring.one();
  auto locals = parallel_chunks<std::uint64_t>(
      size, limits.workers, 0,
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& count) {
        for (std::uint64_t x = begin; x < end; ++x)
          for (std::uint64_t y = 0; y < size; ++y)
            if (ring.multiply(x, y) == one) {
              ++count;
              break;
            }
      },
      64);
  std::uint64_t total = 0;
  for (auto c : locals) total += c;
  return total;
}

BigRational census_probability(const std::map<std::uint64_t, std::uint64_t>& census, std::uint64_t ring_size) {
  BigInt sum = 0;
  for (const auto& [ann, count] : census) sum += BigInt(ann) * count;
  return BigRational(sum, BigInt(ring_size) * ring_size);
}

BigRational nullity_probability(const GroupRing& ring, Side side, const Limits& limits) {
  if (ring.coeffs().is_field()) return annihilator_histogram(ring, side, limits).probability();
  const auto relation = side == Side::twosided ? Relation::both_products_zero : Relation::product_zero;
  const BigInt size = ring.element_count();
  return BigRational(BigInt(pair_count_naive(ring, relation, limits)), size * size);
}

}  // namespace nullity
