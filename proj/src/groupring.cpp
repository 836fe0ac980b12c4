#include "nullity/groupring.hpp"

#include "nullity/error.hpp"

#include <algorithm>

namespace nullity {

const char* to_string(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::twosided: return "twosided";
  }
  return "?";
}

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  if (text == "twosided") return Side::twosided;
  throw Error(ErrorCode::parse, "side must be left, right or twosided, got '" + std::string(text) + "'");
}

GroupRing::GroupRing(CoeffRing coeffs, CayleyGroup group) : k_(std::move(coeffs)), g_(std::move(group)) {
  const std::uint32_t n = g_.order();
  right_pos_.resize(std::size_t{n} * n);
  left_pos_.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      right_pos_[std::size_t{i} * n + j] = g_.mul(g_.inverse(j), i);
      left_pos_[std::size_t{i} * n + j] = g_.mul(i, g_.inverse(j));
    }
}

GroupRingElement GroupRing::one() const {
  auto e = zero();
  e[0] = 1;
  return e;
}

void GroupRing::check_dim(std::size_t len) const {
  if (len != dim())
    throw Error(ErrorCode::invalid_argument,
                "coefficient vector has length " + std::to_string(len) + ", group order is " + std::to_string(dim()));
}

void GroupRing::decode(std::uint64_t index, std::span<RingElem> out) const {
  check_dim(out.size());
  const std::uint64_t q = k_.size();
  for (auto& c : out) {
    c = static_cast<RingElem>(index % q);
    index /= q;
  }
}

GroupRingElement GroupRing::decode(std::uint64_t index) const {
  GroupRingElement x(dim());
  decode(index, x);
  return x;
}

std::uint64_t GroupRing::encode(std::span<const RingElem> x) const {
  check_dim(x.size());
  std::uint64_t index = 0;
  for (std::size_t i = x.size(); i-- > 0;) index = index * k_.size() + x[i];
  return index;
}

std::uint64_t GroupRing::element_count() const {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < dim(); ++i) {
    if (count > ~std::uint64_t{0} / k_.size())
      throw Error(ErrorCode::cap_exceeded, "|K|^n overflows 64 bits for " + k_.spec() + "[" + g_.label() + "]");
    count *= k_.size();
  }
  return count;
}

void GroupRing::multiply_into(std::span<const RingElem> a, std::span<const RingElem> b, std::span<RingElem> out) const {
  check_dim(a.size());
  check_dim(b.size());
  check_dim(out.size());
  std::fill(out.begin(), out.end(), 0);
  const std::uint32_t n = dim();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      auto& slot = out[g_.mul(i, j)];
      slot = k_.add(slot, k_.mul(a[i], b[j]));
    }
  }
}

GroupRingElement GroupRing::multiply(std::span<const RingElem> a, std::span<const RingElem> b) const {
  GroupRingElement out(dim());
  multiply_into(a, b, out);
  return out;
}

RepMatrix GroupRing::regular_matrix(std::span<const RingElem> x, MapSide side) const {
  check_dim(x.size());
  const std::uint32_t n = dim();
  const auto& pos = side == MapSide::right ? right_pos_ : left_pos_;
  RepMatrix m;
  m.rows = m.cols = n;
  m.side = side;
  m.entries.resize(std::size_t{n} * n);
  for (std::size_t e = 0; e < m.entries.size(); ++e) m.entries[e] = x[pos[e]];
  return m;
}

std::uint32_t rank_in_place(const CoeffRing& k, std::span<RingElem> m, std::uint32_t rows, std::uint32_t cols) {
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < cols && rank < rows; ++c) {
    std::uint32_t pivot = rank;
    while (pivot < rows && m[std::size_t{pivot} * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    RingElem* prow = &m[std::size_t{rank} * cols];
    if (pivot != rank) std::swap_ranges(prow + c, prow + cols, &m[std::size_t{pivot} * cols + c]);
    const RingElem scale = k.inv(prow[c]);
    for (std::uint32_t j = c; j < cols; ++j) prow[j] = k.mul(scale, prow[j]);
    for (std::uint32_t r = rank + 1; r < rows; ++r) {
      RingElem* row = &m[std::size_t{r} * cols];
      if (row[c] == 0) continue;
      const RingElem f = k.neg(row[c]);
      for (std::uint32_t j = c; j < cols; ++j) row[j] = k.add(row[j], k.mul(f, prow[j]));
    }
    ++rank;
  }
  return rank;
}

std::uint32_t GroupRing::annihilator_dimension(std::span<const RingElem> x, Side side) const {
  check_dim(x.size());
  if (!k_.is_field()) throw Error(ErrorCode::domain, "rank path needs a field; " + k_.spec() + " is not one");
  const std::uint32_t n = dim();
  const std::size_t block = std::size_t{n} * n;
  std::vector<RingElem> m(side == Side::twosided ? 2 * block : block);
  // Ann_l is the kernel of a -> a x, Ann_r the kernel of a -> x a.
  if (side != Side::right)
    for (std::size_t e = 0; e < block; ++e) m[e] = x[right_pos_[e]];
  if (side != Side::left) {
    const std::size_t off = side == Side::twosided ? block : 0;
    for (std::size_t e = 0; e < block; ++e) m[off + e] = x[left_pos_[e]];
  }
  const auto rows = static_cast<std::uint32_t>(m.size() / n);
  return n - rank_in_place(k_, m, rows, n);
}

std::uint64_t GroupRing::annihilator_size_enumerated(std::span<const RingElem> x, Side side,
                                                     std::uint64_t max_elements) const {
  check_dim(x.size());
  const std::uint64_t total = element_count();
  if (total > max_elements)
    throw Error(ErrorCode::cap_exceeded, "enumerating " + std::to_string(total) + " candidates exceeds the element cap " +
                                             std::to_string(max_elements));
  GroupRingElement a(dim()), prod(dim());
  auto is_zero = [](const GroupRingElement& v) { return std::all_of(v.begin(), v.end(), [](RingElem c) { return c == 0; }); };
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, a);
    bool ok = true;
    if (side != Side::right) {
      multiply_into(a, x, prod);
      ok = is_zero(prod);
    }
    if (ok && side != Side::left) {
      multiply_into(x, a, prod);
      ok = is_zero(prod);
    }
    count += ok ? 1 : 0;
  }
  return count;
}

BigInt GroupRing::annihilator_size(std::span<const RingElem> x, Side side, std::uint64_t max_elements) const {
  if (!k_.is_field()) return annihilator_size_enumerated(x, side, max_elements);
  return big_pow(BigInt(k_.size()), annihilator_dimension(x, side));
}

}  // namespace nullity
