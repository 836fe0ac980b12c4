#include "nullity/finite_ring.hpp"

#include "nullity/error.hpp"

namespace nullity {

GroupRingView::GroupRingView(std::shared_ptr<const GroupRing> ring)
    : ring_(std::move(ring)), size_(ring_->element_count()) {}

std::uint64_t GroupRingView::multiply(std::uint64_t a, std::uint64_t b) const {
  const auto x = ring_->decode(a);
  const auto y = ring_->decode(b);
  return ring_->encode(ring_->multiply(x, y));
}

std::string GroupRingView::label() const { return ring_->coeffs().spec() + "[" + ring_->group().label() + "]"; }

MatrixRing2::MatrixRing2(CoeffRing k) : k_(std::move(k)) {
  const std::uint64_t q = k_.size();
  size_ = q * q * q * q;
}

std::uint64_t MatrixRing2::one() const {
  const std::uint64_t q = k_.size();
  return 1 + q * q * q;  // a00 = a11 = 1
}

std::uint64_t MatrixRing2::multiply(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t q = k_.size();
  RingElem x[4], y[4];
  for (int i = 0; i < 4; ++i) {
    x[i] = static_cast<RingElem>(a % q);
    a /= q;
    y[i] = static_cast<RingElem>(b % q);
    b /= q;
  }
  const RingElem z[4] = {
      k_.add(k_.mul(x[0], y[0]), k_.mul(x[1], y[2])), k_.add(k_.mul(x[0], y[1]), k_.mul(x[1], y[3])),
      k_.add(k_.mul(x[2], y[0]), k_.mul(x[3], y[2])), k_.add(k_.mul(x[2], y[1]), k_.mul(x[3], y[3]))};
  return z[0] + q * (z[1] + q * (z[2] + q * z[3]));
}

TabulatedRing::TabulatedRing(const FiniteRing& source, std::uint64_t max_entries)
    : size_(source.size()), one_(source.one()), label_(source.label()) {
  if (size_ > max_entries / size_)
    throw Error(ErrorCode::cap_exceeded, "multiplication table of " + label_ + " would need " +
                                             std::to_string(size_) + "^2 entries");
  table_.resize(size_ * size_);
  for (std::uint64_t a = 0; a < size_; ++a)
    for (std::uint64_t b = 0; b < size_; ++b) table_[a * size_ + b] = static_cast<std::uint32_t>(source.multiply(a, b));
}

DirectSum::DirectSum(std::shared_ptr<const FiniteRing> first, std::shared_ptr<const FiniteRing> second)
    : first_(std::move(first)), second_(std::move(second)) {}

std::uint64_t DirectSum::multiply(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = second_->size();
  return first_->multiply(a / s, b / s) * s + second_->multiply(a % s, b % s);
}

}  // namespace nullity
