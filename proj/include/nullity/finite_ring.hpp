#pragma once

#include "nullity/coeffring.hpp"
#include "nullity/groupring.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nullity {

/// A finite ring with elements indexed 0..size()-1, index 0 being zero.
/// Used by the naive pair counter, which must not depend on any linear
/// algebra. Implementations are immutable and safe to share across threads.
class FiniteRing {
 public:
  virtual ~FiniteRing() = default;
  [[nodiscard]] virtual std::uint64_t size() const = 0;
  [[nodiscard]] virtual std::uint64_t one() const = 0;
  [[nodiscard]] virtual std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const = 0;
  [[nodiscard]] virtual std::string label() const = 0;
};

/// K[G] with the group ring's own element indexing.
class GroupRingView final : public FiniteRing {
 public:
  explicit GroupRingView(std::shared_ptr<const GroupRing> ring);
  [[nodiscard]] std::uint64_t size() const override { return size_; }
  [[nodiscard]] std::uint64_t one() const override { return 1; }
  [[nodiscard]] std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  [[nodiscard]] std::string label() const override;

 private:
  std::shared_ptr<const GroupRing> ring_;
  std::uint64_t size_;
};

/// M_2(K): index digits base |K| are (a00, a01, a10, a11), a00 least
/// significant.
class MatrixRing2 final : public FiniteRing {
 public:
  explicit MatrixRing2(CoeffRing k);
  [[nodiscard]] std::uint64_t size() const override { return size_; }
  [[nodiscard]] std::uint64_t one() const override;
  [[nodiscard]] std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  [[nodiscard]] std::string label() const override { return "M2(" + k_.spec() + ")"; }

 private:
  CoeffRing k_;
  std::uint64_t size_;
};

/// Full multiplication table of another ring (size^2 entries).
class TabulatedRing final : public FiniteRing {
 public:
  /// Throws cap_exceeded when size^2 > max_entries.
  TabulatedRing(const FiniteRing& source, std::uint64_t max_entries = std::uint64_t{1} << 24);
  [[nodiscard]] std::uint64_t size() const override { return size_; }
  [[nodiscard]] std::uint64_t one() const override { return one_; }
  [[nodiscard]] std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override {
    return table_[a * size_ + b];
  }
  [[nodiscard]] std::string label() const override { return label_; }

 private:
  std::uint64_t size_;
  std::uint64_t one_;
  std::string label_;
  std::vector<std::uint32_t> table_;
};

/// R1 (+) R2 with componentwise operations; index = i1 * |R2| + i2.
class DirectSum final : public FiniteRing {
 public:
  DirectSum(std::shared_ptr<const FiniteRing> first, std::shared_ptr<const FiniteRing> second);
  [[nodiscard]] std::uint64_t size() const override { return first_->size() * second_->size(); }
  [[nodiscard]] std::uint64_t one() const override { return first_->one() * second_->size() + second_->one(); }
  [[nodiscard]] std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
  [[nodiscard]] std::string label() const override { return first_->label() + " (+) " + second_->label(); }

 private:
  std::shared_ptr<const FiniteRing> first_;
  std::shared_ptr<const FiniteRing> second_;
};

}  // namespace nullity
