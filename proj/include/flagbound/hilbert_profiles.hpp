#pragma once

#include <cstdint>
#include <vector>

#include "flagbound/exact_arith.hpp"

namespace flagbound {

/// Eventually constant Hilbert function h(0), ..., h(T) of a zero- or
/// one-dimensional section; h(i) = stableValue for every i >= T.
///
/// Invariants: h(0) = 1, h nondecreasing, h <= stableValue, h(T) = stableValue.
class HilbertProfile {
 public:
  HilbertProfile(std::int64_t stableValue, std::vector<std::int64_t> values);

  /// min{deg, i*N + 1}, stored up to its first saturated index.
  static HilbertProfile extremal(long N, std::int64_t deg);

  std::int64_t stable_value() const { return stable_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t at(std::int64_t i) const;
  /// Smallest index with h(i) = stableValue.
  std::int64_t saturation_index() const;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;

 private:
  std::int64_t stable_;
  std::vector<std::int64_t> values_;
};

/// delta_1, ..., delta_K (zero beyond K). delta_0 is 0 by convention.
class DeltaSequence {
 public:
  DeltaSequence() = default;
  explicit DeltaSequence(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  /// delta_i for i >= 0.
  std::int64_t at(std::int64_t i) const;
  Integer sum() const;
  /// Largest i with delta_i != 0, or 0 if all vanish.
  std::int64_t support_end() const;
  bool all_zero() const { return support_end() == 0; }

  /// Throws ValidationError unless delta_i = 0 for all i >= s - r + 2.
  void validate_vanishing(long r, std::int64_t s) const;

 private:
  std::vector<std::int64_t> values_;
};

/// sum_{i>=1} (stable - h(i)).
Integer genus_sum(const HilbertProfile& profile);

/// Curve-section profile h1(i) = sum_{j=0}^{i} (h0(j) + delta_j) for
/// i = 0..upTo. It grows without bound, so only a prefix is returned.
std::vector<std::int64_t> accumulate_surface_section(const HilbertProfile& pointProfile, const DeltaSequence& deltas,
                                                     std::int64_t upTo);

/// pi = sum (s - h0(i)) - sum delta_i. Throws InconsistentDataError if negative.
Integer sectional_genus_from_ciliberto(const HilbertProfile& pointProfile, const DeltaSequence& deltas);

}  // namespace flagbound
