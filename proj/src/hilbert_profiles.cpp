#include "flagbound/hilbert_profiles.hpp"

#include <string>

#include "flagbound/castelnuovo.hpp"
#include "flagbound/errors.hpp"

namespace flagbound {

namespace {

std::string echo(const std::vector<std::int64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + "]";
}

}  // namespace

HilbertProfile::HilbertProfile(std::int64_t stableValue, std::vector<std::int64_t> values)
    : stable_(stableValue), values_(std::move(values)) {
  const std::string context = " (stable=" + std::to_string(stable_) + ", values=" + echo(values_) + ")";
  if (stable_ < 1) {
    throw ValidationError("profile stable value must be positive" + context);
  }
  if (values_.empty() || values_.front() != 1) {
    throw ValidationError("profile must start with h(0) = 1" + context);
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < values_[i - 1]) {
      throw ValidationError("profile is not monotone at index " + std::to_string(i) + context);
    }
  }
  if (values_.back() > stable_) {
    throw ValidationError("profile exceeds its stable value" + context);
  }
  if (values_.back() != stable_) {
    throw ValidationError("profile does not saturate at its stable value" + context);
  }
}

HilbertProfile HilbertProfile::extremal(long N, std::int64_t deg) {
  std::vector<std::int64_t> values;
  for (std::int64_t i = 0;; ++i) {
    values.push_back(min_point_hilbert(N, deg, i));
    if (values.back() == deg) {
      break;
    }
  }
  return HilbertProfile(deg, std::move(values));
}

std::int64_t HilbertProfile::at(std::int64_t i) const {
  if (i < 0) {
    throw ValidationError("profile index must be >= 0, got " + std::to_string(i));
  }
  return i < static_cast<std::int64_t>(values_.size()) ? values_[static_cast<std::size_t>(i)] : stable_;
}

std::int64_t HilbertProfile::saturation_index() const {
  std::int64_t i = 0;
  while (values_[static_cast<std::size_t>(i)] != stable_) {
    ++i;
  }
  return i;
}

DeltaSequence::DeltaSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (const auto value : values_) {
    if (value < 0) {
      throw ValidationError("delta entries must be >= 0, got " + echo(values_));
    }
  }
}

std::int64_t DeltaSequence::at(std::int64_t i) const {
  if (i <= 0 || i > static_cast<std::int64_t>(values_.size())) {
    return 0;
  }
  return values_[static_cast<std::size_t>(i - 1)];
}

Integer DeltaSequence::sum() const {
  Integer total = 0;
  for (const auto value : values_) {
    total += static_cast<long>(value);
  }
  return total;
}

std::int64_t DeltaSequence::support_end() const {
  for (std::size_t i = values_.size(); i > 0; --i) {
    if (values_[i - 1] != 0) {
      return static_cast<std::int64_t>(i);
    }
  }
  return 0;
}

void DeltaSequence::validate_vanishing(long r, std::int64_t s) const {
  const std::int64_t threshold = s - r + 2;
  const std::int64_t end = support_end();
  if (end != 0 && end >= threshold) {
    throw ValidationError("delta_" + std::to_string(end) + " must vanish for indices >= s-r+2 = " +
                          std::to_string(threshold) + " (deltas=" + echo(values_) + ")");
  }
}

Integer genus_sum(const HilbertProfile& profile) {
  Integer total = 0;
  for (std::size_t i = 1; i < profile.values().size(); ++i) {
    total += static_cast<long>(profile.stable_value() - profile.values()[i]);
  }
  return total;
}

std::vector<std::int64_t> accumulate_surface_section(const HilbertProfile& pointProfile, const DeltaSequence& deltas,
                                                     std::int64_t upTo) {
  if (pointProfile.stable_value() < 2) {
    throw ValidationError("surface section needs a point profile of degree >= 2, got " +
                          std::to_string(pointProfile.stable_value()));
  }
  if (upTo < 0) {
    throw ValidationError("accumulation length must be >= 0, got " + std::to_string(upTo));
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(upTo) + 1);
  std::int64_t running = 0;
  for (std::int64_t j = 0; j <= upTo; ++j) {
    running += pointProfile.at(j) + deltas.at(j);
    out.push_back(running);
  }
  return out;
}

Integer sectional_genus_from_ciliberto(const HilbertProfile& pointProfile, const DeltaSequence& deltas) {
  const Integer deficiency = genus_sum(pointProfile);
  const Integer deltaSum = deltas.sum();
  if (deltaSum > deficiency) {
    throw InconsistentDataError("sum of deltas " + deltaSum.get_str() + " exceeds the point deficiency " +
                                deficiency.get_str() + "; sectional genus would be negative");
  }
  return deficiency - deltaSum;
}

}  // namespace flagbound
