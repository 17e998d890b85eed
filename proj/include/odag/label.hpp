#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "odag/error.hpp"

namespace odag {

/// A vertex label: a finite 64-bit integer or +infinity.
///
/// Infinity is a separate state rather than a reserved integer, so
/// INT64_MAX is an ordinary finite value that sorts below infinity.
/// Infinity compares equal to itself.
class Label {
 public:
  constexpr Label() noexcept = default;  // infinity
  constexpr Label(std::int64_t value) noexcept : finite_(true), value_(value) {}  // NOLINT(implicit)

  static constexpr Label infinity() noexcept { return Label{}; }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }

  std::int64_t value() const {
    if (!finite_) throw Error(ErrorCode::NonFiniteLabel, "value() of an infinite label");
    return value_;
  }

  friend constexpr bool operator==(const Label& a, const Label& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("inf"); }

  friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.to_string(); }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

/// Order-reversed view of a Label: `NegatedLabel(a) < NegatedLabel(b)` iff `b < a`.
///
/// Stands in for multiplying every label by -1 without overflowing at
/// INT64_MIN; NegatedLabel(infinity) behaves as -infinity.
struct NegatedLabel {
  Label inner;

  friend constexpr bool operator==(const NegatedLabel&, const NegatedLabel&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const NegatedLabel& a, const NegatedLabel& b) noexcept {
    return b.inner <=> a.inner;
  }
};

constexpr NegatedLabel negate(Label l) noexcept { return NegatedLabel{l}; }
constexpr Label negate(NegatedLabel l) noexcept { return l.inner; }

}  // namespace odag
