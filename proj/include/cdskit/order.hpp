#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cdskit/common.hpp"

namespace cdskit {

class OrderView;

// Built-in total orders on Z. Each one is a comparator; nothing is
// materialized except the ranking of an ExplicitWindow.

/// ... < -1 < 0 < 1 < 2 < ...
struct Natural {};

/// Natural order with -1 and -2 swapped: ... < -3 < -1 < -2 < 0 < 1 < ...
struct Theta1Swap {};

/// Values >= anchor ordered by the binary radical inverse of (v - anchor);
/// values below the anchor keep natural order and precede all of them.
struct VanDerCorput {
  Int anchor = 0;
};

/// The four parity-block orders. OpEp: odds ascending, then evens ascending.
/// OmEm: odds descending, then evens descending. EpOp / EmOm swap the blocks.
enum class TauKind { OpEp, OmEm, EpOp, EmOm };

struct Tau {
  TauKind kind = TauKind::OpEp;
};

/// ... < 0 < 2q+1 < 2 < 2q+3 < 4 < ...   (Alpha{0} is the natural order)
struct Alpha {
  Int q = 0;
};

/// Reverse of Alpha{q}.
struct AlphaReverse {
  Int q = 0;
};

/// Explicit ranking of every integer of a finite window; ranking[0] is the
/// smallest element.
struct ExplicitWindow {
  Interval window;
  std::vector<Int> ranking;
  /// position[v - window.lo] is the index of v in ranking. Filled by
  /// validate(); callers only set window and ranking.
  std::vector<Int> position;
};

/// An order that agrees with `inner` on [floor, inf) and puts everything
/// below floor first, in natural order. Produced by derive_slope_order.
struct Anchored {
  std::shared_ptr<const OrderView> inner;
  Int floor = 0;
};

using OrderSpec = std::variant<Natural, Theta1Swap, VanDerCorput, Tau, Alpha,
                               AlphaReverse, ExplicitWindow, Anchored>;

/// Checks that ranking is a permutation of the window and fills position.
/// Throws DomainError otherwise.
void validate(ExplicitWindow& spec);

/// A total order obtained from a base spec by the shift / flip / reverse /
/// restrict algebra. Immutable; copies share the base.
///
/// Internally the view compares u and v as base(sign*u + offset) versus
/// base(sign*v + offset), then inverts when reversed. A window, when set,
/// is expressed in the view's own coordinates.
class OrderView {
 public:
  OrderView();
  explicit OrderView(OrderSpec spec);

  /// True when u precedes v. Throws ContractError when u == v and
  /// DomainError when either value lies outside the view's window.
  [[nodiscard]] bool less(Int u, Int v) const;

  [[nodiscard]] std::strong_ordering compare(Int u, Int v) const {
    return less(u, v) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// True when v is inside the window (always true for unbounded views).
  [[nodiscard]] bool contains(Int v) const;

  [[nodiscard]] OrderView shifted(Int c) const;
  [[nodiscard]] OrderView flipped() const;
  [[nodiscard]] OrderView reversed() const;
  [[nodiscard]] OrderView restricted(Interval w) const;

  [[nodiscard]] const OrderSpec& base() const { return *base_; }
  /// Net shift c such that the view equals (+-base) + c.
  [[nodiscard]] Int shift() const { return sign_ > 0 ? -offset_ : offset_; }
  [[nodiscard]] bool is_flipped() const { return sign_ < 0; }
  [[nodiscard]] bool is_reversed() const { return reversed_; }
  [[nodiscard]] const std::optional<Interval>& window() const { return window_; }

  /// Human-readable description, e.g. "alpha:3", "-(natural+1)^-1[0,9]".
  [[nodiscard]] std::string describe() const;

 private:
  std::shared_ptr<const OrderSpec> base_;
  Int sign_ = 1;
  Int offset_ = 0;
  bool reversed_ = false;
  std::optional<Interval> window_;
};

[[nodiscard]] OrderView make_order(OrderSpec spec);

// Free-function spellings of the algebra.
[[nodiscard]] inline OrderView shift(const OrderView& v, Int c) { return v.shifted(c); }
[[nodiscard]] inline OrderView flip(const OrderView& v) { return v.flipped(); }
[[nodiscard]] inline OrderView reverse(const OrderView& v) { return v.reversed(); }
[[nodiscard]] inline OrderView restrict(const OrderView& v, Interval w) { return v.restricted(w); }

/// Values of the window listed from smallest to largest in the order.
[[nodiscard]] std::vector<Int> sorted_window(const OrderView& view, Interval window);

/// ranks[i] is the 1-based position of window.lo + i inside window.
[[nodiscard]] std::vector<std::uint32_t> window_ranks(const OrderView& view, Interval window);

/// |{u in window : u <= v}|. O(window length). Throws DomainError if v is
/// outside the window.
[[nodiscard]] Int rank_in_window(const OrderView& view, Int v, Interval window);

/// True when a and b induce the same comparisons on every pair of the window.
[[nodiscard]] bool equal_on(const OrderView& a, const OrderView& b, Interval window);

/// A pair u < v (in the tested order) whose image pair is not ordered the
/// same way.
struct PairWitness {
  Int u = 0;
  Int v = 0;
  Int image_u = 0;
  Int image_v = 0;
};

struct ConditionResult {
  bool holds = true;
  Interval tested;
  std::optional<PairWitness> witness;
};

/// Checks u < v  <=>  u+2 < v+2 for all u, v in [lo, hi-2].
[[nodiscard]] ConditionResult satisfies_shift_two(const OrderView& view, Interval test_window);

/// Checks u < v  <=>  -v-1 < -u-1 for all u, v in the window whose mirror
/// images -u-1 are inside the view's domain.
[[nodiscard]] ConditionResult satisfies_neg_shift_inverse(const OrderView& view,
                                                          Interval test_window);

/// Classification of an order against the family of orders that yield
/// consistent segments in every dimension.
struct FamilyClass {
  enum class Kind { NotInF, Tau, Alpha, AlphaReverse, Inconclusive };
  Kind kind = Kind::Inconclusive;
  TauKind tau = TauKind::OpEp;
  Int q = 0;
  /// For NotInF: "shift-two" or "neg-shift-inverse". For Inconclusive: reason.
  std::string detail;
  std::optional<PairWitness> witness;
  Interval window;

  [[nodiscard]] std::string name() const;
};

[[nodiscard]] FamilyClass classify_family(const OrderView& view, Interval test_window);

[[nodiscard]] std::string tau_name(TauKind kind);

}  // namespace cdskit
