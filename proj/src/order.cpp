#include "cdskit/order.hpp"

#include <algorithm>
#include <numeric>

namespace cdskit {
namespace {

// Bit reversal of a 64-bit word. For k >= 0, reverse_bits(k) / 2^64 is the
// binary radical inverse of k, so comparing reversed words compares the
// van der Corput values exactly.
std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

bool is_even(Int v) { return (v & 1) == 0; }

Int theta1_key(Int v) {
  if (v == -1) return -2;
  if (v == -2) return -1;
  return v;
}

bool tau_less(TauKind kind, Int x, Int y) {
  // Block index first, then value inside the block.
  const bool odd_first = kind == TauKind::OpEp || kind == TauKind::OmEm;
  const bool ascending = kind == TauKind::OpEp || kind == TauKind::EpOp;
  const int bx = (is_even(x) == odd_first) ? 1 : 0;
  const int by = (is_even(y) == odd_first) ? 1 : 0;
  if (bx != by) return bx < by;
  return ascending ? x < y : y < x;
}

// Evens sit at their own value, the odd 2q+1+2k sits between 2k and 2k+2.
Int alpha_key(Int q, Int v) { return is_even(v) ? v : v - 2 * q; }

bool base_less(const OrderSpec& spec, Int x, Int y) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Natural>) {
          return x < y;
        } else if constexpr (std::is_same_v<T, Theta1Swap>) {
          return theta1_key(x) < theta1_key(y);
        } else if constexpr (std::is_same_v<T, VanDerCorput>) {
          const bool xb = x < s.anchor;
          const bool yb = y < s.anchor;
          if (xb || yb) return (xb && yb) ? x < y : xb;
          return reverse_bits(static_cast<std::uint64_t>(x - s.anchor)) <
                 reverse_bits(static_cast<std::uint64_t>(y - s.anchor));
        } else if constexpr (std::is_same_v<T, Tau>) {
          return tau_less(s.kind, x, y);
        } else if constexpr (std::is_same_v<T, Alpha>) {
          return alpha_key(s.q, x) < alpha_key(s.q, y);
        } else if constexpr (std::is_same_v<T, AlphaReverse>) {
          return alpha_key(s.q, y) < alpha_key(s.q, x);
        } else if constexpr (std::is_same_v<T, ExplicitWindow>) {
          for (Int v : {x, y}) {
            if (!s.window.contains(v)) {
              throw DomainError("value " + std::to_string(v) + " is outside the explicit window " +
                                to_string(s.window));
            }
          }
          return s.position[x - s.window.lo] < s.position[y - s.window.lo];
        } else {
          static_assert(std::is_same_v<T, Anchored>);
          const bool xb = x < s.floor;
          const bool yb = y < s.floor;
          if (xb || yb) return (xb && yb) ? x < y : xb;
          return s.inner->less(x, y);
        }
      },
      spec);
}

bool base_contains(const OrderSpec& spec, Int x) {
  if (const auto* e = std::get_if<ExplicitWindow>(&spec)) return e->window.contains(x);
  if (const auto* a = std::get_if<Anchored>(&spec)) return x < a->floor || a->inner->contains(x);
  return true;
}

std::string base_name(const OrderSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Natural>) {
          return "natural";
        } else if constexpr (std::is_same_v<T, Theta1Swap>) {
          return "theta1";
        } else if constexpr (std::is_same_v<T, VanDerCorput>) {
          return "vdc:" + std::to_string(s.anchor);
        } else if constexpr (std::is_same_v<T, Tau>) {
          return "tau:" + tau_name(s.kind);
        } else if constexpr (std::is_same_v<T, Alpha>) {
          return "alpha:" + std::to_string(s.q);
        } else if constexpr (std::is_same_v<T, AlphaReverse>) {
          return "alpha-inv:" + std::to_string(s.q);
        } else if constexpr (std::is_same_v<T, ExplicitWindow>) {
          return "explicit" + to_string(s.window);
        } else {
          return "anchored(" + s.inner->describe() + "," + std::to_string(s.floor) + ")";
        }
      },
      spec);
}

}  // namespace

std::string tau_name(TauKind kind) {
  switch (kind) {
    case TauKind::OpEp: return "o+e+";
    case TauKind::OmEm: return "o-e-";
    case TauKind::EpOp: return "e+o+";
    case TauKind::EmOm: return "e-o-";
  }
  return "?";
}

void validate(ExplicitWindow& spec) {
  if (spec.window.empty()) throw DomainError("explicit window is empty");
  if (static_cast<Int>(spec.ranking.size()) != spec.window.size()) {
    throw DomainError("ranking has " + std::to_string(spec.ranking.size()) +
                      " entries but window " + to_string(spec.window) + " has " +
                      std::to_string(spec.window.size()));
  }
  spec.position.assign(spec.ranking.size(), -1);
  for (std::size_t i = 0; i < spec.ranking.size(); ++i) {
    const Int v = spec.ranking[i];
    if (!spec.window.contains(v)) {
      throw DomainError("ranking value " + std::to_string(v) + " is outside window " +
                        to_string(spec.window));
    }
    Int& slot = spec.position[v - spec.window.lo];
    if (slot != -1) throw DomainError("ranking lists " + std::to_string(v) + " twice");
    slot = static_cast<Int>(i);
  }
}

OrderView::OrderView() : OrderView(Natural{}) {}

OrderView::OrderView(OrderSpec spec) {
  if (auto* e = std::get_if<ExplicitWindow>(&spec); e != nullptr && e->position.empty()) {
    validate(*e);
  }
  if (const auto* a = std::get_if<Anchored>(&spec); a != nullptr && !a->inner) {
    throw ContractError("anchored order without an inner order");
  }
  base_ = std::make_shared<const OrderSpec>(std::move(spec));
}

OrderView make_order(OrderSpec spec) { return OrderView(std::move(spec)); }

bool OrderView::contains(Int v) const {
  if (window_ && !window_->contains(v)) return false;
  return base_contains(*base_, sign_ * v + offset_);
}

bool OrderView::less(Int u, Int v) const {
  if (u == v) {
    throw ContractError("strict order compared with itself at " + std::to_string(u));
  }
  if (window_) {
    for (Int x : {u, v}) {
      if (!window_->contains(x)) {
        throw DomainError("value " + std::to_string(x) + " is outside the order window " +
                          to_string(*window_));
      }
    }
  }
  const bool r = base_less(*base_, sign_ * u + offset_, sign_ * v + offset_);
  return reversed_ ? !r : r;
}

OrderView OrderView::shifted(Int c) const {
  OrderView out = *this;
  out.offset_ = offset_ - sign_ * c;
  if (window_) out.window_ = Interval{window_->lo + c, window_->hi + c};
  return out;
}

OrderView OrderView::flipped() const {
  OrderView out = *this;
  out.sign_ = -sign_;
  if (window_) out.window_ = Interval{-window_->hi, -window_->lo};
  return out;
}

OrderView OrderView::reversed() const {
  OrderView out = *this;
  out.reversed_ = !reversed_;
  return out;
}

OrderView OrderView::restricted(Interval w) const {
  OrderView out = *this;
  if (window_) {
    out.window_ = Interval{std::max(window_->lo, w.lo), std::min(window_->hi, w.hi)};
  } else {
    out.window_ = w;
  }
  return out;
}

std::string OrderView::describe() const {
  std::string s = base_name(*base_);
  if (sign_ < 0) s = "-(" + s + ")";
  if (const Int c = shift(); c != 0) {
    s = "(" + s + (c > 0 ? "+" : "") + std::to_string(c) + ")";
  }
  if (reversed_) s += "^-1";
  if (window_) s += to_string(*window_);
  return s;
}

std::vector<Int> sorted_window(const OrderView& view, Interval window) {
  std::vector<Int> values(static_cast<std::size_t>(window.size()));
  std::iota(values.begin(), values.end(), window.lo);
  std::sort(values.begin(), values.end(), [&](Int a, Int b) { return view.less(a, b); });
  return values;
}

std::vector<std::uint32_t> window_ranks(const OrderView& view, Interval window) {
  const auto sorted = sorted_window(view, window);
  std::vector<std::uint32_t> ranks(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ranks[static_cast<std::size_t>(sorted[i] - window.lo)] = static_cast<std::uint32_t>(i + 1);
  }
  return ranks;
}

Int rank_in_window(const OrderView& view, Int v, Interval window) {
  if (!window.contains(v)) {
    throw DomainError("value " + std::to_string(v) + " is outside window " + to_string(window));
  }
  Int rank = 1;
  for (Int u = window.lo; u <= window.hi; ++u) {
    if (u != v && view.less(u, v)) ++rank;
  }
  return rank;
}

bool equal_on(const OrderView& a, const OrderView& b, Interval window) {
  return window_ranks(a, window) == window_ranks(b, window);
}

ConditionResult satisfies_shift_two(const OrderView& view, Interval w) {
  if (w.size() < 4) throw ContractError("shift-two check needs a window of length >= 4");
  ConditionResult result{true, w, std::nullopt};
  const auto r = window_ranks(view, w);
  auto rank = [&](Int v) { return r[static_cast<std::size_t>(v - w.lo)]; };
  for (Int u = w.lo; u <= w.hi - 2; ++u) {
    for (Int v = u + 1; v <= w.hi - 2; ++v) {
      const bool before = rank(u) < rank(v);
      const bool after = rank(u + 2) < rank(v + 2);
      if (before != after) {
        const Int lo = before ? u : v;
        const Int hi = before ? v : u;
        result.holds = false;
        result.witness = PairWitness{lo, hi, lo + 2, hi + 2};
        return result;
      }
    }
  }
  return result;
}

ConditionResult satisfies_neg_shift_inverse(const OrderView& view, Interval w) {
  ConditionResult result{true, w, std::nullopt};
  std::vector<Int> tested;
  for (Int u = w.lo; u <= w.hi; ++u) {
    if (view.contains(u) && view.contains(-u - 1)) tested.push_back(u);
  }
  for (std::size_t i = 0; i < tested.size(); ++i) {
    for (std::size_t j = i + 1; j < tested.size(); ++j) {
      const Int u = tested[i];
      const Int v = tested[j];
      const bool before = view.less(u, v);
      const bool mirrored = view.less(-v - 1, -u - 1);
      if (before != mirrored) {
        const Int lo = before ? u : v;
        const Int hi = before ? v : u;
        result.holds = false;
        result.witness = PairWitness{lo, hi, -hi - 1, -lo - 1};
        return result;
      }
    }
  }
  return result;
}

std::string FamilyClass::name() const {
  switch (kind) {
    case Kind::NotInF: return "NotInF";
    case Kind::Tau: return "Tau(" + tau_name(tau) + ")";
    case Kind::Alpha: return "Alpha(" + std::to_string(q) + ")";
    case Kind::AlphaReverse: return "AlphaReverse(" + std::to_string(q) + ")";
    case Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

FamilyClass classify_family(const OrderView& view, Interval w) {
  FamilyClass out;
  out.window = w;
  if (w.size() < 8 || !w.contains(-1) || !w.contains(3)) {
    out.kind = FamilyClass::Kind::Inconclusive;
    out.detail = "window " + to_string(w) + " must have length >= 8 and contain [-1,3]";
    return out;
  }
  if (auto c = satisfies_shift_two(view, w); !c.holds) {
    out.kind = FamilyClass::Kind::NotInF;
    out.detail = "shift-two";
    out.witness = c.witness;
    return out;
  }
  if (auto c = satisfies_neg_shift_inverse(view, w); !c.holds) {
    out.kind = FamilyClass::Kind::NotInF;
    out.detail = "neg-shift-inverse";
    out.witness = c.witness;
    return out;
  }

  // With both conditions, evens and odds are each monotone and 0 has an odd
  // neighbour 2q+1 between itself and 2 unless two numbers of the same
  // parity are adjacent (the four tau orders).
  const bool increasing = view.less(0, 2);
  std::vector<Int> between;
  for (Int o = w.lo; o <= w.hi; ++o) {
    if (is_even(o)) continue;
    const bool inside = increasing ? (view.less(0, o) && view.less(o, 2))
                                   : (view.less(2, o) && view.less(o, 0));
    if (inside) between.push_back(o);
  }
  if (between.size() == 1 && w.contains(between[0] - 2) && w.contains(between[0] + 2)) {
    const Int q = (between[0] - 1) / 2;
    const OrderView candidate =
        increasing ? make_order(Alpha{q}) : make_order(AlphaReverse{q});
    if (equal_on(view, candidate, w)) {
      out.kind = increasing ? FamilyClass::Kind::Alpha : FamilyClass::Kind::AlphaReverse;
      out.q = q;
      return out;
    }
  }
  if (between.empty()) {
    for (TauKind k : {TauKind::OpEp, TauKind::OmEm, TauKind::EpOp, TauKind::EmOm}) {
      if (equal_on(view, make_order(Tau{k}), w)) {
        out.kind = FamilyClass::Kind::Tau;
        out.tau = k;
        return out;
      }
    }
  }
  out.kind = FamilyClass::Kind::Inconclusive;
  out.detail = "conditions hold on " + to_string(w) +
               " but the odd neighbour of 0 is not determined inside the window";
  return out;
}

}  // namespace cdskit
