#include "cdskit/systems.hpp"

namespace cdskit {

SegmentSystem::SegmentSystem(SystemKind kind, int dim) : kind_(std::move(kind)), dim_(dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw ContractError("unsupported dimension " + std::to_string(dim));
  }
  if (const auto* c = std::get_if<TocCdr>(&kind_)) {
    require_same_dim(c->p.dim(), dim, "TocCdr apex");
  }
  if (const auto* c = std::get_if<PerSlopeCdr>(&kind_)) {
    require_same_dim(c->p.dim(), dim, "PerSlopeCdr apex");
    for (const Slope& t : all_slopes(dim)) {
      if (!c->orders.contains(t)) {
        throw ContractError("per-slope system is missing slope " + to_string(t));
      }
    }
  }
}

SegmentSystem make_system(SystemKind kind, int dim) { return SegmentSystem(std::move(kind), dim); }

std::optional<Point> SegmentSystem::apex() const {
  if (const auto* c = std::get_if<TocCdr>(&kind_)) return c->p;
  if (const auto* c = std::get_if<PerSlopeCdr>(&kind_)) return c->p;
  return std::nullopt;
}

bool SegmentSystem::in_domain(const Point& p, const Point& q) const {
  if (p.dim() != dim_ || q.dim() != dim_) return false;
  const auto a = apex();
  return !a || *a == p;
}

std::string SegmentSystem::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, TocCdr>) {
          return "toc-cdr(" + k.theta.describe() + "," + to_string(k.p) + ")";
        } else if constexpr (std::is_same_v<T, TocCds>) {
          return "toc-cds(" + k.theta.describe() + ")";
        } else if constexpr (std::is_same_v<T, PerSlopeCdr>) {
          return "per-slope-cdr(" + to_string(k.p) + ")";
        } else if constexpr (std::is_same_v<T, BoundingBox>) {
          return "bounding-box";
        } else {
          return "rounding";
        }
      },
      kind_);
}

DigitalPath path_of(const SegmentSystem& system, const Point& p, const Point& q) {
  if (!system.in_domain(p, q)) {
    throw DomainError("pair " + to_string(p) + "," + to_string(q) + " is outside the domain of " +
                      system.name());
  }
  return std::visit(
      [&](const auto& k) -> DigitalPath {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, TocCdr>) {
          return cdr_segment(k.theta, p, q);
        } else if constexpr (std::is_same_v<T, TocCds>) {
          return cds_segment(k.theta, p, q);
        } else if constexpr (std::is_same_v<T, PerSlopeCdr>) {
          const Slope t = slope_of(p, q);
          return build_segment(k.orders.at(t), p, q, t);
        } else if constexpr (std::is_same_v<T, BoundingBox>) {
          return bounding_box_segment(p, q);
        } else {
          return rounding_segment(p, q);
        }
      },
      system.kind());
}

std::map<Slope, OrderView> derived_orders(const OrderView& theta, const Point& p) {
  std::map<Slope, OrderView> out;
  for (const Slope& t : all_slopes(p.dim())) out.emplace(t, derive_slope_order(theta, p, t));
  return out;
}

CdrConditionResult check_cdr_condition(const std::map<Slope, OrderView>& orders, const Point& p,
                                       Int window_len) {
  if (window_len < 2) throw ContractError("window_len must be at least 2");
  const int d = p.dim();
  CdrConditionResult result;
  result.window_len = window_len;
  std::vector<Slope> slopes = all_slopes(d);
  for (const Slope& t : slopes) {
    if (!orders.contains(t)) throw ContractError("missing order for slope " + to_string(t));
  }
  if (d == 2) {
    result.vacuous = true;
    return result;
  }

  // Ranks of [t.p, t.p + len) in each slope's own order; the condition says
  // these rank vectors coincide across slopes.
  std::vector<std::vector<std::uint32_t>> ranks;
  ranks.reserve(slopes.size());
  for (const Slope& t : slopes) {
    const Int lo = dot(t, p);
    ranks.push_back(window_ranks(orders.at(t), Interval{lo, lo + window_len - 1}));
  }
  for (std::size_t a = 0; a < slopes.size(); ++a) {
    for (std::size_t b = a + 1; b < slopes.size(); ++b) {
      if (ranks[a] == ranks[b]) continue;
      const auto& ra = ranks[a];
      const auto& rb = ranks[b];
      for (Int i = 0; i < window_len; ++i) {
        for (Int j = i + 1; j < window_len; ++j) {
          const auto ui = static_cast<std::size_t>(i);
          const auto uj = static_cast<std::size_t>(j);
          if ((ra[ui] < ra[uj]) == (rb[ui] < rb[uj])) continue;
          const Int lo = dot(slopes[a], p);
          const bool i_first = ra[ui] < ra[uj];
          result.holds = false;
          result.witness = CdrWitness{slopes[a], slopes[b], lo + (i_first ? i : j),
                                      lo + (i_first ? j : i)};
          return result;
        }
      }
    }
  }
  return result;
}

CdsConditionResult check_cds_condition(const OrderView& theta, Int W) {
  if (W < 8) throw ContractError("check_cds_condition needs W >= 8");
  const Interval w{-W, W};
  CdsConditionResult out;
  out.shift_two = satisfies_shift_two(theta, w);
  out.neg_shift_inverse = satisfies_neg_shift_inverse(theta, w);
  out.holds = out.shift_two.holds && out.neg_shift_inverse.holds;
  return out;
}

}  // namespace cdskit
