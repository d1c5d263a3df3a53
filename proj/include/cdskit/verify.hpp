#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdskit/geometry.hpp"
#include "cdskit/order.hpp"
#include "cdskit/systems.hpp"
#include "cdskit/toc.hpp"

namespace cdskit {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

enum class Axiom { S1 = 0, S2, S3, S4, S5 };
enum class Status { Pass, Fail, Skipped };

[[nodiscard]] std::string to_string(Axiom a);
[[nodiscard]] std::string to_string(Status s);

/// A failing pair, optionally with the point r on its path that exposes the
/// failure and the path that was expected there.
struct AxiomWitness {
  Point p;
  Point q;
  std::optional<Point> r;
  DigitalPath path;
  /// S2: path of (q, p). S3: path re-derived between p and r (or r and q).
  std::optional<DigitalPath> other;
  std::string note;
};

struct AxiomStatus {
  Status status = Status::Pass;
  std::string detail;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::string system;
  std::array<AxiomStatus, 5> axioms;
  Box region;
  std::uint64_t pairs_tested = 0;
  bool exhaustive = true;
  std::uint64_t seed = kDefaultSeed;

  [[nodiscard]] const AxiomStatus& operator[](Axiom a) const {
    return axioms[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] bool any_fail() const;
};

struct AxiomOptions {
  std::uint64_t pair_budget = 20000;
  std::uint64_t seed = kDefaultSeed;
  bool shrink = true;
};

/// Checks S1-S5 on pairs drawn from `region` (ray systems: the apex paired
/// with every point of the region). Exhaustive when the pair count fits the
/// budget, otherwise `pair_budget` seeded random pairs.
[[nodiscard]] AxiomReport check_axioms(const SegmentSystem& system, const Box& region,
                                       const AxiomOptions& options = {});

/// S1 and S5 for a single stored path (no system needed).
[[nodiscard]] AxiomReport check_path_axioms(const DigitalPath& path);

/// Per-pair check of one axiom; returns the failure if any. Exposed so the
/// shrinker and callers can re-verify witnesses.
[[nodiscard]] std::optional<AxiomWitness> check_pair(const SegmentSystem& system, Axiom axiom,
                                                     const Point& p, const Point& q);

struct IntersectionResult {
  bool connected = true;
  std::vector<Point> common;
  /// Number of connected components of the common point set.
  int components = 0;
};

/// Whether the points shared by R(p,q) and R(p2,q2) form a connected set
/// under unit steps.
[[nodiscard]] IntersectionResult check_intersection_connected(const SegmentSystem& system,
                                                              const Point& p, const Point& q,
                                                              const Point& p2, const Point& q2);

[[nodiscard]] IntersectionResult intersection_components(const DigitalPath& a,
                                                         const DigitalPath& b);

struct SubtreeSets {
  Int s1 = 0;
  Int s2 = 0;
  Int i_a = 0;
  Int i_b = 0;
  Interval left_window;
  Interval right_window;
  std::vector<Int> X1;
  std::vector<Int> X2;
  std::vector<Int> X3;
};

/// Partition of the right interval [t.q, t.p+n-1] induced by the order at p.
/// s1 counts steps on whichever plane axis comes first in axis_order(t).
/// Throws ContractError unless q differs from p only inside the plane,
/// q is in O_t(p), q != p and n > s1 + s2.
[[nodiscard]] SubtreeSets subtree_sets(const OrderView& theta, const Point& p, const Point& q,
                                       const Slope& t, Int n, Plane plane = {});

/// q lies on build_segment(theta, p, r, t).
[[nodiscard]] bool passes_through_oracle(const OrderView& theta, const Point& p, const Point& q,
                                         const Slope& t, const Point& r);

struct PrefixLemmaWitness {
  Point r;
  bool oracle = false;
  bool predicate = false;
};

struct PrefixLemmaResult {
  bool holds = true;
  SubtreeSets sets;
  Int points_checked = 0;
  std::optional<PrefixLemmaWitness> witness;
};

/// For every r in the plane with t.r = t.p + n: the path to r passes through
/// q exactly when the first-axis step count k satisfies k >= s1, n-k >= s2
/// and i_a <= k <= i_b - 1.
[[nodiscard]] PrefixLemmaResult check_prefix_lemma(const OrderView& theta, const Point& p,
                                                   const Point& q, const Slope& t, Int n,
                                                   Plane plane = {});

struct SubtreeResult {
  bool holds = true;
  SubtreeSets sets;
  /// Expected u before v in theta_q, found the other way round.
  std::optional<std::pair<Int, Int>> witness;
  /// 1, 2 or 3: which family of required comparisons failed.
  int rule = 0;
};

/// Checks that theta_q keeps X1 before X2, X1 and X2 before X3, and the
/// relative order of X2 from theta_p.
[[nodiscard]] SubtreeResult check_subtree_property(const OrderView& theta_p,
                                                   const OrderView& theta_q, const Point& p,
                                                   const Point& q, const Slope& t, Int n,
                                                   Plane plane = {});

struct DisconnectedPair {
  Point p;
  Point q;
  Point p2;
  Point q2;
  IntersectionResult intersection;
};

/// Finds two segments whose intersection is not connected, scanning the box
/// in lexicographic order. Pairs with a shared source are searched first,
/// then arbitrary pairs.
[[nodiscard]] std::optional<DisconnectedPair> find_disconnected_pair(const SegmentSystem& system,
                                                                     const Box& region);

}  // namespace cdskit
