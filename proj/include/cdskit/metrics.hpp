#pragma once

#include <optional>
#include <vector>

#include "cdskit/geometry.hpp"
#include "cdskit/order.hpp"
#include "cdskit/systems.hpp"
#include "cdskit/toc.hpp"

namespace cdskit {

/// Polyline: the path is the union of its unit edges. LatticePoints: the
/// path is only its vertex set.
enum class PathModel { Polyline, LatticePoints };

/// Ball used by sweeps: Euclidean (||q-p||_2 <= n) or Manhattan
/// (||q-p||_1 <= n).
enum class BallNorm { Euclidean, Manhattan };

struct HausdorffResult {
  enum class Direction { PathToSegment, SegmentToPath };

  double value = 0.0;
  /// Path vertex at the witness.
  Point witness_lattice;
  /// Point of the real segment at the witness.
  std::vector<double> witness_real;
  Direction direction = Direction::PathToSegment;
};

/// Hausdorff distance between the path and the closed real segment pq.
/// Throws ContractError when the path does not run from p to q.
[[nodiscard]] HausdorffResult hausdorff(const DigitalPath& path, const Point& p, const Point& q,
                                        PathModel model = PathModel::Polyline);

struct SweepResult {
  double max_value = 0.0;
  /// Lexicographically smallest target attaining the maximum.
  Point argmax;
  std::uint64_t targets = 0;
};

struct SweepOptions {
  std::optional<Plane> plane;
  BallNorm norm = BallNorm::Euclidean;
  int threads = 1;
};

/// Maximum polyline Hausdorff distance of R(p,q) over all q in the ball of
/// radius n around p, restricted to a coordinate plane when requested.
[[nodiscard]] SweepResult max_hausdorff_over_ball(const SegmentSystem& system, const Point& p,
                                                  Int n, const SweepOptions& options = {});

/// Largest deviation | |I ∩ pi(J)| - |I||J|/n | over position intervals I and
/// value intervals J, where pi sends v in [0,n) to its 0-based rank.
[[nodiscard]] double discrepancy(const OrderView& view, Int n);

inline constexpr Int kMaxDiscrepancyN = 4096;

}  // namespace cdskit
