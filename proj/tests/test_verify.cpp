#include <gtest/gtest.h>

#include <random>

#include "cdskit/verify.hpp"

using namespace cdskit;

namespace {

// Everything below the raised point is ordered like theta; values at and
// above it are taken from the derived order for slope (-1,-1,+1).
struct RaisedSetup {
  Int lambda = 4;
  Point p{0, 0, 4};
  Slope t{-1, -1, 1};
};

}  // namespace

TEST(Axioms, NaturalFullSystemPassesExhaustively) {
  AxiomOptions opt;
  opt.pair_budget = 1u << 20;
  const auto report = check_axioms(make_system(TocCds{make_order(Natural{})}, 3), cube(3, -3, 3), opt);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.pairs_tested, 343u * 343u);
  EXPECT_TRUE(report.all_pass());
}

TEST(Axioms, FamilyOrdersPassInThePlane) {
  for (const auto& theta : {make_order(Tau{TauKind::OpEp}), make_order(Alpha{2}),
                            make_order(AlphaReverse{-1})}) {
    AxiomOptions opt;
    opt.pair_budget = 1u << 20;
    const auto report = check_axioms(make_system(TocCds{theta}, 2), cube(2, -5, 5), opt);
    EXPECT_TRUE(report.exhaustive);
    EXPECT_TRUE(report.all_pass()) << theta.describe();
  }
}

TEST(Axioms, FamilyOrdersSymmetricSampled) {
  for (const auto& theta : {make_order(Tau{TauKind::EmOm}), make_order(Alpha{-3})}) {
    const auto sys = make_system(TocCds{theta}, 3);
    const auto report = check_axioms(sys, cube(3, -5, 5));
    EXPECT_FALSE(report.exhaustive);
    EXPECT_EQ(report[Axiom::S2].status, Status::Pass) << theta.describe();
  }
}

TEST(Axioms, RayReportSkipsSymmetry) {
  const auto sys = make_system(TocCdr{make_order(VanDerCorput{0}), {0, 0, 0}}, 3);
  const auto report = check_axioms(sys, cube(3, -4, 4));
  EXPECT_EQ(report[Axiom::S2].status, Status::Skipped);
  EXPECT_TRUE(report.all_pass());
}

TEST(Axioms, SwappedSlopeOrderBreaksSubsegments) {
  const Point p{0, 0, 2};
  std::map<Slope, OrderView> orders;
  for (const Slope& t : all_slopes(3)) orders.emplace(t, make_order(Theta1Swap{}));
  const auto sys = make_system(PerSlopeCdr{p, orders}, 3);
  const auto report = check_axioms(sys, cube(3, -2, 4));
  ASSERT_EQ(report[Axiom::S3].status, Status::Fail);
  const auto& w = *report[Axiom::S3].witness;
  EXPECT_EQ(w.p, p);
  // The reported witness must reproduce on its own.
  EXPECT_TRUE(check_pair(sys, Axiom::S3, w.p, w.q));
}

TEST(Axioms, SeedMakesSamplingReproducible) {
  const auto sys = make_system(TocCds{make_order(VanDerCorput{0})}, 3);
  AxiomOptions opt;
  opt.pair_budget = 500;
  const auto a = check_axioms(sys, cube(3, -4, 4), opt);
  const auto b = check_axioms(sys, cube(3, -4, 4), opt);
  ASSERT_TRUE(a.any_fail());
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(a.axioms[i].status, b.axioms[i].status);
    if (a.axioms[i].witness) {
      EXPECT_EQ(a.axioms[i].witness->p, b.axioms[i].witness->p);
      EXPECT_EQ(a.axioms[i].witness->q, b.axioms[i].witness->q);
    }
  }
}

TEST(Axioms, ShrunkWitnessIsNoLargerThanTheRegion) {
  const auto sys = make_system(TocCds{make_order(VanDerCorput{0})}, 2);
  const auto report = check_axioms(sys, cube(2, -6, 6));
  for (Axiom a : {Axiom::S2, Axiom::S3}) {
    if (report[a].status != Status::Fail) continue;
    const auto& w = *report[a].witness;
    EXPECT_TRUE(check_pair(sys, a, w.p, w.q)) << to_string(a);
    EXPECT_LE(l1_distance(w.p, w.q), 24);
  }
  EXPECT_TRUE(report.any_fail());
}

TEST(Axioms, RoundingIsNotConsistent) {
  const auto sys = make_system(Rounding{}, 2);
  const auto pair = find_disconnected_pair(sys, cube(2, 0, 12));
  ASSERT_TRUE(pair);
  EXPECT_FALSE(pair->intersection.connected);
  const auto again = check_intersection_connected(sys, pair->p, pair->q, pair->p2, pair->q2);
  EXPECT_FALSE(again.connected);
  EXPECT_EQ(again.common, pair->intersection.common);
}

TEST(Axioms, StoredPathChecks) {
  const DigitalPath good{{{0, 0}, {1, 0}, {1, 1}}};
  const auto ok = check_path_axioms(good);
  EXPECT_EQ(ok[Axiom::S1].status, Status::Pass);
  EXPECT_EQ(ok[Axiom::S5].status, Status::Pass);
  EXPECT_EQ(ok[Axiom::S3].status, Status::Skipped);
  const DigitalPath jump{{{0, 0}, {1, 1}}};
  EXPECT_EQ(check_path_axioms(jump)[Axiom::S1].status, Status::Fail);
  const DigitalPath back{{{0, 0}, {1, 0}, {0, 0}, {0, 1}}};
  EXPECT_EQ(check_path_axioms(back)[Axiom::S5].status, Status::Fail);
}

TEST(Intersection, ComponentsOfTwoPaths) {
  const DigitalPath a{{{0, 0}, {1, 0}, {1, 1}, {2, 1}}};
  EXPECT_TRUE(intersection_components(a, a).connected);
  const DigitalPath b{{{0, 0}, {0, 1}, {1, 1}, {1, 2}}};
  const auto r = intersection_components(a, b);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.components, 2);
  const DigitalPath far{{{5, 5}, {6, 5}}};
  const auto none = intersection_components(a, far);
  EXPECT_TRUE(none.connected);
  EXPECT_TRUE(none.common.empty());
}

TEST(Intersection, FamilySegmentsIntersectConnectedly) {
  const auto sys = make_system(TocCds{make_order(Tau{TauKind::OpEp})}, 2);
  const auto pts = cube(2, -3, 3).points();
  std::vector<DigitalPath> paths;
  for (const Point& p : pts) {
    for (const Point& q : pts) paths.push_back(path_of(sys, p, q));
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      ASSERT_TRUE(intersection_components(paths[i], paths[j]).connected)
          << to_string(paths[i]) << " / " << to_string(paths[j]);
    }
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> c(-6, 6);
  auto random_point = [&] { return Point{c(rng), c(rng)}; };
  for (int rep = 0; rep < 20000; ++rep) {
    const Point p = random_point(), q = random_point(), p2 = random_point(), q2 = random_point();
    ASSERT_TRUE(check_intersection_connected(sys, p, q, p2, q2).connected);
  }
}

TEST(Subtree, SetsOnTheRaisedPoint) {
  const RaisedSetup s;
  const auto theta = make_order(VanDerCorput{-3});
  const auto theta_p = derive_slope_order(theta, s.p, s.t);
  const Int n = 10;
  // Axis order of t puts x2 before x1, so one step in x2 gives s1 = 1.
  const Point q = s.p + Point{0, -1, 0};
  const auto sets = subtree_sets(theta_p, s.p, q, s.t, n);
  EXPECT_EQ(sets.s1, 1);
  EXPECT_EQ(sets.s2, 0);
  EXPECT_TRUE(sets.X3.empty());
  for (Int v : sets.X1) EXPECT_TRUE(theta_p.less(v, s.lambda));
  for (Int v : sets.X2) EXPECT_TRUE(theta_p.less(s.lambda, v));
  EXPECT_EQ(static_cast<Int>(sets.X1.size() + sets.X2.size()), n - 1);

  const Point r = s.p + Point{-1, 0, 0};
  const auto other = subtree_sets(theta_p, s.p, r, s.t, n);
  EXPECT_EQ(other.s1, 0);
  EXPECT_EQ(other.s2, 1);
  EXPECT_TRUE(other.X1.empty());
  EXPECT_EQ(other.X2, sets.X1);
  EXPECT_EQ(other.X3, sets.X2);
}

TEST(Subtree, MiddleSetEmptyExactlyWhenRanksAreAdjacent) {
  for (const auto& theta : {make_order(Natural{}), make_order(VanDerCorput{0}),
                            make_order(Theta1Swap{}), make_order(Tau{TauKind::OpEp})}) {
    const Point p{0, 0};
    const Slope t{1, 1};
    for (Int a = 1; a <= 3; ++a) {
      for (Int b = 1; b <= 3; ++b) {
        const auto sets = subtree_sets(theta, p, {a, b}, t, 12);
        EXPECT_EQ(sets.X2.empty(), sets.i_b == sets.i_a + 1) << theta.describe();
      }
    }
  }
  const auto nat = subtree_sets(make_order(Natural{}), {0, 0}, {2, 3}, {1, 1}, 10);
  EXPECT_TRUE(nat.X2.empty());
}

TEST(Subtree, ContractViolations) {
  const auto nat = make_order(Natural{});
  EXPECT_THROW((void)subtree_sets(nat, {0, 0}, {0, 0}, {1, 1}, 5), ContractError);
  EXPECT_THROW((void)subtree_sets(nat, {0, 0}, {2, 3}, {1, 1}, 5), ContractError);
  EXPECT_THROW((void)subtree_sets(nat, {0, 0}, {-1, 1}, {1, 1}, 5), ContractError);
}

TEST(PrefixCharacterisation, ExhaustiveForSmallWindows) {
  for (const auto& theta : {make_order(Natural{}), make_order(VanDerCorput{0}),
                            make_order(Tau{TauKind::OpEp}), make_order(Theta1Swap{})}) {
    for (const Slope& t : all_slopes(2)) {
      const Point p{1, -1};
      for (Int n = 2; n <= 12; ++n) {
        for (Int k = 0; k <= 3; ++k) {
          for (Int l = 0; l <= 3; ++l) {
            if (k + l == 0 || k + l >= n) continue;
            const Point q{p[0] + t[0] * k, p[1] + t[1] * l};
            const auto r = check_prefix_lemma(theta, p, q, t, n);
            ASSERT_TRUE(r.holds) << theta.describe() << " t=" << to_string(t) << " n=" << n
                                 << " q=" << to_string(q);
            EXPECT_EQ(r.points_checked, n + 1);
          }
        }
      }
    }
  }
}

TEST(PrefixCharacterisation, PlaneInsideThreeDimensions) {
  const Slope t{1, -1, 1};
  const Point p{0, 0, 0};
  const Plane plane{0, 2};
  for (Int n = 3; n <= 10; ++n) {
    const auto r = check_prefix_lemma(make_order(VanDerCorput{0}), p, {1, 0, 1}, t, n, plane);
    EXPECT_TRUE(r.holds) << n;
  }
}

TEST(SubtreeProperty, FamilyOrdersKeepTheStructure) {
  for (const auto& theta : {make_order(Natural{}), make_order(Tau{TauKind::OpEp}),
                            make_order(Alpha{1})}) {
    for (const Slope& t : all_slopes(2)) {
      const Point p{0, 0};
      for (Int k = 0; k <= 2; ++k) {
        for (Int l = 0; l <= 2; ++l) {
          if (k + l == 0) continue;
          const Point q{t[0] * k, t[1] * l};
          const auto theta_p = derive_slope_order(theta, p, t);
          const auto theta_q = derive_slope_order(theta, q, t);
          const auto r = check_subtree_property(theta_p, theta_q, p, q, t, 12);
          EXPECT_TRUE(r.holds) << theta.describe() << " t=" << to_string(t);
        }
      }
    }
  }
}

TEST(SubtreeProperty, SwappedTranslateIsCaught) {
  // t.p = -3; the order at p is the swapped order itself, the order at q
  // is its translate by 2, which moves the swapped pair.
  const Slope t{-1, -1};
  const Point p{1, 2};
  const Point q{1, 1};
  const auto theta_p = make_order(Theta1Swap{});
  const auto theta_q = shift(make_order(Theta1Swap{}), 2);
  const auto r = check_subtree_property(theta_p, theta_q, p, q, t, 8);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.rule, 3);
  EXPECT_TRUE(theta_p.less(r.witness->first, r.witness->second));
  EXPECT_FALSE(theta_q.less(r.witness->first, r.witness->second));
}
