#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tri/chain.hpp"
#include "tri/identity.hpp"

namespace tri {
namespace {

SimplexId up(Int i, Int j) { return {SimplexKind::FaceUp, {i, j}}; }
SimplexId down(Int i, Int j) { return {SimplexKind::FaceDown, {i, j}}; }

std::size_t count_kind(const Chain& c, SimplexKind k) {
  std::size_t n = 0;
  for (const auto& [id, m] : c) n += id.kind == k;
  return n;
}

TEST(FaceChain, Examples) {
  const Chain two = face_chain(placed(0, 0, 2));
  EXPECT_EQ(count_kind(two, SimplexKind::FaceUp), 3u);
  EXPECT_EQ(count_kind(two, SimplexKind::FaceDown), 1u);

  Chain unit;
  unit.add(up(0, 0), 1);
  EXPECT_EQ(face_chain(placed(0, 0, 1)), unit);

  Chain mirrored;
  mirrored.add(down(-1, -1), 1);
  EXPECT_EQ(face_chain(placed(0, 0, -1)), mirrored);

  EXPECT_TRUE(face_chain(placed(3, 3, 0)).empty());
}

TEST(FaceChain, CellCounts) {
  for (Int s = 1; s <= 15; ++s) {
    const Chain c = face_chain(placed(-2, 7, s));
    EXPECT_EQ(count_kind(c, SimplexKind::FaceUp), static_cast<std::size_t>(s * (s + 1) / 2));
    EXPECT_EQ(count_kind(c, SimplexKind::FaceDown), static_cast<std::size_t>(s * (s - 1) / 2));
    const Chain m = face_chain(placed(-2, 7, -s));
    EXPECT_EQ(count_kind(m, SimplexKind::FaceDown), static_cast<std::size_t>(s * (s + 1) / 2));
    EXPECT_EQ(count_kind(m, SimplexKind::FaceUp), static_cast<std::size_t>(s * (s - 1) / 2));
  }
}

TEST(Chains, MatchBarycentreOracle) {
  for (Mode mode : {Mode::N2, Mode::N20}) {
    for (Int s = -9; s <= 9; ++s) {
      for (const LatticeCoord& a : {LatticeCoord{0, 0}, LatticeCoord{-3, 5}, LatticeCoord{11, -4}}) {
        const PlacedTriangle p{a, s};
        ASSERT_EQ(triangle_chain(p, 1, mode), oracle::chain(p, 1, mode)) << to_string(p);
        ASSERT_EQ(triangle_chain(p, -1, mode), oracle::chain(p, -1, mode)) << to_string(p);
      }
    }
  }
}

TEST(Chains, EulerCharacteristicOfClosedAndOpenTriangles) {
  for (Int s = -12; s <= 12; ++s) {
    const auto ids = oracle::simplices(placed(1, 2, s), Mode::N20);
    EXPECT_EQ(oracle::euler(ids), 1) << s;
    EXPECT_EQ(project_n20(n20_chain(placed(1, 2, s), 1)).c, 1) << s;
  }
}

TEST(N20Chain, Examples) {
  EXPECT_EQ(project(n20_chain(placed(0, 0, 3), 1)), (TriVec3{9, 3, 1}));
  const Chain closed3 = n20_chain(placed(0, 0, 3), 1);
  EXPECT_EQ(count_kind(closed3, SimplexKind::Vertex), 10u);
  EXPECT_EQ(closed3.size(), 10u + 18u + 9u);
  EXPECT_EQ(project(n20_chain(placed(0, 0, -2), 1)), (TriVec3{4, -2, 1}));
  EXPECT_EQ(project(n20_chain(placed(4, 4, 0), -1)), (TriVec3{0, 0, -1}));
}

TEST(N20Chain, ProjectsToEmbedding) {
  for (Int s = -12; s <= 12; ++s) {
    if (s == 0) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const LatticeCoord a{oracle::uniform(-100, 100), oracle::uniform(-100, 100)};
      EXPECT_EQ(project(n20_chain({a, s}, 1)), embed3({1, s}));
      EXPECT_EQ(project(face_chain({a, s})), (TriVec3{s * s, s, 0}));
    }
  }
}

TEST(N20Chain, TranslationInvariance) {
  const PlacedTriangle p = placed(0, 0, -5);
  const Chain base = n20_chain(p, 1);
  const LatticeCoord shift{7, -3};
  Chain moved(Mode::N20);
  for (const auto& [id, m] : base) moved.add({id.kind, id.at + shift}, m);
  EXPECT_EQ(n20_chain({p.anchor + shift, p.size}, 1), moved);
}

TEST(Project, EmptyAndCancelled) {
  EXPECT_EQ(project(Chain(Mode::N2)), (TriVec3{}));
  EXPECT_EQ(project(Chain(Mode::N20)), (TriVec3{}));
  const Chain sum = n20_chain(placed(2, 2, 1), 1) + n20_chain(placed(2, 2, 1), -1);
  EXPECT_TRUE(sum.empty());
  EXPECT_EQ(project(sum), (TriVec3{}));
  EXPECT_EQ(project_n2(face_chain(placed(0, 0, 5))), (OrthoPair{25, 5}));
}

TEST(Chain, CanonicalFormDropsZeros) {
  Chain c;
  c.add(up(0, 0), 2);
  c.add(up(0, 0), -2);
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c, Chain());
  c.add(down(1, 1), 0);
  EXPECT_TRUE(c.empty());
  EXPECT_EQ((3 * face_chain(placed(0, 0, 2))).at(up(1, 0)), 3);
}

TEST(Chain, ModeErrors) {
  Chain faces(Mode::N2);
  EXPECT_THROW(faces.add({SimplexKind::Vertex, {0, 0}}, 1), std::invalid_argument);
  EXPECT_THROW(faces += Chain(Mode::N20), std::invalid_argument);
}

TEST(Chain, SortedEntriesAreOrdered) {
  const auto entries = n20_chain(placed(0, 0, 2), 1).sorted_entries();
  for (std::size_t i = 1; i < entries.size(); ++i) EXPECT_TRUE(entries[i - 1].first < entries[i].first);
}

TEST(Projection, HomomorphismOnRandomCollections) {
  for (int trial = 0; trial < 500; ++trial) {
    for (Mode mode : {Mode::N2, Mode::N20}) {
      Chain acc(mode);
      TriVec3 expected;
      const int count = static_cast<int>(oracle::uniform(1, 8));
      for (int i = 0; i < count; ++i) {
        const Int sign = oracle::uniform(0, 1) ? 1 : -1;
        const PlacedTriangle p = placed(oracle::uniform(-6, 6), oracle::uniform(-6, 6), oracle::uniform(-6, 6));
        acc += triangle_chain(p, sign, mode);
        TriVec3 e = embed3({static_cast<int>(sign), p.size});
        if (mode == Mode::N2) e.c = 0;
        expected = expected + e;
      }
      ASSERT_EQ(project(acc), expected);
    }
  }
}

TEST(GeomCheck, DissectionRootBothModes) {
  const Eq8Layout lay = eq8_layout(placed(0, 0, -12), 19, 12, 20);
  for (Mode mode : {Mode::N2, Mode::N20}) {
    EXPECT_TRUE(geom_check(eq8_terms(lay), {1, lay.big}, mode).empty());
  }
}

TEST(GeomCheck, SixTermFourIsBuildable) {
  const Eq8Layout lay = eq8_layout(placed(0, 0, 0), 1, 1, 2);
  EXPECT_TRUE(geom_check(eq8_terms(lay), {1, lay.big}, Mode::N2).empty());
}

TEST(GeomCheck, WrongPlacementLeavesResidual) {
  const std::vector<SignedPlacement> terms{{1, placed(0, 0, 3)}, {1, placed(1, 0, 3)},
                                           {-1, placed(1, 0, 1)}, {-1, placed(1, 1, 1)}};
  EXPECT_FALSE(geom_check(terms, {1, placed(0, 0, 4)}, Mode::N2).empty());
}

TEST(CountingWitness, CountingPlacement) {
  const auto w = eq26_witness({0, 0}, 3);
  std::size_t closed = 0, open = 0, points = 0;
  Int corrections = 0;
  for (const auto& p : w) {
    if (p.tri.size == 1) ++closed;
    if (p.tri.size == -1) ++open;
    if (p.tri.size == 0) {
      ++points;
      corrections -= p.sign;
    }
  }
  EXPECT_EQ(closed, 6u);
  EXPECT_EQ(open, 3u);
  EXPECT_EQ(corrections, 8);
  EXPECT_EQ(points, 8u);
  EXPECT_TRUE(geom_check(w, {1, placed(0, 0, 3)}, Mode::N20).empty());
}

TEST(CountingWitness, EmptyResidualForSmallN) {
  for (Int n = 1; n <= 8; ++n) {
    const auto w = eq26_witness({2, -1}, n);
    EXPECT_TRUE(geom_check(w, {1, placed(2, -1, n)}, Mode::N20).empty()) << n;
    Int corrections = 0;
    for (const auto& p : w) corrections += p.tri.size == 0 ? -p.sign : 0;
    EXPECT_EQ(corrections, (n - 1) * (n + 1)) << n;
  }
  EXPECT_THROW(eq26_witness({0, 0}, 0), std::invalid_argument);
}

TEST(BTermWitness, EmptyResidual) {
  for (Int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(geom_check(eq30_witness({0, 0}, n), {1, placed(0, 0, n)}, Mode::N20).empty()) << n;
  }
}

TEST(PlacementSearch, SingleUnit) {
  const std::vector<SearchTerm> terms{{1, 1}};
  const auto found = placement_search(terms, placed(3, -2, 1), {2, Mode::N2, 1e12});
  ASSERT_TRUE(found.has_value());
  ASSERT_EQ(found->size(), 1u);
  EXPECT_EQ((*found)[0].tri, placed(3, -2, 1));
}

TEST(PlacementSearch, SixTermFourFound) {
  const std::vector<SearchTerm> terms{{1, 3}, {1, 3}, {1, 2}, {-1, 2}, {-1, 1}, {-1, 1}};
  const PlacedTriangle target = placed(0, 0, 4);
  const auto found = placement_search(terms, target, {2, Mode::N2, 1e12});
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(geom_check(*found, {1, target}, Mode::N2).empty());
}

TEST(PlacementSearch, TwoThreesMinusTwoOnesNotFound) {
  const std::vector<SearchTerm> terms{{1, 3}, {1, 3}, {-1, 1}, {-1, 1}};
  EXPECT_FALSE(placement_search(terms, placed(0, 0, 4), {6, Mode::N2, 1e12}).has_value());
}

// Every anchor assignment in the window, summed with per-anchor face chains.
bool exhaustive_exists(const std::vector<SearchTerm>& terms, const PlacedTriangle& target, Int r) {
  const Int side = 2 * r + 1;
  Int total = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) total *= side * side;
  const Chain goal = face_chain(target);
  for (Int code = 0; code < total; ++code) {
    Chain acc;
    Int rest = code;
    for (const SearchTerm& t : terms) {
      const Int di = rest % side - r;
      rest /= side;
      const Int dj = rest % side - r;
      rest /= side;
      acc += t.sign * oracle::chain({target.anchor + LatticeCoord{di, dj}, t.size}, 1, Mode::N2);
    }
    if (acc == goal) return true;
  }
  return false;
}

TEST(PlacementSearch, AgreesWithExhaustiveEnumeration) {
  const std::vector<std::pair<std::vector<SearchTerm>, Int>> cases{
      {{{1, 3}, {1, 3}, {-1, 1}, {-1, 1}}, 4},
      {{{1, 2}, {1, 1}, {1, 1}, {-1, -1}}, 2},
      {{{1, 1}, {1, 1}, {1, 1}, {1, -1}}, 2},
      {{{1, 2}, {1, 2}, {-1, 1}}, 3},
      {{{1, 3}, {-1, 1}, {-1, -1}}, 2},
  };
  for (const auto& [terms, size] : cases) {
    const PlacedTriangle target = placed(0, 0, size);
    const bool expected = exhaustive_exists(terms, target, 1);
    const auto found = placement_search(terms, target, {1, Mode::N2, 1e12});
    EXPECT_EQ(found.has_value(), expected) << size;
    if (found) {
      EXPECT_TRUE(geom_check(*found, {1, target}, Mode::N2).empty());
    }
  }
}

TEST(PlacementSearch, FindsConstructionsOfSmallLayouts) {
  for (Int n = -1; n <= 1; ++n) {
    for (Int k = -1; k <= 1; ++k) {
      for (Int l = -1; l <= 1; ++l) {
        for (Int t = -2; t <= 2; ++t) {
          const Eq8Layout lay = eq8_layout(placed(0, 0, t), n, k, l);
          if (lay.big.size == 0) continue;
          std::vector<SearchTerm> terms;
          for (const auto& p : eq8_terms(lay)) {
            if (p.tri.size != 0) terms.push_back({p.sign, p.tri.size});
          }
          const auto found = placement_search(terms, lay.big, {2, Mode::N2, 1e12});
          ASSERT_TRUE(found.has_value()) << n << " " << k << " " << l << " " << t;
          ASSERT_TRUE(geom_check(*found, {1, lay.big}, Mode::N2).empty());
        }
      }
    }
  }
}

TEST(PlacementSearch, BudgetExceeded) {
  const std::vector<SearchTerm> terms(8, SearchTerm{1, 1});
  EXPECT_THROW(placement_search(terms, placed(0, 0, 4), {10, Mode::N2, 1e6}), BudgetExceeded);
}

}  // namespace
}  // namespace tri
