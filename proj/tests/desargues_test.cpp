// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "pgd/combinatorics.hpp"
#include "pgd/desargues.hpp"

namespace pgd {
namespace {

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

Subspace line(const ProjPoint& a, const ProjPoint& b) { return join(Subspace(a), Subspace(b)); }

// Membership by listing every point of the line; independent of contains().
bool on_line_by_enumeration(const ProjPoint& a, const ProjPoint& b, const ProjPoint& x) {
  for (const auto& p : line(a, b).points()) {
    if (p == x) return true;
  }
  return false;
}

FieldPtr gf(std::uint32_t q) {
  switch (q) {
    case 4: return Field::make(2, 2);
    case 8: return Field::make(2, 3);
    case 9: return Field::make(3, 2);
    default: return Field::make(q);
  }
}

LabeledConfiguration frame_config(int n, std::uint32_t q, std::uint64_t seed = 1) {
  auto f = gf(q);
  Rng rng(seed);
  const auto h = random_hyperplane(f, n + 1, rng);
  return section_arc(frame_off_hyperplane(h), h);
}

TEST(Section, PointCounts) {
  for (auto [n, q] : {std::pair{2, 5u}, std::pair{3, 3u}, std::pair{3, 5u}, std::pair{4, 3u}, std::pair{4, 5u}}) {
    const auto config = frame_config(n, q);
    EXPECT_EQ(config.size(), binomial(static_cast<std::uint64_t>(n) + 3, 2));
    EXPECT_EQ(config.ambient(), n);
    std::set<ProjPoint> pts;
    for (const auto& p : config.points()) pts.insert(p);
    EXPECT_EQ(pts.size(), config.size());
  }
  EXPECT_EQ(frame_config(3, 5).size(), 15u);
  EXPECT_EQ(frame_config(4, 5).size(), 21u);
}

TEST(Section, CollinearSymbolTriples) {
  const auto config = frame_config(3, 5);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k)
        EXPECT_TRUE(on_line_by_enumeration(config.at(i, j), config.at(i, k), config.at(j, k)));
  EXPECT_FALSE(line(config.at(1, 2), config.at(3, 4)).contains(config.at(1, 3)));
}

TEST(Section, Errors) {
  auto f2 = Field::make(2);
  const auto h2 = hyperplane_from_dual(f2, std::vector<Code>{0, 0, 0, 1});
  // A 5-arc of PG(3,2): the unit frame, which necessarily meets every plane's complement badly.
  std::vector<ProjPoint> frame2;
  for (int i = 0; i < 4; ++i) {
    std::vector<Code> e(4, 0);
    e[static_cast<std::size_t>(i)] = 1;
    frame2.emplace_back(f2, e);
  }
  frame2.emplace_back(f2, std::vector<Code>{1, 1, 1, 1});
  EXPECT_EQ(code_of([&] { section_arc(Arc(frame2), h2); }), Errc::FieldTooSmall);

  auto f = Field::make(5);
  const auto h = hyperplane_from_dual(f, std::vector<Code>{0, 0, 0, 1});
  std::vector<ProjPoint> on_h = frame_off_hyperplane(hyperplane_from_dual(f, std::vector<Code>{1, 1, 1, 1})).points();
  on_h.push_back(ProjPoint(f, {1, 2, 3, 4}));
  // unit points e1..e3 lie on x4 = 0
  try {
    section_arc(Arc(frame_off_hyperplane(hyperplane_from_dual(f, std::vector<Code>{1, 1, 1, 1}))), h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PointOnHyperplane);
  }
  const auto h_all = hyperplane_from_dual(f, std::vector<Code>{1, 1, 1, 1});
  auto four = frame_off_hyperplane(h_all).points();
  four.pop_back();
  EXPECT_EQ(code_of([&] { section_arc(Arc(four), h_all); }), Errc::WrongCount);
}

TEST(Extract, SimplexesFromVertexLabel) {
  const auto config = frame_config(3, 5);
  const auto ex = extract_perspective_pair(config, 1, 2);
  EXPECT_EQ(ex.symbols, (std::vector<int>{3, 4, 5, 6}));
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(ex.pair.a()[k], config.at(1, static_cast<int>(k) + 3));
    EXPECT_EQ(ex.pair.b()[k], config.at(2, static_cast<int>(k) + 3));
  }
  EXPECT_EQ(ex.vertex, config.at(1, 2));
  EXPECT_EQ(code_of([&] { extract_perspective_pair(config, 2, 2); }), Errc::BadSymbols);
  EXPECT_EQ(code_of([&] { extract_perspective_pair(config, 1, 9); }), Errc::BadSymbols);
  EXPECT_EQ(code_of([&] { extract_perspective_pair(config.restrict({3, 4, 5, 6}), 3, 4); }), Errc::InvalidConfiguration);
}

TEST(PerspectivePair, ConstructionChecks) {
  auto f = Field::make(5);
  std::vector<ProjPoint> a{{f, {1, 0, 0}}, {f, {0, 1, 0}}, {f, {0, 0, 1}}};
  std::vector<ProjPoint> b{{f, {1, 0, 0}}, {f, {1, 2, 0}}, {f, {1, 0, 2}}};
  EXPECT_EQ(code_of([&] { PerspectivePair(a, b); }), Errc::SharedPoint);
  // Vertex (1,1,0) on the face A_0A_1: the B edge B_0B_1 lands on the same line.
  std::vector<ProjPoint> c{{f, {2, 1, 0}}, {f, {1, 2, 0}}, {f, {1, 1, 2}}};
  EXPECT_EQ(code_of([&] { PerspectivePair(a, c); }), Errc::SharedFace);
  std::vector<ProjPoint> flat{{f, {1, 0, 0}}, {f, {0, 1, 0}}, {f, {1, 1, 0}}};
  EXPECT_EQ(code_of([&] { PerspectivePair(flat, c); }), Errc::NotASimplex);
  std::vector<ProjPoint> two{{f, {1, 0}}, {f, {0, 1}}};
  std::vector<ProjPoint> two_b{{f, {1, 1}}, {f, {1, 2}}};
  EXPECT_EQ(code_of([&] { PerspectivePair(two, two_b); }), Errc::TooFew);
}

TEST(FindVertex, SectionLabelIsTheVertex) {
  const auto config = frame_config(3, 5);
  const auto ex = extract_perspective_pair(config, 1, 2);
  EXPECT_EQ(find_vertex(ex.pair), config.at(1, 2));
}

TEST(FindVertex, RandomSectionedPairsGf7) {
  auto f = Field::make(7);
  Rng rng(77);
  for (int n = 3; n <= 5; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto ex = random_sectioned_pair(n, f, rng);
      const auto v = find_vertex(ex.pair);
      EXPECT_EQ(v, ex.vertex);
      for (std::size_t i = 0; i < ex.pair.size(); ++i) {
        EXPECT_TRUE(on_line_by_enumeration(ex.pair.a()[i], ex.pair.b()[i], v));
      }
    }
  }
}

TEST(FindVertex, SkewEdgesReported) {
  // Oracle: corresponding edges meet iff their four points have rank <= 3.
  auto f = Field::make(5);
  Rng rng(9);
  int skew = 0, meeting = 0;
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<ProjPoint> a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back(random_point(f, 3, rng));
      b.push_back(random_point(f, 3, rng));
    }
    if (rep % 4 == 0) {
      // Perspective pairs: every edge pair meets.
      const auto ex = random_sectioned_pair(3, f, rng);
      a = ex.pair.a();
      b = ex.pair.b();
    }
    std::optional<PerspectivePair> pair;
    try {
      pair.emplace(a, b);
    } catch (const Error&) {
      continue;
    }
    bool expect_skew = false;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        linalg::Matrix m(4, 4);
        const ProjPoint* rows[4] = {&a[i], &a[j], &b[i], &b[j]};
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = rows[r]->coords()[c];
        if (linalg::rank(*f, m) == 4) expect_skew = true;
      }
    }
    Errc got = Errc::ParseError;
    try {
      find_vertex(*pair);
    } catch (const Error& e) {
      got = e.code();
    }
    EXPECT_EQ(got == Errc::EdgesDisjoint, expect_skew);
    (expect_skew ? skew : meeting) += 1;
  }
  EXPECT_GT(skew, 0);
  EXPECT_GT(meeting, 0);
}

TEST(EdgeIntersections, CountsAndDistinctness) {
  for (auto [n, expect] : {std::pair{3, 6u}, std::pair{4, 10u}}) {
    const auto config = frame_config(n, 5);
    const auto ex = extract_perspective_pair(config, 1, 2);
    const auto e = edge_intersections(ex.pair);
    EXPECT_EQ(e.size(), expect);
    std::set<ProjPoint> distinct;
    for (const auto& [ij, p] : e) {
      distinct.insert(p);
      EXPECT_EQ(p, config.at(ex.symbols[static_cast<std::size_t>(ij.first)], ex.symbols[static_cast<std::size_t>(ij.second)]));
      EXPECT_NE(p, ex.vertex);
    }
    EXPECT_EQ(distinct.size(), expect);
  }
}

TEST(Axis, PlanarDesargues) {
  const auto config = frame_config(2, 7, 4);
  const auto ex = extract_perspective_pair(config, 1, 2);
  const auto axis = axis_hyperplane(ex.pair);
  EXPECT_EQ(axis.dim(), 1);
  for (const auto& [ij, p] : edge_intersections(ex.pair)) EXPECT_TRUE(axis.contains(p));
  EXPECT_EQ(axis, line(config.at(3, 4), config.at(3, 5)));
}

TEST(Axis, TenPointSolidForN4) {
  const auto config = frame_config(4, 5);
  const auto ex = extract_perspective_pair(config, 1, 2);
  const auto axis = axis_hyperplane(ex.pair);
  EXPECT_EQ(axis.dim(), 3);
  std::vector<ProjPoint> ten;
  for (int i = 3; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) ten.push_back(config.at(i, j));
  EXPECT_EQ(ten.size(), 10u);
  EXPECT_EQ(axis, span(ten));
}

TEST(TSpaces, Examples) {
  const auto config = frame_config(4, 5);
  const auto ex = extract_perspective_pair(config, 1, 2);
  const auto axis = axis_hyperplane(ex.pair);
  const auto t1 = tspace_intersections(ex.pair, 1);
  const auto edges = edge_intersections(ex.pair);
  ASSERT_EQ(t1.size(), edges.size());
  for (const auto& m : t1) {
    EXPECT_EQ(m.meet.dim(), 0);
    EXPECT_EQ(m.meet.point(), edges.at({m.indices[0], m.indices[1]}));
  }
  for (const auto& m : tspace_intersections(ex.pair, 2)) {
    EXPECT_EQ(m.meet.dim(), 1);
    int carried = 0;
    for (const auto& [ij, p] : edges) carried += m.meet.contains(p);
    EXPECT_EQ(carried, 3);
  }
  const auto t3 = tspace_intersections(ex.pair, 3);
  EXPECT_EQ(t3.size(), 5u);
  // Face k omits index k; the 4-subsets come out in lexicographic order, so
  // subset r omits index 4 - r.
  for (std::size_t r = 0; r < t3.size(); ++r) {
    const std::size_t k = 4 - r;
    const auto direct = meet(ex.pair.face_a(k), ex.pair.face_b(k));
    EXPECT_EQ(direct.dim(), 2);
    EXPECT_EQ(direct, t3[r].meet);
    EXPECT_TRUE(axis.contains(direct));
  }
  EXPECT_EQ(code_of([&] { tspace_intersections(ex.pair, 0); }), Errc::BadT);
  EXPECT_EQ(code_of([&] { tspace_intersections(ex.pair, 4); }), Errc::BadT);
}

TEST(TSpaces, FacePairJoinsAreHyperplanes) {
  const auto config = frame_config(4, 3);
  const auto ex = extract_perspective_pair(config, 2, 5);
  const auto joins = face_pair_joins(ex.pair);
  EXPECT_EQ(joins.size(), 10u);
  for (const auto& j : joins) {
    EXPECT_EQ(j.dim(), 3);
    EXPECT_TRUE(j.contains(ex.vertex));
  }
}

TEST(Converse, DualRouteAgrees) {
  Rng rng(31);
  for (auto [n, q] : {std::pair{2, 5u}, std::pair{3, 4u}, std::pair{4, 7u}}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto ex = random_sectioned_pair(n, gf(q), rng);
      const auto hyper = perspective_hyperplane(ex.pair);
      ASSERT_TRUE(hyper.has_value());
      EXPECT_EQ(*hyper, axis_hyperplane(ex.pair));
      EXPECT_EQ(converse_vertex(ex.pair), ex.vertex);
      const auto dual = dual_pair(ex.pair);
      EXPECT_EQ(find_vertex(dual), dual_coordinates(*hyper));
    }
  }
}

TEST(Converse, PointAndHyperplanePerspectivityCoincide) {
  // Random triangle pairs of PG(2,7) and tetrahedra built with all edges
  // meeting: perspective from a point iff from a hyperplane.
  auto f = Field::make(7);
  Rng rng(12);
  int persp = 0, not_persp = 0;
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<ProjPoint> a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(random_point(f, 2, rng));
      b.push_back(random_point(f, 2, rng));
    }
    if (rep % 2 == 0) {
      // Force perspectivity from a random vertex.
      const auto v = random_point(f, 2, rng);
      if (std::find(a.begin(), a.end(), v) != a.end()) continue;
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<ProjPoint> pts;
        for (const auto& p : line(v, a[i]).points())
          if (p != v && p != a[i]) pts.push_back(p);
        b[i] = pts[rng.below(pts.size())];
      }
    }
    std::optional<PerspectivePair> pair;
    try {
      pair.emplace(a, b);
    } catch (const Error&) {
      continue;
    }
    bool from_point = true;
    try {
      find_vertex(*pair);
    } catch (const Error& e) {
      // A common point that is itself a simplex vertex is outside the hypotheses.
      if (e.code() == Errc::InvalidConfiguration) continue;
      from_point = false;
      EXPECT_EQ(e.code(), Errc::NoCommonVertex);
    }
    const bool from_hyperplane = perspective_hyperplane(*pair).has_value();
    EXPECT_EQ(from_point, from_hyperplane);
    if (from_hyperplane) {
      EXPECT_EQ(converse_vertex(*pair), find_vertex(*pair));
      ++persp;
    } else {
      EXPECT_EQ(code_of([&] { converse_vertex(*pair); }), Errc::NoCommonVertex);
      ++not_persp;
    }
  }
  EXPECT_GT(persp, 20);
  EXPECT_GT(not_persp, 20);
}

TEST(Lift, RoundTripDeterministic) {
  auto f = Field::make(5);
  for (int n = 2; n <= 4; ++n) {
    const auto config = frame_config(n, 5, 100 + static_cast<std::uint64_t>(n));
    const auto ex = extract_perspective_pair(config, 1, 2);
    Rng rng(5);
    const auto h = random_hyperplane(f, n + 1, rng);
    const Arc arc = lift_to_arc(ex.pair, ex.vertex, h);
    ASSERT_EQ(arc.size(), static_cast<std::size_t>(n) + 3);
    for (const auto& p : arc.points()) EXPECT_FALSE(h.contains(p));
    const auto back = section_arc(arc, h);
    EXPECT_EQ(back.at(1, 2), ex.vertex);
    for (std::size_t i = 0; i < ex.pair.size(); ++i) {
      EXPECT_EQ(back.at(1, static_cast<int>(i) + 3), ex.pair.a()[i]);
      EXPECT_EQ(back.at(2, static_cast<int>(i) + 3), ex.pair.b()[i]);
    }
  }
}

TEST(Lift, PlanarPairGivesFiveArcOffH) {
  auto f = Field::make(5);
  const auto config = frame_config(2, 5, 7);
  const auto ex = extract_perspective_pair(config, 3, 5);
  const auto h = hyperplane_from_dual(f, std::vector<Code>{0, 0, 0, 1});
  const Arc arc = lift_to_arc(ex.pair, ex.vertex, h);
  EXPECT_EQ(arc.size(), 5u);
  EXPECT_EQ(arc.ambient(), 3);
  EXPECT_TRUE(is_arc(arc.points()));
  for (const auto& x : h.points()) {
    for (const auto& p : arc.points()) EXPECT_NE(x, p);
  }
}

TEST(Lift, RandomChoicesStillRoundTrip) {
  Rng rng(2024);
  for (auto [n, q] : {std::pair{2, 7u}, std::pair{3, 4u}, std::pair{3, 9u}}) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto ex = random_sectioned_pair(n, gf(q), rng);
      const auto h = random_hyperplane(gf(q), n + 1, rng);
      const Arc arc = lift_to_arc(ex.pair, ex.vertex, h, &rng);
      const auto back = section_arc(arc, h);
      EXPECT_EQ(back.at(1, 2), ex.vertex);
      for (std::size_t i = 0; i < ex.pair.size(); ++i) {
        EXPECT_EQ(back.at(1, static_cast<int>(i) + 3), ex.pair.a()[i]);
        EXPECT_EQ(back.at(2, static_cast<int>(i) + 3), ex.pair.b()[i]);
      }
    }
  }
}

TEST(Lift, VertexOnFaceRejected) {
  const auto config = frame_config(2, 5);
  const auto ex = extract_perspective_pair(config, 1, 2);
  auto f = Field::make(5);
  const auto h = hyperplane_from_dual(f, std::vector<Code>{0, 0, 0, 1});
  const auto on_face = ex.pair.face_a(0).points()[2];
  EXPECT_EQ(code_of([&] { lift_to_arc(ex.pair, on_face, h); }), Errc::SharedFace);
}

TEST(Conway, PlanarAxisAgreesGf7) {
  auto f = Field::make(7);
  Rng rng(70);
  for (int rep = 0; rep < 20; ++rep) {
    const auto ex = random_sectioned_pair(2, f, rng);
    const auto h = random_hyperplane(f, 3, rng);
    ProjPoint w = random_point(f, 3, rng);
    while (h.contains(w)) w = random_point(f, 3, rng);
    const auto lift = conway_lift(ex.pair, h, w);
    EXPECT_EQ(lift.axis, axis_hyperplane(ex.pair));
    // The lifted triangles do not lie in a plane.
    std::vector<ProjPoint> all;
    for (std::size_t i = 0; i < 3; ++i) {
      all.push_back(i == 1 ? lift.a_star : h.embed(ex.pair.a()[i]));
      all.push_back(i == 1 ? lift.b_star : h.embed(ex.pair.b()[i]));
    }
    EXPECT_EQ(span(all).dim(), 3);
    EXPECT_NE(lift.h1, lift.h2);
  }
}

TEST(Conway, HigherDimensions) {
  Rng rng(71);
  for (auto [n, q] : {std::pair{3, 5u}, std::pair{4, 3u}, std::pair{5, 4u}}) {
    const auto f = gf(q);
    const auto ex = random_sectioned_pair(n, f, rng);
    const auto h = random_hyperplane(f, n + 1, rng);
    ProjPoint w = random_point(f, n + 1, rng);
    while (h.contains(w)) w = random_point(f, n + 1, rng);
    EXPECT_EQ(conway_lift_axis(ex.pair, h, w), axis_hyperplane(ex.pair));
  }
}

TEST(Conway, WOnHRejected) {
  auto f = Field::make(5);
  const auto ex = extract_perspective_pair(frame_config(2, 5), 1, 2);
  const auto h = hyperplane_from_dual(f, std::vector<Code>{0, 0, 0, 1});
  EXPECT_EQ(code_of([&] { conway_lift(ex.pair, h, ProjPoint(f, {1, 2, 3, 0})); }), Errc::WInH);
}

// Extended Desargues properties over a grid of fields and dimensions.
class DesarguesProperties : public ::testing::TestWithParam<std::pair<int, std::uint32_t>> {};

TEST_P(DesarguesProperties, RandomSectionedPairs) {
  const auto [n, q] = GetParam();
  const auto f = gf(q);
  Rng rng(1000u * q + static_cast<std::uint64_t>(n));
  for (int rep = 0; rep < 6; ++rep) {
    const auto ex = random_sectioned_pair(n, f, rng);
    const auto v = find_vertex(ex.pair);
    ASSERT_EQ(v, ex.vertex);
    const auto edges = edge_intersections(ex.pair);
    ASSERT_EQ(edges.size(), binomial(static_cast<std::uint64_t>(n) + 1, 2));
    const auto axis = axis_hyperplane(ex.pair);
    for (const auto& [ij, p] : edges) {
      ASSERT_TRUE(axis.contains(p));
      ASSERT_NE(p, v);
      for (std::size_t k = 0; k < ex.pair.size(); ++k) ASSERT_TRUE(p != ex.pair.a()[k] && p != ex.pair.b()[k]);
    }
    for (int t = 1; t <= n - 1; ++t) {
      for (const auto& m : tspace_intersections(ex.pair, t)) ASSERT_EQ(m.meet.dim(), t - 1);
    }
    for (std::size_t k = 0; k < ex.pair.size(); ++k) ASSERT_EQ(meet(ex.pair.face_a(k), ex.pair.face_b(k)).dim(), n - 2);
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, DesarguesProperties,
                         ::testing::Values(std::pair{2, 3u}, std::pair{3, 3u}, std::pair{4, 3u}, std::pair{5, 3u},
                                           std::pair{2, 4u}, std::pair{3, 4u}, std::pair{4, 4u}, std::pair{5, 4u},
                                           std::pair{2, 5u}, std::pair{3, 5u}, std::pair{4, 5u}, std::pair{5, 5u},
                                           std::pair{2, 7u}, std::pair{3, 7u}, std::pair{4, 7u}, std::pair{5, 7u},
                                           std::pair{2, 9u}, std::pair{3, 9u}, std::pair{4, 9u}, std::pair{5, 9u}));

}  // namespace
}  // namespace pgd
