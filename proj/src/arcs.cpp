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

#include "pgd/arcs.hpp"

#include "pgd/combinatorics.hpp"

namespace pgd {

namespace {

void check_common_space(std::span<const ProjPoint> points) {
  for (const auto& p : points) {
    if (p.ambient() != points.front().ambient()) throw Error(Errc::AmbientMismatch, "points in different spaces");
    if (!p.field()->same_as(*points.front().field())) throw Error(Errc::MixedFields, "points over different fields");
  }
}

std::size_t rank_of(std::span<const ProjPoint> points) {
  const auto& f = *points.front().field();
  linalg::Matrix m(points.size(), points.front().coords().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::copy(points[i].coords().begin(), points[i].coords().end(), m.row(i));
  }
  return linalg::rank(f, std::move(m));
}

}  // namespace

bool is_simplex(std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(Errc::WrongCount, "no points");
  check_common_space(points);
  const auto need = static_cast<std::size_t>(points.front().ambient()) + 1;
  if (points.size() != need) {
    throw Error(Errc::WrongCount, "simplex needs " + std::to_string(need) + " points, got " + std::to_string(points.size()));
  }
  return rank_of(points) == need;
}

bool is_arc(std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(Errc::TooFew, "no points");
  check_common_space(points);
  const int n = points.front().ambient();
  const int m = static_cast<int>(points.size());
  if (m < n + 1) throw Error(Errc::TooFew, "arc needs at least " + std::to_string(n + 1) + " points");
  std::vector<ProjPoint> subset;
  return for_each_combination(m, n + 1, [&](const std::vector<int>& idx) {
    subset.clear();
    for (int i : idx) subset.push_back(points[static_cast<std::size_t>(i)]);
    return rank_of(subset) == static_cast<std::size_t>(n) + 1;
  });
}

Arc::Arc(std::vector<ProjPoint> points) : n_(points.empty() ? -1 : points.front().ambient()), points_(std::move(points)) {
  if (!is_arc(points_)) throw Error(Errc::NotAnArc, "some " + std::to_string(n_ + 1) + " points are dependent");
}

Arc frame_off_hyperplane(const Subspace& h) {
  if (!h.is_hyperplane()) throw Error(Errc::NotAHyperplane, "dimension " + std::to_string(h.dim()));
  const FieldPtr& field = h.field();
  const Field& f = *field;
  if (f.order() <= 2) throw Error(Errc::FieldTooSmall, "a frame avoiding a hyperplane needs q > 2");
  const int n = h.ambient();
  const auto k = static_cast<std::size_t>(n) + 1;

  // (1,...,1,z) has n ones, so it is off K iff n + z != 0.
  const Code n_ones = f.from_integer(n);
  Code z = 0;
  for (Code c = 1; c < f.order(); ++c) {
    if (f.add(n_ones, c) != 0) {
      z = c;
      break;
    }
  }

  std::vector<ProjPoint> frame;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Code> e(k, 0);
    e[i] = 1;
    frame.emplace_back(field, std::move(e));
  }
  std::vector<Code> last(k, 1);
  last.back() = z;
  frame.emplace_back(field, std::move(last));

  const auto unit = hyperplane_from_dual(field, std::vector<Code>(k, 1));
  const auto c = collineation_to_hyperplane(unit, h);
  for (auto& p : frame) {
    p = c(p);
    if (h.contains(p)) throw Error(Errc::TheoremViolation, "frame point " + p.to_string() + " lies on the hyperplane");
  }
  return Arc(std::move(frame));
}

}  // namespace pgd
