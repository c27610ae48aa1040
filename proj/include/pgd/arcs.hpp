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

/// @file arcs.hpp
/// Simplexes, arcs and coordinate frames.

#pragma once

#include <span>
#include <vector>

#include "pgd/projlin.hpp"

namespace pgd {

/// Ordered point set of PG(n,q) in which every n+1 points span the space.
/// Label i of the figure is index i-1.
class Arc {
 public:
  /// Validates the arc property; throws NotAnArc, TooFew or AmbientMismatch.
  explicit Arc(std::vector<ProjPoint> points);

  int ambient() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return points_.front().field(); }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const ProjPoint& operator[](std::size_t i) const { return points_.at(i); }

 private:
  int n_;
  std::vector<ProjPoint> points_;
};

/// Exactly n+1 points of a common PG(n) spanning the whole space.
/// Throws WrongCount or AmbientMismatch.
bool is_simplex(std::span<const ProjPoint> points);

/// At least n+1 points of a common PG(n), every n+1 of them a simplex.
/// Throws TooFew or AmbientMismatch.
bool is_arc(std::span<const ProjPoint> points);

/// A coordinate frame (n+2 points) of PG(n) with no point on h.
///
/// The unit points together with (1,...,1,z) avoid x_1 + ... + x_{n+1} = 0
/// whenever z != 0 and n+z != 0 (the last point has n ones); z is the first
/// such element in field order. The frame is then carried onto h by collineation_to_hyperplane.
/// Throws FieldTooSmall for q = 2 and NotAHyperplane.
Arc frame_off_hyperplane(const Subspace& h);

}  // namespace pgd
