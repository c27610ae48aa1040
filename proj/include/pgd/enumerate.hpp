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

/// @file enumerate.hpp
/// Exhaustive counting of arcs, frames and sectioned configurations in small
/// projective spaces.
///
/// Counts are of ordered tuples. The search itself walks increasing index
/// subsets of the canonical point list (all_points) and multiplies by m!,
/// which is exact because the arc property does not depend on order.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgd/desargues.hpp"

namespace pgd {

enum class EnumKind { Arcs, Frames, SectionedConfigs };

const char* enum_kind_name(EnumKind kind) noexcept;

struct EnumJob {
  EnumKind kind = EnumKind::Arcs;
  int n = 2;            // ambient dimension searched (PG(n+1) for sectioned configs)
  FieldPtr field;
  std::size_t m = 0;    // arc size; ignored for frames and sectioned configs
  std::optional<Subspace> avoid;
  std::uint64_t budget = 1'000'000'000;  // prefix extensions
  unsigned threads = 0;                   // 0: hardware concurrency
  /// Fraction of leaves of each first-point branch that are sectioned and
  /// checked (sectioned configs only).
  double sample_rate = 0.01;
  /// Keep the first `keep` arcs (as unordered sets in canonical order).
  std::size_t keep = 0;
};

struct EnumResult {
  std::uint64_t raw = 0;       // ordered tuples
  std::uint64_t quotient = 0;  // raw / m!
  std::size_t m = 0;
  std::uint64_t nodes = 0;
  double wall_ms = 0;
  std::uint64_t samples = 0;
  std::uint64_t sample_failures = 0;
  std::vector<Arc> examples;
};

/// Runs a job. Throws BudgetExceeded when the node budget or the point-count
/// ceiling (2^16 points) is exceeded, TooFew when m < n+1, NotAHyperplane for
/// a bad avoided subspace.
EnumResult run_enumeration(const EnumJob& job);

EnumResult count_arcs(int n, const FieldPtr& field, std::size_t m, const std::optional<Subspace>& avoid = std::nullopt,
                      std::uint64_t budget = 1'000'000'000);
EnumResult count_frames(int n, const FieldPtr& field, std::uint64_t budget = 1'000'000'000);
/// Ordered (n+3)-arcs of PG(n+1) with no point on h; a sample of them is
/// sectioned by h and checked to give C(n+3,2) distinct points.
EnumResult count_sectioned_configs(int n, const FieldPtr& field, const Subspace& h,
                                   std::uint64_t budget = 1'000'000'000);

/// |PGL(n+1,q)| = q^(n(n+1)/2) (q^2-1)(q^3-1)...(q^(n+1)-1). Throws
/// BudgetExceeded if the value does not fit in 64 bits.
std::uint64_t projectivity_group_order(int n, std::uint64_t q);

}  // namespace pgd
