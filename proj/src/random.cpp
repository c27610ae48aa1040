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

#include "pgd/random.hpp"

namespace pgd {

ProjPoint random_point(const FieldPtr& field, int n, Rng& rng) {
  std::vector<Code> v(static_cast<std::size_t>(n) + 1);
  while (true) {
    bool nonzero = false;
    for (auto& c : v) {
      c = static_cast<Code>(rng.below(field->order()));
      nonzero |= c != 0;
    }
    if (nonzero) return {field, v};
  }
}

Subspace random_hyperplane(const FieldPtr& field, int n, Rng& rng) {
  const ProjPoint normal = random_point(field, n, rng);
  return hyperplane_from_dual(field, normal.coords());
}

}  // namespace pgd
