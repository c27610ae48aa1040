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

#include "pgd/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "pgd/combinatorics.hpp"

namespace pgd {

namespace {

constexpr int kMaxCols = 9;  // ambient dimension up to 8
constexpr std::size_t kMaxPoints = 1u << 16;
constexpr std::uint64_t kFlushEvery = 1u << 14;

using Row = std::array<Code, kMaxCols>;

// Rows spanning the annihilator of the given rows (which must be
// independent). Stack-only Gaussian elimination.
int annihilator(const Field& f, int cols, const Row* rows, int count, Row* out) {
  std::array<Row, kMaxCols> a{};
  for (int r = 0; r < count; ++r) a[static_cast<std::size_t>(r)] = rows[r];
  std::array<int, kMaxCols> pivot_of_row{};
  std::array<bool, kMaxCols> is_pivot{};
  int r = 0;
  for (int c = 0; c < cols && r < count; ++c) {
    int sel = r;
    while (sel < count && a[static_cast<std::size_t>(sel)][static_cast<std::size_t>(c)] == 0) ++sel;
    if (sel == count) continue;
    std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(r)]);
    auto& pr = a[static_cast<std::size_t>(r)];
    const Code s = f.inv(pr[static_cast<std::size_t>(c)]);
    for (int j = 0; j < cols; ++j) pr[static_cast<std::size_t>(j)] = f.mul(pr[static_cast<std::size_t>(j)], s);
    for (int i = 0; i < count; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      const Code factor = row[static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      const Code nf = f.neg(factor);
      for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = f.add(row[static_cast<std::size_t>(j)], f.mul(nf, pr[static_cast<std::size_t>(j)]));
    }
    pivot_of_row[static_cast<std::size_t>(r)] = c;
    is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }
  int k = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Row v{};
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(i)])] = f.neg(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)]);
    out[k++] = v;
  }
  return k;
}

struct Branch {
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
  std::uint64_t samples = 0;
  std::uint64_t sample_failures = 0;
  std::vector<std::vector<std::uint32_t>> kept;
};

class Search {
 public:
  Search(const EnumJob& job, int dim, std::size_t m, std::vector<ProjPoint> points, std::atomic<std::uint64_t>& global_nodes,
         std::atomic<bool>& stop)
      : job_(job), f_(*job.field), cols_(dim + 1), dim_(dim), m_(m), pts_(std::move(points)),
        global_(global_nodes), stop_(stop) {
    coords_.resize(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      Row r{};
      for (int c = 0; c < cols_; ++c) r[static_cast<std::size_t>(c)] = pts_[i].coords()[static_cast<std::size_t>(c)];
      coords_[i] = r;
    }
    if (job_.kind == EnumKind::SectionedConfigs && job_.sample_rate > 0) {
      stride_ = static_cast<std::uint64_t>(std::llround(1.0 / std::min(1.0, job_.sample_rate)));
    }
  }

  std::size_t size() const { return pts_.size(); }

  Branch run_branch(std::uint32_t first) {
    Branch b;
    branch_ = &b;
    chosen_.assign(m_, 0);
    chosen_[0] = first;
    ++b.nodes;
    if (m_ == 1) {
      b.leaves = 1;
      keep_leaf(b);
    } else {
      std::vector<std::uint32_t> rest;
      for (std::uint32_t i = first + 1; i < pts_.size(); ++i) rest.push_back(i);
      auto next = filter(1, rest, 0);
      if (next.size() + 1 >= m_) descend(1, next);
    }
    flush(b);
    branch_ = nullptr;
    return b;
  }

 private:
  // Candidates for position t (prefix chosen_[0..t-1]) from those valid for
  // position t-1 that come after position `from`.
  std::vector<std::uint32_t> filter(std::size_t t, const std::vector<std::uint32_t>& cand, std::size_t from) {
    const std::uint32_t x = chosen_[t - 1];
    std::array<Row, 64> cons;  // constraint rows
    int ncons = 0;
    bool span_mode = false;
    std::array<Row, kMaxCols> prefix;
    if (static_cast<int>(t) < dim_) {
      // Next point must avoid the span of the whole prefix.
      for (std::size_t i = 0; i < t; ++i) prefix[i] = coords_[chosen_[i]];
      ncons = annihilator(f_, cols_, prefix.data(), static_cast<int>(t), cons.data());
      span_mode = true;
    } else {
      // Every dim-subset of the prefix containing x spans a hyperplane to avoid.
      const int others = dim_ - 1;
      std::vector<Row> extra;
      for_each_combination(static_cast<int>(t) - 1, others, [&](const std::vector<int>& idx) {
        Row rows[kMaxCols];
        rows[0] = coords_[x];
        for (int i = 0; i < others; ++i) rows[i + 1] = coords_[chosen_[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]];
        Row normal[kMaxCols];
        annihilator(f_, cols_, rows, dim_, normal);
        extra.push_back(normal[0]);
        return true;
      });
      return filter_hyperplanes(cand, from, extra);
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = from; i < cand.size(); ++i) {
      const auto c = cand[i];
      if (c <= x) continue;
      bool outside = !span_mode;
      for (int k = 0; k < ncons && !outside; ++k) outside = dot(cons[static_cast<std::size_t>(k)], coords_[c]) != 0;
      if (outside) out.push_back(c);
    }
    return out;
  }

  std::vector<std::uint32_t> filter_hyperplanes(const std::vector<std::uint32_t>& cand, std::size_t from,
                                                const std::vector<Row>& normals) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = from; i < cand.size(); ++i) {
      const auto c = cand[i];
      bool ok = true;
      for (const auto& nrm : normals) {
        if (dot(nrm, coords_[c]) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(c);
    }
    return out;
  }

  Code dot(const Row& a, const Row& b) const {
    Code s = 0;
    for (int i = 0; i < cols_; ++i) s = f_.add(s, f_.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
    return s;
  }

  // cand: valid choices for position t, all greater than chosen_[t-1].
  void descend(std::size_t t, const std::vector<std::uint32_t>& cand) {
    if (stop_.load(std::memory_order_relaxed)) return;
    Branch& b = *branch_;
    if (t == m_ - 1) {
      const std::uint64_t before = b.leaves;
      b.leaves += cand.size();
      b.nodes += cand.size();
      if (stride_ != 0 || (job_.keep != 0 && b.kept.size() < job_.keep)) {
        for (std::size_t j = 0; j < cand.size(); ++j) {
          chosen_[t] = cand[j];
          if (stride_ != 0 && (before + j) % stride_ == 0) sample_leaf(b);
          if (job_.keep != 0 && b.kept.size() < job_.keep) keep_leaf(b);
        }
      }
      maybe_flush(b);
      return;
    }
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (cand.size() - j + t < m_) break;  // not enough candidates left
      chosen_[t] = cand[j];
      ++b.nodes;
      auto next = filter(t + 1, cand, j + 1);
      if (next.size() + t + 1 >= m_) descend(t + 1, next);
      maybe_flush(b);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void keep_leaf(Branch& b) { b.kept.emplace_back(chosen_.begin(), chosen_.end()); }

  void sample_leaf(Branch& b) {
    ++b.samples;
    std::vector<ProjPoint> pts;
    for (auto i : chosen_) pts.push_back(pts_[i]);
    try {
      const auto config = section_arc(Arc(std::move(pts)), *job_.avoid);
      if (config.size() != binomial(m_, 2)) ++b.sample_failures;
    } catch (const Error&) {
      ++b.sample_failures;
    }
  }

  void maybe_flush(Branch& b) {
    if (b.nodes - flushed_ >= kFlushEvery) flush(b);
  }

  void flush(Branch& b) {
    const std::uint64_t delta = b.nodes - flushed_;
    flushed_ = b.nodes;
    if (global_.fetch_add(delta, std::memory_order_relaxed) + delta > job_.budget) stop_.store(true);
  }

  const EnumJob& job_;
  const Field& f_;
  int cols_;
  int dim_;
  std::size_t m_;
  std::vector<ProjPoint> pts_;
  std::vector<Row> coords_;
  std::atomic<std::uint64_t>& global_;
  std::atomic<bool>& stop_;
  std::uint64_t stride_ = 0;
  std::vector<std::uint32_t> chosen_;
  Branch* branch_ = nullptr;
  std::uint64_t flushed_ = 0;
};

}  // namespace

const char* enum_kind_name(EnumKind kind) noexcept {
  switch (kind) {
    case EnumKind::Arcs: return "arcs";
    case EnumKind::Frames: return "frames";
    case EnumKind::SectionedConfigs: return "sectioned-configs";
  }
  return "?";
}

EnumResult run_enumeration(const EnumJob& job) {
  const auto start = std::chrono::steady_clock::now();
  if (!job.field) throw Error(Errc::InvalidField, "enumeration needs a field");
  if (job.budget == 0) throw Error(Errc::BudgetExceeded, "node budget must be positive");
  int dim = job.n;
  std::size_t m = job.m;
  std::optional<Subspace> avoid = job.avoid;
  switch (job.kind) {
    case EnumKind::Arcs: break;
    case EnumKind::Frames: m = static_cast<std::size_t>(job.n) + 2; break;
    case EnumKind::SectionedConfigs:
      dim = job.n + 1;
      m = static_cast<std::size_t>(job.n) + 3;
      if (!avoid) throw Error(Errc::NotAHyperplane, "sectioned configurations need a hyperplane");
      break;
  }
  if (dim < 1 || dim + 1 > kMaxCols) throw Error(Errc::BudgetExceeded, "ambient dimension outside 1.." + std::to_string(kMaxCols - 1));
  if (m < static_cast<std::size_t>(dim) + 1) throw Error(Errc::TooFew, "arcs of PG(" + std::to_string(dim) + ") need at least " + std::to_string(dim + 1) + " points");
  if (point_count(job.field->order(), dim) > kMaxPoints) throw Error(Errc::BudgetExceeded, "PG(" + std::to_string(dim) + "," + std::to_string(job.field->order()) + ") has too many points");
  if (avoid) {
    if (!avoid->is_hyperplane() || avoid->ambient() != dim) throw Error(Errc::NotAHyperplane, "avoided subspace is not a hyperplane of PG(" + std::to_string(dim) + ")");
    if (!avoid->field()->same_as(*job.field)) throw Error(Errc::MixedFields, "avoided hyperplane over another field");
  }

  std::vector<ProjPoint> points;
  for (auto& p : all_points(job.field, dim)) {
    if (!avoid || !avoid->contains(p)) points.push_back(std::move(p));
  }

  EnumJob effective = job;
  effective.avoid = avoid;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  const std::size_t branches = points.size();
  std::vector<Branch> results(branches);
  std::atomic<std::size_t> next{0};
  unsigned workers = job.threads ? job.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(branches, 1)));

  auto work = [&] {
    Search search(effective, dim, m, points, nodes, stop);
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= branches) break;
      // The smallest index of an m-subset leaves room for m-1 more.
      if (branches - i < m) continue;
      results[i] = search.run_branch(static_cast<std::uint32_t>(i));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (stop.load()) {
    throw Error(Errc::BudgetExceeded, "node budget of " + std::to_string(job.budget) + " exhausted");
  }

  EnumResult out;
  out.m = m;
  std::uint64_t unordered = 0;
  for (auto& b : results) {
    unordered += b.leaves;
    out.nodes += b.nodes;
    out.samples += b.samples;
    out.sample_failures += b.sample_failures;
    for (auto& k : b.kept) {
      if (out.examples.size() >= job.keep) break;
      std::vector<ProjPoint> arc;
      for (auto i : k) arc.push_back(points[i]);
      out.examples.emplace_back(std::move(arc));
    }
  }
  out.quotient = unordered;
  out.raw = unordered * factorial(m);
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

EnumResult count_arcs(int n, const FieldPtr& field, std::size_t m, const std::optional<Subspace>& avoid,
                      std::uint64_t budget) {
  EnumJob job;
  job.kind = EnumKind::Arcs;
  job.n = n;
  job.field = field;
  job.m = m;
  job.avoid = avoid;
  job.budget = budget;
  return run_enumeration(job);
}

EnumResult count_frames(int n, const FieldPtr& field, std::uint64_t budget) {
  EnumJob job;
  job.kind = EnumKind::Frames;
  job.n = n;
  job.field = field;
  job.budget = budget;
  return run_enumeration(job);
}

EnumResult count_sectioned_configs(int n, const FieldPtr& field, const Subspace& h, std::uint64_t budget) {
  EnumJob job;
  job.kind = EnumKind::SectionedConfigs;
  job.n = n;
  job.field = field;
  job.avoid = h;
  job.budget = budget;
  return run_enumeration(job);
}

std::uint64_t projectivity_group_order(int n, std::uint64_t q) {
  unsigned __int128 order = 1;
  constexpr unsigned __int128 kLimit = ~std::uint64_t{0};
  auto check = [&] {
    if (order > kLimit) throw Error(Errc::BudgetExceeded, "group order exceeds 64 bits");
  };
  for (int i = 0; i < n * (n + 1) / 2; ++i) {
    order *= q;
    check();
  }
  unsigned __int128 pw = q;
  for (int i = 2; i <= n + 1; ++i) {
    pw *= q;
    order *= pw - 1;
    check();
  }
  return static_cast<std::uint64_t>(order);
}

}  // namespace pgd
