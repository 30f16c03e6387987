// Copyright 2026 The pnpseq Authors
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

#ifndef PNPSEQ_SEQUENCING_HPP_
#define PNPSEQ_SEQUENCING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pnpseq/core.hpp"
#include "pnpseq/robot.hpp"

// Picking-order selection over a frozen snapshot of object positions.
//
// All planners share one plan quality: the number of picks completed before
// the first miss, then the time those picks take (PlanKey). When every
// object can be picked this is just the total execution time.

namespace pnpseq {

struct SnapshotObject {
  int id = 0;
  Point2 pos;  // position at planning time
};

// Objects at planning time t0, kept sorted by id; the sorted position is the
// dense index planners use for bit-set subsets, and lower index wins ties.
class PlanningSnapshot {
 public:
  // Throws InputError on duplicate ids, or on positions outside the y band
  // or right of x_right. Positions left of x_left are allowed (misses).
  PlanningSnapshot(std::vector<SnapshotObject> objects, const PnpModel& model);

  std::span<const SnapshotObject> objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  const PnpModel& model() const { return *model_; }
  const Workspace& workspace() const { return model_->workspace(); }

  // Dense index for an id; nullopt if absent.
  std::optional<std::size_t> index_of(int id) const;

  // Same ids, positions advected by dt.
  PlanningSnapshot advanced(double dt) const;

 private:
  std::vector<SnapshotObject> objects_;
  const PnpModel* model_;
};

enum class GreedyPolicy { kFifo, kSpt, kEuclidean };

std::string_view to_string(GreedyPolicy policy);

// Instrumentation for tests and benchmarks.
struct SpliceRecord {
  std::size_t window_start = 0;
  PlanKey before;
  PlanKey after;  // key of the candidate splice
  bool accepted = false;
};

struct PlanStats {
  std::uint64_t pnp_calls = 0;
  std::uint64_t permutations = 0;
  std::uint64_t sweeps = 0;
  std::vector<SpliceRecord> splices;
};

inline constexpr std::size_t kOptSeqMaxObjects = 10;
inline constexpr std::size_t kOptSeqDpMaxObjects = 24;

// Executes `order` from planning time: each object is advected by the time
// already spent. Stops at the first miss (plan infeasible, total +inf).
// Throws InputError for unknown or repeated ids.
PickPlan evaluate_sequence(const PlanningSnapshot& snap,
                           std::span<const int> order,
                           PlanStats* stats = nullptr);

// One greedy decision. Fifo: smallest x. Spt: smallest PnP time (misses
// ignored). Euclidean: smallest distance to the drop-off. Ties go to the
// lowest id. Throws InputError on an empty snapshot, NoFeasiblePick when
// Spt has only misses.
int greedy_select(const PlanningSnapshot& snap, GreedyPolicy policy,
                  PlanStats* stats = nullptr);

// Full order produced by applying the greedy rule pick after pick, skipping
// objects that have become misses; those are appended at the end by id.
std::vector<int> greedy_order(const PlanningSnapshot& snap,
                              GreedyPolicy policy, PlanStats* stats = nullptr);

// Exhaustive search over all n! orders (n <= 10, GuardLimit otherwise).
// Ties go to the lexicographically smallest order.
PickPlan opt_seq(const PlanningSnapshot& snap, PlanStats* stats = nullptr);

// Subset dynamic program with one back-pointer per subset (n <= 24).
// Same optimal key as opt_seq. If no order picks everything, returns the
// best largest pickable subset in optimal order followed by the remaining
// ids in ascending order.
PickPlan opt_seq_dp(const PlanningSnapshot& snap, PlanStats* stats = nullptr);

struct SubOptParams {
  std::optional<std::size_t> sweeps;  // m1; unset means n
  std::size_t window = 9;             // m2
  GreedyPolicy init = GreedyPolicy::kFifo;
};

// Windowed local re-optimisation: starting from the greedy `init` order,
// each sweep slides a window of m2 consecutive positions over the order and
// re-solves it with opt_seq_dp from the time the prefix ends. A splice is
// kept only if it improves the plan key, so the result is never worse than
// the initial order. Sweeps stop early once one leaves the order unchanged.
PickPlan sub_opt_dp(const PlanningSnapshot& snap, SubOptParams params = {},
                    PlanStats* stats = nullptr);

}  // namespace pnpseq

#endif  // PNPSEQ_SEQUENCING_HPP_
