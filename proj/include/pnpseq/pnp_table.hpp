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

#ifndef PNPSEQ_PNP_TABLE_HPP_
#define PNPSEQ_PNP_TABLE_HPP_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnpseq/core.hpp"
#include "pnpseq/robot.hpp"

namespace pnpseq {

struct GridResolution {
  int rows = 100;  // along y
  int cols = 100;  // along x

  friend bool operator==(const GridResolution&, const GridResolution&) =
      default;
};

// Precomputed go/return times sampled at workspace cell centers.
//
// Node (row, col) sits at (x_left + (col + 0.5) w, (row + 0.5) h). Lookups
// interpolate bilinearly (first across rows, then along x) and clamp to the
// outermost nodes near the workspace edge. A cell with any unreachable
// corner (NaN) is unreachable as a whole.
class PnpTimeTable {
 public:
  PnpTimeTable(Workspace ws, GridResolution res, std::vector<double> go,
               std::vector<double> back, std::string source = {});

  const Workspace& workspace() const { return ws_; }
  GridResolution resolution() const { return res_; }
  const std::string& source() const { return source_; }

  double cell_width() const { return cell_w_; }
  double cell_height() const { return cell_h_; }
  double node_x(int col) const;
  double node_y(int row) const;

  std::span<const double> go_row(int row) const;
  std::span<const double> back_row(int row) const;
  const std::vector<double>& go_values() const { return go_; }
  const std::vector<double>& back_values() const { return back_; }

  // nullopt outside the workspace or in an unreachable cell.
  std::optional<ReachTimes> lookup(Point2 p) const;

  // Row pair (lower index, blend weight) that brackets y.
  std::pair<int, double> row_bracket(double y) const;
  // Column coordinate of x in node units, clamped to [0, cols - 1].
  double col_coord(double x) const;

  double reachable_fraction() const;

  friend bool operator==(const PnpTimeTable& a, const PnpTimeTable& b);

 private:
  Workspace ws_;
  GridResolution res_;
  std::vector<double> go_;
  std::vector<double> back_;
  std::string source_;
  double cell_w_;
  double cell_h_;
};

// Samples reach.reach() at every node. Throws ConfigError for resolutions
// below 2 x 2.
PnpTimeTable build_pnp_table(const ReachModel& reach, const Workspace& ws,
                             GridResolution res = {});

// Text format, see docs/table_format.md. Values use the shortest round-trip
// decimal form, so write/read is bit-exact.
void write_pnp_table(std::ostream& out, const PnpTimeTable& table);
PnpTimeTable read_pnp_table(std::istream& in);
void save_pnp_table(const std::filesystem::path& path,
                    const PnpTimeTable& table);
PnpTimeTable load_pnp_table(const std::filesystem::path& path);

// PnP times from a table. The go time along a row pair is piecewise linear
// in x, so the interception fixed point is found exactly: scan the node
// breakpoints for the first sign change of go(x - t) - t, then solve the
// linear segment.
class TableModel final : public PnpModel {
 public:
  explicit TableModel(std::shared_ptr<const PnpTimeTable> table);

  PnpOutcome intercept(Point2 obj_pos) const override;
  std::optional<ReachTimes> reach(Point2 pick) const override;
  std::string describe() const override;

  const PnpTimeTable& table() const { return *table_; }

 private:
  std::shared_ptr<const PnpTimeTable> table_;
};

}  // namespace pnpseq

#endif  // PNPSEQ_PNP_TABLE_HPP_
