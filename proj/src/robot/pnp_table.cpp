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

#include "pnpseq/pnp_table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pnpseq/simd.hpp"
#include "pnpseq/text.hpp"

namespace pnpseq {

namespace {

constexpr std::string_view kMagic = "pnpseq-table";
constexpr int kFormatVersion = 1;
constexpr int kScanChunk = 16;

void check_resolution(GridResolution res) {
  if (res.rows < 2 || res.cols < 2) {
    throw ConfigError("table resolution must be at least 2 x 2");
  }
}

// Value on the row pair (row, row + 1) blended by fy, at column coordinate cx.
double row_pair_value(std::span<const double> lower,
                      std::span<const double> upper, double fy, double cx,
                      int cols) {
  const int j = std::min(static_cast<int>(std::floor(cx)), cols - 2);
  const double fx = cx - j;
  const double h0 = lower[j] + fy * (upper[j] - lower[j]);
  const double h1 = lower[j + 1] + fy * (upper[j + 1] - lower[j + 1]);
  return h0 + fx * (h1 - h0);
}

std::string expect_key(std::istream& in, std::string_view key) {
  std::string k;
  std::string v;
  if (!(in >> k >> v) || k != key) {
    throw InputError("table file: expected '" + std::string(key) + "'");
  }
  return v;
}

void read_grid(std::istream& in, std::string_view label, std::size_t count,
               std::vector<double>& out) {
  std::string tok;
  if (!(in >> tok) || tok != label) {
    throw InputError("table file: expected section '" + std::string(label) +
                     "'");
  }
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(in >> tok)) throw InputError("table file: truncated grid");
    out[i] = parse_double(tok);
  }
}

void write_grid(std::ostream& out, std::string_view label,
                const std::vector<double>& values, GridResolution res) {
  out << label << '\n';
  for (int r = 0; r < res.rows; ++r) {
    for (int c = 0; c < res.cols; ++c) {
      if (c) out << ' ';
      out << format_double(values[static_cast<std::size_t>(r) * res.cols + c]);
    }
    out << '\n';
  }
}

bool same_value(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || simd::same_bits(a, b);
}

}  // namespace

PnpTimeTable::PnpTimeTable(Workspace ws, GridResolution res,
                           std::vector<double> go, std::vector<double> back,
                           std::string source)
    : ws_(ws),
      res_(res),
      go_(std::move(go)),
      back_(std::move(back)),
      source_(std::move(source)),
      cell_w_(0.0),
      cell_h_(0.0) {
  check_resolution(res_);
  const auto n = static_cast<std::size_t>(res_.rows) * res_.cols;
  if (go_.size() != n || back_.size() != n) {
    throw ConfigError("table grids do not match the resolution");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(go_[i]) != std::isnan(back_[i])) {
      throw ConfigError("go and return grids disagree on reachability");
    }
    if (go_[i] < 0.0 || back_[i] < 0.0) {
      throw ConfigError("table times must be non-negative");
    }
  }
  if (source_.find('\n') != std::string::npos) {
    throw ConfigError("table source label must be a single line");
  }
  cell_w_ = ws_.width() / res_.cols;
  cell_h_ = ws_.y_top() / res_.rows;
}

double PnpTimeTable::node_x(int col) const {
  return ws_.x_left() + (col + 0.5) * cell_w_;
}

double PnpTimeTable::node_y(int row) const { return (row + 0.5) * cell_h_; }

std::span<const double> PnpTimeTable::go_row(int row) const {
  return std::span<const double>(go_).subspan(
      static_cast<std::size_t>(row) * res_.cols, res_.cols);
}

std::span<const double> PnpTimeTable::back_row(int row) const {
  return std::span<const double>(back_).subspan(
      static_cast<std::size_t>(row) * res_.cols, res_.cols);
}

std::pair<int, double> PnpTimeTable::row_bracket(double y) const {
  const double cy =
      std::clamp(y / cell_h_ - 0.5, 0.0, static_cast<double>(res_.rows - 1));
  const int i = std::min(static_cast<int>(std::floor(cy)), res_.rows - 2);
  return {i, cy - i};
}

double PnpTimeTable::col_coord(double x) const {
  return std::clamp((x - ws_.x_left()) / cell_w_ - 0.5, 0.0,
                    static_cast<double>(res_.cols - 1));
}

std::optional<ReachTimes> PnpTimeTable::lookup(Point2 p) const {
  if (!ws_.contains(p)) return std::nullopt;
  const auto [row, fy] = row_bracket(p.y);
  const double cx = col_coord(p.x);
  const double go =
      row_pair_value(go_row(row), go_row(row + 1), fy, cx, res_.cols);
  const double back =
      row_pair_value(back_row(row), back_row(row + 1), fy, cx, res_.cols);
  if (std::isnan(go) || std::isnan(back)) return std::nullopt;
  return ReachTimes{go, back};
}

double PnpTimeTable::reachable_fraction() const {
  const auto finite = std::count_if(go_.begin(), go_.end(),
                                    [](double v) { return !std::isnan(v); });
  return static_cast<double>(finite) / static_cast<double>(go_.size());
}

bool operator==(const PnpTimeTable& a, const PnpTimeTable& b) {
  if (!(a.ws_ == b.ws_) || !(a.res_ == b.res_) || a.source_ != b.source_) {
    return false;
  }
  for (std::size_t i = 0; i < a.go_.size(); ++i) {
    if (!same_value(a.go_[i], b.go_[i]) ||
        !same_value(a.back_[i], b.back_[i])) {
      return false;
    }
  }
  return true;
}

PnpTimeTable build_pnp_table(const ReachModel& reach, const Workspace& ws,
                             GridResolution res) {
  check_resolution(res);
  const auto n = static_cast<std::size_t>(res.rows) * res.cols;
  std::vector<double> go(n);
  std::vector<double> back(n);
  const double w = ws.width() / res.cols;
  const double h = ws.y_top() / res.rows;
  for (int r = 0; r < res.rows; ++r) {
    for (int c = 0; c < res.cols; ++c) {
      const Point2 node{ws.x_left() + (c + 0.5) * w, (r + 0.5) * h};
      const auto times = reach.reach(node);
      const auto k = static_cast<std::size_t>(r) * res.cols + c;
      go[k] = times ? times->go : std::nan("");
      back[k] = times ? times->back : std::nan("");
    }
  }
  return PnpTimeTable(ws, res, std::move(go), std::move(back),
                      reach.describe());
}

void write_pnp_table(std::ostream& out, const PnpTimeTable& table) {
  const Workspace& ws = table.workspace();
  const GridResolution res = table.resolution();
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "source " << (table.source().empty() ? "-" : table.source()) << '\n';
  out << "x_left " << format_double(ws.x_left()) << '\n';
  out << "x_right " << format_double(ws.x_right()) << '\n';
  out << "y_top " << format_double(ws.y_top()) << '\n';
  out << "base_x " << format_double(ws.robot_base().x) << '\n';
  out << "rows " << res.rows << '\n';
  out << "cols " << res.cols << '\n';
  write_grid(out, "go", table.go_values(), res);
  write_grid(out, "return", table.back_values(), res);
  out << "end\n";
}

PnpTimeTable read_pnp_table(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) {
    throw InputError("not a pnpseq table file");
  }
  if (version != kFormatVersion) {
    throw InputError("unsupported table format version " +
                     std::to_string(version));
  }
  std::string key;
  std::string source;
  if (!(in >> key) || key != "source") {
    throw InputError("table file: expected 'source'");
  }
  in >> std::ws;
  std::getline(in, source);
  if (source == "-") source.clear();

  const double x_left = parse_double(expect_key(in, "x_left"));
  const double x_right = parse_double(expect_key(in, "x_right"));
  const double y_top = parse_double(expect_key(in, "y_top"));
  const double base_x = parse_double(expect_key(in, "base_x"));
  GridResolution res;
  res.rows = std::stoi(expect_key(in, "rows"));
  res.cols = std::stoi(expect_key(in, "cols"));
  check_resolution(res);
  const auto n = static_cast<std::size_t>(res.rows) * res.cols;

  std::vector<double> go;
  std::vector<double> back;
  read_grid(in, "go", n, go);
  read_grid(in, "return", n, back);
  std::string tail;
  if (!(in >> tail) || tail != "end") {
    throw InputError("table file: missing 'end'");
  }
  return PnpTimeTable(Workspace(x_left, x_right, y_top, base_x), res,
                      std::move(go), std::move(back), std::move(source));
}

void save_pnp_table(const std::filesystem::path& path,
                    const PnpTimeTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_pnp_table(out, table);
  if (!out) throw InputError("failed writing " + path.string());
}

PnpTimeTable load_pnp_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  return read_pnp_table(in);
}

TableModel::TableModel(std::shared_ptr<const PnpTimeTable> table)
    : PnpModel(table ? table->workspace() : Workspace::standard()),
      table_(std::move(table)) {
  if (!table_) throw ConfigError("table model needs a table");
}

std::optional<ReachTimes> TableModel::reach(Point2 pick) const {
  return table_->lookup(pick);
}

std::string TableModel::describe() const {
  return "table/" + (table_->source().empty() ? std::string("unnamed")
                                              : table_->source());
}

PnpOutcome TableModel::intercept(Point2 obj_pos) const {
  const PnpTimeTable& tab = *table_;
  const int cols = tab.resolution().cols;
  const double x = obj_pos.x;
  const auto [row, fy] = tab.row_bracket(obj_pos.y);
  const auto go_lo = tab.go_row(row);
  const auto go_hi = tab.go_row(row + 1);
  const auto back_lo = tab.back_row(row);
  const auto back_hi = tab.back_row(row + 1);

  auto go_at = [&](double px) {
    return row_pair_value(go_lo, go_hi, fy, tab.col_coord(px), cols);
  };
  auto hit_at = [&](double t) -> std::optional<PnpOutcome> {
    const Point2 pick{x - t, obj_pos.y};
    const double back =
        row_pair_value(back_lo, back_hi, fy, tab.col_coord(pick.x), cols);
    if (std::isnan(back)) return std::nullopt;
    return PnpOutcome(Hit{t + back, t, pick});
  };

  bool saw_reachable = false;
  double t_prev = 0.0;
  double g_prev = go_at(x);
  if (!std::isnan(g_prev)) {
    saw_reachable = true;
    if (g_prev <= 0.0) {
      if (auto h = hit_at(0.0)) return *h;
    }
  }

  // g is linear between consecutive breakpoints, so one sign change brackets
  // the exact root.
  auto try_segment = [&](double t, double g) -> std::optional<PnpOutcome> {
    std::optional<PnpOutcome> found;
    if (!std::isnan(g)) saw_reachable = true;
    if (!std::isnan(g_prev) && !std::isnan(g) && g_prev > 0.0 && g <= 0.0) {
      const double root = t_prev + g_prev * (t - t_prev) / (g_prev - g);
      found = hit_at(root);
    }
    t_prev = t;
    g_prev = g;
    return found;
  };

  int j = std::min(static_cast<int>(std::floor(tab.col_coord(x))), cols - 1);
  while (j >= 0 && tab.node_x(j) >= x) --j;

  std::array<double, kScanChunk> blended{};
  while (j >= 0) {
    const int lo = std::max(0, j - (kScanChunk - 1));
    const auto count = static_cast<std::size_t>(j - lo + 1);
    simd::lerp_rows(go_lo.subspan(lo, count), go_hi.subspan(lo, count), fy,
                    std::span<double>(blended.data(), count));
    for (int c = j; c >= lo; --c) {
      const double t = x - tab.node_x(c);
      if (auto h = try_segment(t, blended[c - lo] - t)) return *h;
    }
    j = lo - 1;
  }

  const double x_left = tab.workspace().x_left();
  if (x > x_left) {
    const double t = x - x_left;
    if (auto h = try_segment(t, go_at(x_left) - t)) return *h;
  }
  return Miss{saw_reachable ? MissReason::kExitsWorkspace
                            : MissReason::kUnreachable};
}

}  // namespace pnpseq
