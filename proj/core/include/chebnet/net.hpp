#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chebnet/genome.hpp"
#include "chebnet/kernel.hpp"
#include "chebnet/surface.hpp"

namespace chebnet {

struct MappingError : SurfaceError {
  using SurfaceError::SurfaceError;
};

/// Grid index of a net node: i counts along the first guideline family, j
/// along the second; signs select the quadrant and (0,0) is the seed A.
struct GridIndex {
  int i = 0;
  int j = 0;
  auto operator<=>(const GridIndex&) const = default;
};

enum class NodeStatus { ok, boundary };

struct NetNode {
  Vec3 pos;
  NodeStatus status = NodeStatus::ok;
};

/// Equal-edge net produced by the compass method. Node iteration order is
/// (i, j) lexicographic, which callers rely on for deterministic output.
class TchebychevNet {
 public:
  using NodeMap = std::map<GridIndex, NetNode>;

  explicit TchebychevNet(double width = 1.0) : width_(width) {}

  double width() const { return width_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const NetNode* find(int i, int j) const {
    auto it = nodes_.find({i, j});
    return it == nodes_.end() ? nullptr : &it->second;
  }
  bool contains(int i, int j) const { return nodes_.count({i, j}) > 0; }
  void insert(int i, int j, const Vec3& pos, NodeStatus status = NodeStatus::ok) {
    nodes_.insert_or_assign({i, j}, NetNode{pos, status});
  }

  NodeMap::const_iterator begin() const { return nodes_.begin(); }
  NodeMap::const_iterator end() const { return nodes_.end(); }

  /// True iff every interior index has its three staircase predecessors:
  /// (i,j) with |i|,|j| >= 1 implies (i-sign(i), j), (i, j-sign(j)) and
  /// (i-sign(i), j-sign(j)) are present.
  bool staircase_closed() const;

  /// Recompute node statuses: a node with all four grid neighbors present is
  /// ok, anything on the rim of the index set is boundary.
  void mark_boundaries();

 private:
  NodeMap nodes_;
  double width_;
};

struct NetStats {
  double c_max = 0.0;
  double c_mean = 0.0;
  double c_top_mean = 0.0;   // mean of the top `top_fraction` of curvatures
  double top_fraction = 0.1;
  std::size_t node_count = 0;
  std::size_t curvature_samples = 0;
  double max_edge_error = 0.0;  // max | ||edge|| - w | / w
};

struct ValidityReport {
  bool complete = false;
  bool overlap_free = false;
  double coverage_ratio = 0.0;
  /// Smallest distance between non-adjacent nodes (grid distance >= 2),
  /// divided by w. Diagnostic for how close the net is to folding.
  double min_clearance = 0.0;
  std::vector<std::string> messages;
};

/// Validation thresholds. The completeness cut-off and the proximity factor
/// are conventions, not derived quantities; all three can be tuned per run.
/// The defaults are calibrated so that the reference mappings (hemisphere
/// trial sweep, hypar ruled net, sinusoid lattice) validate while folded
/// nets are rejected.
struct ValidityParams {
  double coverage_threshold = 0.95;
  double proximity_factor = 0.56;  // non-adjacent nodes closer than this * w overlap
  /// Compass nets stop up to one whole step short of the domain edge, so
  /// coverage is measured against the extent eroded by this fraction of w.
  double boundary_band = 0.5;
};

/// Trace one guideline branch: starting at `start` (already on the surface)
/// with the given azimuth, apply guideline_step at most
/// min(max_steps, turns.size() + 1) times, turning by turns[k] before step
/// k + 1. Returns the ordered points including the start; stops early when a
/// step leaves the domain or finds no intersection.
std::vector<Vec3> trace_guideline(const SurfaceSpec& spec, const Vec3& start,
                                  Heading start_azimuth, std::span<const double> turns,
                                  double w, int max_steps);

/// Run the compass method for a genome: lift A, trace the four guideline
/// branches, then fill each quadrant in i+j wavefront order with compass
/// steps. Cells whose step fails are left out; the rays depending on them
/// stop there while the rest of the quadrant continues.
TchebychevNet map_surface(const SurfaceSpec& spec, const Genome& genome, double w);

/// Coverage and overlap checks for a mapped net. Coverage compares the
/// projected area of the net's cells against the surface's projected extent
/// within the domain box; overlap looks for non-adjacent nodes closer than
/// proximity_factor * w and for projected quads with inconsistent
/// orientation.
ValidityReport validate_net(const TchebychevNet& net, const SurfaceSpec& spec, double w,
                            const ValidityParams& params = {});

/// Curvature and edge statistics. Curvature is evaluated per bar family at
/// every node that has both neighbors in that family.
NetStats net_stats(const TchebychevNet& net, double top_fraction = 0.1);

namespace detail {
/// Fill one quadrant (sx, sy in {-1, +1}) of `net` in wavefront order.
/// Reads only guideline nodes and this quadrant's cells, so quadrants can be
/// processed in any order with identical results.
void fill_quadrant(TchebychevNet& net, const SurfaceSpec& spec, double w, int sx, int sy,
                   int max_i, int max_j);
}  // namespace detail

}  // namespace chebnet
