#include "chebnet/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <unordered_map>

namespace chebnet {

bool TchebychevNet::staircase_closed() const {
  for (const auto& [idx, node] : nodes_) {
    if (idx.i == 0 || idx.j == 0) continue;
    const int si = idx.i > 0 ? 1 : -1;
    const int sj = idx.j > 0 ? 1 : -1;
    if (!contains(idx.i - si, idx.j) || !contains(idx.i, idx.j - sj) ||
        !contains(idx.i - si, idx.j - sj))
      return false;
  }
  return true;
}

void TchebychevNet::mark_boundaries() {
  for (auto& [idx, node] : nodes_) {
    const bool interior = contains(idx.i - 1, idx.j) && contains(idx.i + 1, idx.j) &&
                          contains(idx.i, idx.j - 1) && contains(idx.i, idx.j + 1);
    node.status = interior ? NodeStatus::ok : NodeStatus::boundary;
  }
}

std::vector<Vec3> trace_guideline(const SurfaceSpec& spec, const Vec3& start,
                                  Heading start_azimuth, std::span<const double> turns,
                                  double w, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (std::fabs(spec.evaluate(start)) > spec.eval_tol())
    throw MappingError("guideline start is not on the surface");

  std::vector<Vec3> points{start};
  Heading h = start_azimuth;
  const int steps = std::min<int>(max_steps, static_cast<int>(turns.size()) + 1);
  for (int s = 0; s < steps; ++s) {
    if (s > 0) h = h.turned(turns[static_cast<std::size_t>(s - 1)]);
    const StepOutcome out = guideline_step(spec, points.back(), h, w);
    if (!out.found()) break;
    points.push_back(out.point);
  }
  return points;
}

namespace detail {

void fill_quadrant(TchebychevNet& net, const SurfaceSpec& spec, double w, int sx, int sy,
                   int max_i, int max_j) {
  for (int k = 2; k <= max_i + max_j; ++k) {
    bool placed_any = false;
    for (int i = std::max(1, k - max_j); i <= std::min(max_i, k - 1); ++i) {
      const int j = k - i;
      const NetNode* left = net.find(sx * (i - 1), sy * j);
      const NetNode* up = net.find(sx * i, sy * (j - 1));
      const NetNode* diag = net.find(sx * (i - 1), sy * (j - 1));
      if (!left || !up || !diag) continue;
      if (left->pos == up->pos) continue;  // degenerate (folded) genome
      const StepOutcome out = compass_step(spec, left->pos, up->pos, diag->pos, w);
      if (!out.found()) continue;
      net.insert(sx * i, sy * j, out.point);
      placed_any = true;
    }
    if (!placed_any && k > 2) break;
  }
}

}  // namespace detail

TchebychevNet map_surface(const SurfaceSpec& spec, const Genome& genome, double w) {
  if (w <= 0) throw std::invalid_argument("mesh width must be positive");

  Vec3 a;
  try {
    a = lift_to_surface(spec, genome.x_a, genome.y_a);
  } catch (const SurfaceError& e) {
    throw MappingError(std::string("cannot lift seed point: ") + e.what());
  }

  TchebychevNet net(w);
  net.insert(0, 0, a);

  struct Branch {
    Heading azimuth;
    const std::vector<double>* turns;
    int di, dj;
  };
  const Branch branches[4] = {
      {Heading::of(genome.alpha1), &genome.gamma1, 1, 0},
      {Heading::of(genome.alpha2), &genome.gamma2, -1, 0},
      {Heading::of(genome.beta1), &genome.eps1, 0, 1},
      {Heading::of(genome.beta2), &genome.eps2, 0, -1},
  };

  int len[4] = {0, 0, 0, 0};
  for (int b = 0; b < 4; ++b) {
    const auto& br = branches[b];
    const auto pts = trace_guideline(spec, a, br.azimuth, *br.turns, w,
                                     static_cast<int>(br.turns->size()) + 1);
    for (std::size_t s = 1; s < pts.size(); ++s)
      net.insert(br.di * static_cast<int>(s), br.dj * static_cast<int>(s), pts[s]);
    len[b] = static_cast<int>(pts.size()) - 1;
  }

  detail::fill_quadrant(net, spec, w, 1, 1, len[0], len[2]);
  detail::fill_quadrant(net, spec, w, -1, 1, len[1], len[2]);
  detail::fill_quadrant(net, spec, w, 1, -1, len[0], len[3]);
  detail::fill_quadrant(net, spec, w, -1, -1, len[1], len[3]);

  net.mark_boundaries();
  return net;
}

namespace {

double quad_signed_area_xy(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  // Shoelace over the projected quad a, b, c, d.
  return 0.5 * ((a.x * b.y - b.x * a.y) + (b.x * c.y - c.x * b.y) +
                (c.x * d.y - d.x * c.y) + (d.x * a.y - a.x * d.y));
}

struct CellKey {
  long long x, y, z;
  bool operator==(const CellKey&) const = default;
};
struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::size_t>(k.y) * 0xC2B2AE3D27D4EB4Full + (h << 6);
    h ^= static_cast<std::size_t>(k.z) * 0x165667B19E3779F9ull + (h << 6);
    return h;
  }
};

}  // namespace

ValidityReport validate_net(const TchebychevNet& net, const SurfaceSpec& spec, double w,
                            const ValidityParams& params) {
  ValidityReport rep;
  if (net.empty()) {
    rep.messages.push_back("net is empty");
    return rep;
  }

  // Coverage: projected area of the net's cells against the surface's
  // projected extent inside the domain box. Truncated rim cells with three
  // corners still carry bars, so they count as triangles.
  int imin = 0, imax = 0, jmin = 0, jmax = 0;
  for (const auto& [idx, node] : net) {
    imin = std::min(imin, idx.i);
    imax = std::max(imax, idx.i);
    jmin = std::min(jmin, idx.j);
    jmax = std::max(jmax, idx.j);
  }

  double covered = 0.0;
  double pos_area = 0.0, neg_area = 0.0;
  for (int i = imin; i < imax; ++i) {
    for (int j = jmin; j < jmax; ++j) {
      const NetNode* c00 = net.find(i, j);
      const NetNode* c10 = net.find(i + 1, j);
      const NetNode* c11 = net.find(i + 1, j + 1);
      const NetNode* c01 = net.find(i, j + 1);
      const int present = !!c00 + !!c10 + !!c11 + !!c01;
      if (present == 4) {
        const double area = quad_signed_area_xy(c00->pos, c10->pos, c11->pos, c01->pos);
        covered += std::fabs(area);
        if (area > 1e-12 * w * w)
          pos_area += area;
        else if (area < -1e-12 * w * w)
          neg_area -= area;
      } else if (present == 3) {
        const Vec3* tri[3];
        int t = 0;
        for (const NetNode* c : {c00, c10, c11, c01})
          if (c) tri[t++] = &c->pos;
        covered += 0.5 * std::fabs((tri[1]->x - tri[0]->x) * (tri[2]->y - tri[0]->y) -
                                   (tri[2]->x - tri[0]->x) * (tri[1]->y - tri[0]->y));
      }
    }
  }
  const double extent = spec.projected_extent_area(params.boundary_band * w);
  rep.coverage_ratio = extent > 0 ? std::min(1.0, covered / extent) : 0.0;
  rep.complete = rep.coverage_ratio >= params.coverage_threshold;
  if (!rep.complete)
    rep.messages.push_back("coverage " + std::to_string(rep.coverage_ratio) +
                           " below threshold " + std::to_string(params.coverage_threshold));

  // Overlap, part 1: how close do non-adjacent nodes (grid distance >= 2)
  // come to each other? A spatial hash with cell size 1.5 w finds every pair
  // closer than that; anything farther is irrelevant.
  const double scan = 1.5 * w;
  std::unordered_map<CellKey, std::vector<const TchebychevNet::NodeMap::value_type*>, CellKeyHash>
      grid;
  auto cell_of = [&](const Vec3& p) {
    return CellKey{static_cast<long long>(std::floor(p.x / scan)),
                   static_cast<long long>(std::floor(p.y / scan)),
                   static_cast<long long>(std::floor(p.z / scan))};
  };
  for (const auto& entry : net) grid[cell_of(entry.second.pos)].push_back(&entry);

  double min_clearance = 1.5;
  const TchebychevNet::NodeMap::value_type* worst_a = nullptr;
  const TchebychevNet::NodeMap::value_type* worst_b = nullptr;
  for (const auto& entry : net) {
    const CellKey c = cell_of(entry.second.pos);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({c.x + dx, c.y + dy, c.z + dz});
          if (it == grid.end()) continue;
          for (const auto* other : it->second) {
            if (other == &entry) continue;
            const int gd = std::abs(other->first.i - entry.first.i) +
                           std::abs(other->first.j - entry.first.j);
            if (gd < 2) continue;
            const double clearance = distance(other->second.pos, entry.second.pos) / w;
            if (clearance < min_clearance) {
              min_clearance = clearance;
              worst_a = &entry;
              worst_b = other;
            }
          }
        }
  }
  rep.min_clearance = min_clearance;
  const bool proximity_ok = min_clearance >= params.proximity_factor;
  if (!proximity_ok && worst_a && worst_b)
    rep.messages.push_back(
        "nodes (" + std::to_string(worst_a->first.i) + "," + std::to_string(worst_a->first.j) +
        ") and (" + std::to_string(worst_b->first.i) + "," + std::to_string(worst_b->first.j) +
        ") at clearance " + std::to_string(min_clearance) + " w");

  // Overlap, part 2: all projected quads must agree in orientation.
  const bool orientation_ok = pos_area == 0.0 || neg_area == 0.0;
  if (!orientation_ok) rep.messages.push_back("projected quads flip orientation");

  rep.overlap_free = proximity_ok && orientation_ok;
  return rep;
}

NetStats net_stats(const TchebychevNet& net, double top_fraction) {
  NetStats stats;
  stats.top_fraction = top_fraction;
  stats.node_count = net.size();

  std::vector<double> curvatures;
  double edge_err = 0.0;
  const double w = net.width();

  for (const auto& [idx, node] : net) {
    const NetNode* xm = net.find(idx.i - 1, idx.j);
    const NetNode* xp = net.find(idx.i + 1, idx.j);
    const NetNode* ym = net.find(idx.i, idx.j - 1);
    const NetNode* yp = net.find(idx.i, idx.j + 1);

    auto curvature_or_inf = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
      try {
        return polyline_curvature(a, b, c);
      } catch (const std::invalid_argument&) {
        return std::numeric_limits<double>::infinity();  // degenerate (folded) net
      }
    };
    if (xm && xp) curvatures.push_back(curvature_or_inf(xm->pos, node.pos, xp->pos));
    if (ym && yp) curvatures.push_back(curvature_or_inf(ym->pos, node.pos, yp->pos));

    if (xp) edge_err = std::max(edge_err, std::fabs(distance(node.pos, xp->pos) - w) / w);
    if (yp) edge_err = std::max(edge_err, std::fabs(distance(node.pos, yp->pos) - w) / w);
  }

  if (curvatures.empty())
    throw MappingError("net has no interior node in either direction; no curvature defined");

  stats.curvature_samples = curvatures.size();
  stats.max_edge_error = edge_err;

  double sum = 0.0;
  for (const double c : curvatures) sum += c;
  stats.c_mean = sum / static_cast<double>(curvatures.size());

  std::sort(curvatures.begin(), curvatures.end(), std::greater<>());
  stats.c_max = curvatures.front();

  const std::size_t top_n = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(top_fraction * static_cast<double>(curvatures.size()))));
  double top_sum = 0.0;
  for (std::size_t k = 0; k < top_n && k < curvatures.size(); ++k) top_sum += curvatures[k];
  stats.c_top_mean = top_sum / static_cast<double>(std::min(top_n, curvatures.size()));

  return stats;
}

}  // namespace chebnet
