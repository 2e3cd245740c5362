#include "planeguard/evasion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "planeguard/kernels.hpp"
#include "planeguard/lp2d.hpp"

namespace planeguard {

BisectorPlane bisector_plane(const Point3& evader, const Point3& pursuer) {
  const Point3 d = pursuer - evader;
  const double len = norm(d);
  if (len <= kGeomEps)
    fail(ErrorCode::CoincidentPlayers, "evader and pursuer coincide");
  const Point3 n{d.x / len, d.y / len, d.z / len};
  const Point3 mid = (evader + pursuer) * 0.5;
  return {n, dot(n, mid)};
}

double escape_margin(const Point3& t, const Point3& evader,
                     std::span<const Point3> pursuers) {
  if (pursuers.empty())
    fail(ErrorCode::EmptyPursuerSet, "escape_margin needs at least one pursuer");
  double best = dist_sq(t, pursuers[0]);
  for (std::size_t k = 1; k < pursuers.size(); ++k) {
    const double d2 = dist_sq(t, pursuers[k]);
    best = d2 < best ? d2 : best;
  }
  return std::sqrt(best) - std::sqrt(dist_sq(t, evader));
}

double auto_extent(const Point3& evader, std::span<const Point3> pursuers) {
  double far = 0.0;
  for (const Point3& p : pursuers) far = std::max(far, dist(evader, p));
  return 10.0 * (far + 1.0);
}

namespace {

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  double x = 0.0;
  double y = 0.0;
};

// Larger margin wins; ties go to the lexicographically smallest witness so
// the result is independent of evaluation order.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

struct GridEval {
  Candidate best;
  bool best_on_edge = false;
};

// Evaluates an n x n grid centered at (cx, cy) with half-width he and merges
// the best sample into `out`. When `field` is non-null the full margin field
// is retained (row-major) for local-maximum seeding.
GridEval evaluate_grid(double cx, double cy, double he, int n,
                       const kernels::SiteSet& sites, double ex, double ey,
                       double ez2, std::vector<double>* field,
                       std::vector<double>& row) {
  const auto margin_row = kernels::margin_row();
  const double x0 = cx - he;
  const double y0 = cy - he;
  const double h = 2.0 * he / double(n - 1);

  if (field) field->assign(std::size_t(n) * n, 0.0);
  row.resize(n);

  GridEval result;
  for (int j = 0; j < n; ++j) {
    const double y = y0 + double(j) * h;
    double* out = field ? field->data() + std::size_t(j) * n : row.data();
    margin_row(x0, h, std::size_t(n), y, sites, ex, ey, ez2, out);
    for (int i = 0; i < n; ++i) {
      const Candidate c{out[i], x0 + double(i) * h, y};
      if (better(c, result.best)) {
        result.best = c;
        result.best_on_edge = (i == 0 || i == n - 1 || j == 0 || j == n - 1);
      }
    }
  }
  return result;
}

}  // namespace

MarginReport escape_margin_supremum(const Point3& evader,
                                    std::span<const Point3> pursuers,
                                    const OracleOptions& opts) {
  if (pursuers.empty())
    fail(ErrorCode::EmptyPursuerSet, "oracle needs at least one pursuer");
  if (!(evader.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "oracle requires evader z > 0");

  int n = std::max(opts.grid, 9);
  if (n % 2 == 0) ++n;
  const int levels = std::max(opts.levels, 6);

  double extent = opts.extent;
  if (extent <= 0.0) {
    if (opts.extent < 0.0)
      fail(ErrorCode::NonPositiveExtent, "oracle extent must be positive");
    extent = auto_extent(evader, pursuers);
  }

  kernels::SiteSet sites;
  for (const Point3& p : pursuers) sites.add(p.x, p.y, p.z);
  const double ez2 = evader.z * evader.z;

  std::vector<double> field;
  std::vector<double> row;

  // Coarse pass over the full extent, keeping the field for seeding.
  const GridEval coarse = evaluate_grid(evader.x, evader.y, extent, n, sites,
                                        evader.x, evader.y, ez2, &field, row);
  Candidate incumbent = coarse.best;

  const double h = 2.0 * extent / double(n - 1);
  const double x0 = evader.x - extent;
  const double y0 = evader.y - extent;

  std::vector<Candidate> seeds{incumbent};
  auto push_seed = [&](const Candidate& c) {
    for (const Candidate& s : seeds) {
      const double ddx = s.x - c.x, ddy = s.y - c.y;
      if (ddx * ddx + ddy * ddy < 9.0 * h * h) return;
    }
    seeds.push_back(c);
  };

  if (opts.extra_seeds > 0) {
    std::vector<Candidate> maxima;
    for (int j = 1; j + 1 < n; ++j) {
      for (int i = 1; i + 1 < n; ++i) {
        const double v = field[std::size_t(j) * n + i];
        bool peak = true;
        for (int dj = -1; dj <= 1 && peak; ++dj)
          for (int di = -1; di <= 1 && peak; ++di)
            if (di || dj)
              peak = v >= field[std::size_t(j + dj) * n + (i + di)];
        if (peak)
          maxima.push_back({v, x0 + double(i) * h, y0 + double(j) * h});
      }
    }
    std::sort(maxima.begin(), maxima.end(),
              [](const Candidate& a, const Candidate& b) { return better(a, b); });
    int taken = 0;
    for (const Candidate& m : maxima) {
      if (taken >= opts.extra_seeds) break;
      const std::size_t before = seeds.size();
      push_seed(m);
      if (seeds.size() > before) ++taken;
    }
  }

  if (opts.polygon_seed) {
    // Deepest interior point of {t on T : evader strictly first everywhere}.
    // The bisector inequalities are linear in t (quadratics cancel), so the
    // evasion set on the plane is a half-plane intersection.
    std::vector<HalfPlane> planes;
    bool empty = false;
    const double ce = (evader.x * evader.x + evader.y * evader.y) + ez2;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const double a = 2.0 * (sites.x[k] - evader.x);
      const double b = 2.0 * (sites.y[k] - evader.y);
      const double c =
          (sites.x[k] * sites.x[k] + sites.y[k] * sites.y[k] + sites.z2[k]) - ce;
      if (std::hypot(a, b) <= 1e-15) {
        if (c <= 0.0) { empty = true; break; }
        continue;  // pursuer strictly higher over the same projection
      }
      planes.push_back({a, b, c});
    }
    if (!empty) {
      // Seed regardless of slack sign: with the evader on or inside the
      // barrier the polygon degenerates to (or just misses) a point, and its
      // deepest/least-shallow spot is exactly where the margin peaks.
      const ChebyshevResult deep = chebyshev_center(planes, 100.0 * extent);
      if (deep.found) {
        const Point3 witness{deep.x, deep.y, 0.0};
        push_seed({escape_margin(witness, evader, pursuers), deep.x, deep.y});
      }
    }
  }

  // Zoom chains: supremum is a running max over exact evaluations, so it is
  // monotone across levels by construction.
  for (const Candidate& seed : seeds) {
    Candidate cur = seed;
    for (int level = 1; level <= levels; ++level) {
      const double he = extent * std::pow(0.1, level);
      const GridEval g = evaluate_grid(cur.x, cur.y, he, n, sites, evader.x,
                                       evader.y, ez2, nullptr, row);
      if (better(g.best, cur)) cur = g.best;
      if (better(cur, incumbent)) incumbent = cur;
    }
  }

  // Resolution check: if the best point of a final-scale grid around the
  // incumbent sits on that grid's outer ring, the field is still improving
  // outward and the supremum was not bracketed.
  const double he_final = extent * std::pow(0.1, levels);
  const GridEval verify = evaluate_grid(incumbent.x, incumbent.y, he_final, n,
                                        sites, evader.x, evader.y, ez2,
                                        nullptr, row);
  bool resolved = true;
  if (better(verify.best, incumbent)) {
    incumbent = verify.best;
    resolved = !verify.best_on_edge;
  }

  MarginReport report;
  report.supremum = incumbent.value;
  report.witness = Point3{incumbent.x, incumbent.y, 0.0};
  report.resolved = resolved;
  return report;
}

}  // namespace planeguard
