#include "planeguard/mesh.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

#include <json.hpp>

namespace planeguard {

namespace {

int push_vertex(BarrierMesh& mesh, const Point3& p, bool raw,
                const CanonicalFrame* frame) {
  const Point3 v = raw ? from_canonical(*frame, p) : p;
  mesh.vertices.push_back({v.x, v.y, v.z});
  return int(mesh.vertices.size()) - 1;
}

void add_cap(BarrierMesh& mesh, const CapPiece& cap, const std::string& tag,
             int res, bool raw, const CanonicalFrame* frame) {
  const Point3& a = cap.triangle[0];
  const Point3& b = cap.triangle[1];
  const Point3& c = cap.triangle[2];

  // Barycentric subdivision: vertex (i, j) at A + (i/n)(B-A) + (j/n)(C-A).
  std::vector<int> index(std::size_t(res + 1) * (res + 1), -1);
  auto at = [&](int i, int j) -> int& {
    return index[std::size_t(j) * (res + 1) + i];
  };
  for (int j = 0; j <= res; ++j) {
    for (int i = 0; i + j <= res; ++i) {
      const double fi = double(i) / res;
      const double fj = double(j) / res;
      const Point3 q = a + (b - a) * fi + (c - a) * fj;
      const double dx = q.x - cap.center.x;
      const double dy = q.y - cap.center.y;
      const Point3 lifted{q.x, q.y, lift_height(cap.radius, dx * dx + dy * dy)};
      at(i, j) = push_vertex(mesh, lifted, raw, frame);
    }
  }
  auto add_face = [&](int v0, int v1, int v2) {
    // Drop slivers produced by equator-touching corners.
    const auto& p0 = mesh.vertices[v0];
    const auto& p1 = mesh.vertices[v1];
    const auto& p2 = mesh.vertices[v2];
    const double ux = p1[0] - p0[0], uy = p1[1] - p0[1], uz = p1[2] - p0[2];
    const double vx = p2[0] - p0[0], vy = p2[1] - p0[1], vz = p2[2] - p0[2];
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    if (0.5 * std::sqrt(cx * cx + cy * cy + cz * cz) <= 1e-12) return;
    mesh.faces.push_back({v0, v1, v2});
    mesh.piece_tags.push_back(tag);
  };
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i + j < res; ++i) {
      add_face(at(i, j), at(i + 1, j), at(i, j + 1));
      if (i + j + 1 < res)
        add_face(at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
    }
  }
}

void add_arc(BarrierMesh& mesh, const ArcPiece& arc, const std::string& tag,
             int res, bool raw, const CanonicalFrame* frame) {
  int prev = -1;
  for (int t = 0; t < res; ++t) {
    const double beta = double(t) / (res - 1);
    const Point3 q = arc.proj_i * beta + arc.proj_j * (1.0 - beta);
    const double dx = q.x - arc.center.x;
    const double dy = q.y - arc.center.y;
    const Point3 lifted{q.x, q.y, lift_height(arc.radius, dx * dx + dy * dy)};
    const int cur = push_vertex(mesh, lifted, raw, frame);
    if (prev >= 0) {
      mesh.lines.push_back({prev, cur});
      mesh.line_tags.push_back(tag);
    }
    prev = cur;
  }
}

}  // namespace

BarrierMesh export_mesh(const std::vector<BarrierPiece>& pieces,
                        int resolution, bool raw_frame,
                        const CanonicalFrame* frame) {
  if (resolution < 8)
    fail(ErrorCode::ResolutionTooLow, "mesh resolution must be at least 8");
  if (raw_frame && frame == nullptr)
    fail(ErrorCode::ParseError, "raw-frame export needs the canonical frame");

  BarrierMesh mesh;
  mesh.frame = raw_frame ? "raw" : "canonical";
  for (const BarrierPiece& piece : pieces) {
    if (piece.empty()) continue;
    if (const auto* pt = std::get_if<PointPiece>(&piece.shape)) {
      mesh.points.push_back(push_vertex(mesh, pt->location, raw_frame, frame));
      mesh.point_tags.push_back(piece.tag);
    } else if (const auto* arc = std::get_if<ArcPiece>(&piece.shape)) {
      add_arc(mesh, *arc, piece.tag, resolution, raw_frame, frame);
    } else {
      add_cap(mesh, std::get<CapPiece>(piece.shape), piece.tag, resolution,
              raw_frame, frame);
    }
  }
  return mesh;
}

std::string mesh_to_json(const BarrierMesh& mesh) {
  nlohmann::json j;
  j["frame"] = mesh.frame;
  j["vertices"] = mesh.vertices;
  j["faces"] = mesh.faces;
  j["piece_tags"] = mesh.piece_tags;
  j["lines"] = mesh.lines;
  j["line_tags"] = mesh.line_tags;
  j["points"] = mesh.points;
  j["point_tags"] = mesh.point_tags;
  return j.dump(2) + "\n";
}

std::string mesh_to_obj(const BarrierMesh& mesh) {
  std::string out = "# planeguard barrier mesh (" + mesh.frame + " frame)\n";
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out += buf;
  }
  std::string group;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    if (mesh.piece_tags[f] != group) {
      group = mesh.piece_tags[f];
      out += "g " + group + "\n";
    }
    std::snprintf(buf, sizeof(buf), "f %d %d %d\n", mesh.faces[f][0] + 1,
                  mesh.faces[f][1] + 1, mesh.faces[f][2] + 1);
    out += buf;
  }
  group.clear();
  for (std::size_t l = 0; l < mesh.lines.size(); ++l) {
    if (mesh.line_tags[l] != group) {
      group = mesh.line_tags[l];
      out += "g " + group + "\n";
    }
    std::snprintf(buf, sizeof(buf), "l %d %d\n", mesh.lines[l][0] + 1,
                  mesh.lines[l][1] + 1);
    out += buf;
  }
  for (std::size_t p = 0; p < mesh.points.size(); ++p) {
    out += "g " + mesh.point_tags[p] + "\n";
    std::snprintf(buf, sizeof(buf), "p %d\n", mesh.points[p] + 1);
    out += buf;
  }
  return out;
}

int connected_components(const BarrierMesh& mesh, double weld_tol) {
  const std::size_t nv = mesh.vertices.size();
  if (nv == 0) return 0;

  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Weld geometrically-coincident vertices via a quantized spatial map.
  std::map<std::array<std::int64_t, 3>, std::vector<int>> cells;
  auto key_of = [&](const std::array<double, 3>& v) {
    return std::array<std::int64_t, 3>{
        std::int64_t(std::floor(v[0] / weld_tol)),
        std::int64_t(std::floor(v[1] / weld_tol)),
        std::int64_t(std::floor(v[2] / weld_tol))};
  };
  for (std::size_t v = 0; v < nv; ++v) {
    const auto k = key_of(mesh.vertices[v]);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          const auto it = cells.find({k[0] + dx, k[1] + dy, k[2] + dz});
          if (it == cells.end()) continue;
          for (int other : it->second) {
            const auto& a = mesh.vertices[v];
            const auto& b = mesh.vertices[other];
            const double d2 = (a[0] - b[0]) * (a[0] - b[0]) +
                              (a[1] - b[1]) * (a[1] - b[1]) +
                              (a[2] - b[2]) * (a[2] - b[2]);
            if (d2 <= weld_tol * weld_tol) unite(int(v), other);
          }
        }
    cells[k].push_back(int(v));
  }
  for (const auto& f : mesh.faces) {
    unite(f[0], f[1]);
    unite(f[1], f[2]);
  }
  for (const auto& l : mesh.lines) unite(l[0], l[1]);

  std::map<int, int> roots;
  for (std::size_t v = 0; v < nv; ++v) roots[find(int(v))] = 1;
  return int(roots.size());
}

}  // namespace planeguard
