#pragma once

#include <array>
#include <string>
#include <vector>

#include "planeguard/geometry.hpp"
#include "planeguard/pieces.hpp"

namespace planeguard {

struct BarrierMesh {
  std::string frame = "canonical";  // "canonical" or "raw"
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;      // caps, 0-based indices
  std::vector<std::string> piece_tags;        // one per face
  std::vector<std::array<int, 2>> lines;      // arc polyline segments
  std::vector<std::string> line_tags;         // one per segment
  std::vector<int> points;                    // point-piece vertices
  std::vector<std::string> point_tags;        // one per point
};

/// Samples each piece into render geometry: caps as lifted barycentric
/// subdivisions clipped to their triangle, arcs as polylines, points as
/// marked vertices. `resolution` >= 8; pass the frame to export in raw
/// coordinates.
BarrierMesh export_mesh(const std::vector<BarrierPiece>& pieces,
                        int resolution, bool raw_frame = false,
                        const CanonicalFrame* frame = nullptr);

std::string mesh_to_json(const BarrierMesh& mesh);
std::string mesh_to_obj(const BarrierMesh& mesh);

/// Connected components after welding vertices within weld_tol.
int connected_components(const BarrierMesh& mesh, double weld_tol = 1e-6);

}  // namespace planeguard
