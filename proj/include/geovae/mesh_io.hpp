#pragma once

#include <string>
#include <vector>

#include "geovae/geometry.hpp"

namespace geovae {

enum class MeshFormat { OFF, OBJ, Auto };

// OFF grammar: "OFF" header, "nV nF nE", nV vertex lines of 3 floats, nF face
// lines "3 i j k" (0-based). OBJ: only "v x y z" and triangular "f i j k"
// (1-based) are honored; other directives are skipped with a warning pushed to
// `warnings` if given. Both loaders validate the mesh before returning.
TriMesh load_mesh(const std::string& path, MeshFormat format = MeshFormat::Auto,
                  std::vector<std::string>* warnings = nullptr);

void save_off(const TriMesh& mesh, const std::string& path);

// Grayscale raster in [0,1], row-major, row 0 at the top of the image.
struct GrayImage {
  int width = 0, height = 0;
  std::vector<double> pixels;  // width*height

  double at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
};

// PGM, both ASCII (P2) and binary (P5); values scaled by maxval into [0,1].
GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

// ASCII PLY with per-vertex x y z plus a depth scalar (the z coordinate;
// camera convention is looking down -z, so depth increases away from it).
void save_ply(const PointCloud& pc, const std::string& path);

// Cloud cache format: magic "GVPC1\n", ASCII count line, then count
// little-endian float32 xyz triplets.
void save_cloud(const PointCloud& pc, const std::string& path);
PointCloud load_cloud(const std::string& path);

}  // namespace geovae
