#pragma once

#include "swapalg/theta.hpp"

namespace swapalg {

// Triangulated oriented surface: triangles carry their vertex labels in
// orientation order; side s of a triangle joins corners s and s+1 mod 3.
struct TriangleSide {
    int tri = 0;
    int side = 0;  // 0, 1, 2
    auto operator<=>(const TriangleSide&) const = default;
};

struct SurfaceTriangulation {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<TriangleSide, TriangleSide>> gluings;

    void validate() const;  // each side glued at most once, no self-side gluing
};

SurfaceTriangulation two_triangle_square();
SurfaceTriangulation punctured_torus();

// One entry per gluing: the two triangles sharing that glued side.
std::vector<std::pair<int, int>> adjacent_pairs(const SurfaceTriangulation& st);

// Disjoint union of one circle of `block` points per glued pair; linking is
// per-circle and zero across circles.
class GluedGeom final : public LinkingGeom {
public:
    GluedGeom(int pairs, int block) : pairs_(pairs), block_(block) {}

    int circle_of(PointId p) const { return p / block_; }
    PointId local(PointId p) const { return p % block_; }
    PointId global(int circle, PointId p) const { return circle * block_ + p; }
    int size() const { return pairs_ * block_; }

    Rational linking(const PairGen& g, const PairGen& h) const override;

private:
    int pairs_;
    int block_;
};

struct SurfacePairReport {
    int pair_index = 0;
    int t1 = 0, t2 = 0;
    PoissonHomReport disk;
};

struct SurfaceReport {
    int n = 0;
    bool ok = false;
    std::vector<SurfacePairReport> pairs;
    bool cross_pair_zero = false;  // brackets across distinct pair circles vanish
};

// Per glued pair, runs the full disk k=4 coordinate check on that pair's
// circle; across pairs, checks the glued bracket of sample coordinate
// images is identically zero.
SurfaceReport verify_surface_theta(const SurfaceTriangulation& st, int n,
                                   const PitParams& pit);

}  // namespace swapalg
