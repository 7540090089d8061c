#pragma once

#include <map>

#include "swapalg/rank_n.hpp"
#include "swapalg/triangulation.hpp"

namespace swapalg {

using Matrix = std::vector<std::vector<Rational>>;

Rational det(const Matrix& m);

// A configuration of k complete flags in K^n. Flag v is spanned by the
// prefix rows of basis[v]: the span of rows 0..i-1 is the i-dimensional
// subspace.
struct FlagConfig {
    int k = 0;
    int n = 0;
    std::vector<Matrix> basis;  // k matrices, each n x n

    // Rows 0..count-1 of flag v, appended to `rows`.
    void append_prefix(Matrix& rows, int v, int count) const;
};

// det of prefix rows of the listed flags stacked in order; counts must sum
// to n.
Rational omega(const FlagConfig& cfg, const std::vector<std::pair<int, int>>& parts);

// Every stacked prefix determinant over distinct flags in index order is
// nonzero. This covers all the determinants appearing in the coordinates.
bool is_generic(const FlagConfig& cfg);

FlagConfig random_flag_config(int k, int n, long long bound, Rng& rng);

// (m,l,p)-triple ratio of the triangle with polygon vertices x,y,z.
Rational triple_ratio(const FlagConfig& cfg, int x, int y, int z, int m, int l, int p);

// (i,n-i)-edge function of the interior edge x-z inside the quad x,y,z,t.
Rational edge_function(const FlagConfig& cfg, const Quad& q, int i);

// All coordinates of the n-triangulation at a flag configuration.
std::map<CoordVertex, Rational> fg_coordinates(const FlagConfig& cfg,
                                               const PolygonTriangulation& tri, int n);

}  // namespace swapalg
