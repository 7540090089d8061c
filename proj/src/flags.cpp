#include "swapalg/flags.hpp"

#include <functional>
#include <stdexcept>

namespace swapalg {

Rational det(const Matrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det: matrix not square");
    Matrix a = m;
    Rational result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return result;
}

void FlagConfig::append_prefix(Matrix& rows, int v, int count) const {
    if (v < 0 || v >= k) throw std::domain_error("flag index out of range");
    if (count < 0 || count > n) throw std::domain_error("flag prefix count out of range");
    for (int i = 0; i < count; ++i) rows.push_back(basis[(size_t)v][(size_t)i]);
}

Rational omega(const FlagConfig& cfg, const std::vector<std::pair<int, int>>& parts) {
    Matrix rows;
    int total = 0;
    for (const auto& [v, count] : parts) {
        cfg.append_prefix(rows, v, count);
        total += count;
    }
    if (total != cfg.n) throw std::domain_error("omega: prefix counts must sum to n");
    return det(rows);
}

bool is_generic(const FlagConfig& cfg) {
    // Enumerate all ways to pick distinct flags in increasing index order
    // with positive prefix counts summing to n.
    std::vector<std::pair<int, int>> parts;
    std::function<bool(int, int)> go = [&](int from, int remaining) -> bool {
        if (remaining == 0) return omega(cfg, parts) != 0;
        for (int v = from; v < cfg.k; ++v) {
            for (int c = 1; c <= remaining; ++c) {
                parts.emplace_back(v, c);
                bool ok = go(v + 1, remaining - c);
                parts.pop_back();
                if (!ok) return false;
            }
        }
        return true;
    };
    return go(0, cfg.n);
}

FlagConfig random_flag_config(int k, int n, long long bound, Rng& rng) {
    if (k < 3 || n < 2) throw std::domain_error("random_flag_config: need k >= 3, n >= 2");
    const int retry_budget = 64;
    for (int tries = 0; tries < retry_budget; ++tries) {
        FlagConfig cfg;
        cfg.k = k;
        cfg.n = n;
        cfg.basis.resize((size_t)k, Matrix((size_t)n, std::vector<Rational>((size_t)n)));
        for (auto& m : cfg.basis)
            for (auto& row : m)
                for (auto& x : row) x = rng.uniform(-bound, bound);
        if (is_generic(cfg)) return cfg;
    }
    throw std::runtime_error("random_flag_config: retry budget exhausted, enlarge bound");
}

Rational triple_ratio(const FlagConfig& cfg, int x, int y, int z, int m, int l, int p) {
    if (m < 1 || l < 1 || p < 1 || m + l + p != cfg.n)
        throw std::domain_error("triple_ratio: need m,l,p >= 1 with m+l+p = n");
    auto w = [&](int a, int b, int c) {
        return omega(cfg, {{x, a}, {y, b}, {z, c}});
    };
    Rational num = w(m + 1, l, p - 1) * w(m - 1, l + 1, p) * w(m, l - 1, p + 1);
    Rational den = w(m + 1, l - 1, p) * w(m, l + 1, p - 1) * w(m - 1, l, p + 1);
    if (den == 0) throw std::domain_error("triple_ratio: degenerate configuration");
    return num / den;
}

Rational edge_function(const FlagConfig& cfg, const Quad& q, int i) {
    const int n = cfg.n;
    if (i < 1 || i > n - 1) throw std::domain_error("edge_function: need 1 <= i <= n-1");
    auto w = [&](int xc, int zc, int tail) {
        Matrix rows;
        cfg.append_prefix(rows, q.x, xc);
        cfg.append_prefix(rows, q.z, zc);
        cfg.append_prefix(rows, tail, 1);
        return det(rows);
    };
    Rational num = w(i, n - i - 1, q.t) * w(i - 1, n - i, q.y);
    Rational den = w(i, n - i - 1, q.y) * w(i - 1, n - i, q.t);
    if (den == 0) throw std::domain_error("edge_function: degenerate configuration");
    return num / den;
}

std::map<CoordVertex, Rational> fg_coordinates(const FlagConfig& cfg,
                                               const PolygonTriangulation& tri, int n) {
    if (tri.k != cfg.k || n != cfg.n)
        throw std::domain_error("fg_coordinates: triangulation and flags disagree on k or n");
    std::map<CoordVertex, Rational> out;
    for (const auto& v : coord_vertices(tri, n)) {
        if (const auto* e = std::get_if<EdgeVertex>(&v)) {
            out[v] = edge_function(cfg, quad_of_edge(tri, e->edge), e->i);
        } else {
            const auto& f = std::get<FaceVertex>(v);
            out[v] = triple_ratio(cfg, f.corners[0], f.corners[1], f.corners[2], f.m, f.l, f.p);
        }
    }
    return out;
}

}  // namespace swapalg
