#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include "swapalg/report.hpp"

using namespace swapalg;

namespace {

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open output file: " + out);
        f << text;
        if (text.empty() || text.back() != '\n') f << '\n';
    }
}

PolygonTriangulation load_triangulation(int k, const std::string& file) {
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw std::runtime_error("cannot open triangulation file: " + file);
        Json j;
        f >> j;
        return triangulation_from_json(j);
    }
    return fan_triangulation(k);
}

Monomial random_monomial(Rng& rng, int s, int deg) {
    Monomial m;
    for (int d = 0; d < deg; ++d) {
        PointId x = (PointId)rng.uniform(0, s - 1);
        PointId y = (PointId)rng.uniform(0, s - 1);
        if (x == y) y = (y + 1) % s;
        m.push_back(PairGen{x, y});
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swapping algebra toolkit"};
    app.require_subcommand(1);

    int n = 2, k = 4, m = 4, trials = 8;
    long long bound = 0;
    uint64_t seed = 0;
    bool have_seed = false;
    std::string tri_file, flags_file, out, format = "json";
    std::string alpha_s = "1", beta_s = "0";

    auto add_common = [&](CLI::App* cmd, bool randomized) {
        cmd->add_option("--n", n, "rank parameter");
        cmd->add_option("--k", k, "polygon vertex count (fan triangulation unless --triangulation)");
        cmd->add_option("--triangulation", tri_file, "triangulation or surface json file");
        cmd->add_option("--trials", trials, "randomized trials per identity");
        cmd->add_option("--bound", bound, "sampling bound (0: choose from degree)");
        cmd->add_option("--out", out, "write the report here instead of stdout");
        cmd->add_option("--format", format, "json or dot")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        auto* s = cmd->add_option("--seed", seed, "rng seed");
        if (randomized) s->required();
        s->each([&](const std::string&) { have_seed = true; });
    };

    auto* verify = app.add_subcommand("verify", "run a verification and report pass/fail");
    std::string kind;
    verify
        ->add_option("kind", kind, "what to verify")
        ->required()
        ->check(CLI::IsMember({"poisson-hom", "main-prop", "jacobi", "ideal", "right-tuple",
                               "section", "surface", "poisson-lie", "grassmannian"}));
    add_common(verify, false);
    verify->add_option("--m", m, "ambient size for poisson-lie and grassmannian");
    verify->add_option("--alpha", alpha_s, "bracket parameter alpha (rational)");
    verify->add_option("--beta", beta_s, "bracket parameter beta (rational)");

    auto* quiver = app.add_subcommand("quiver", "print the exchange quiver");
    add_common(quiver, false);

    auto* coords = app.add_subcommand("coords", "evaluate coordinates of a flag configuration");
    add_common(coords, false);
    coords->add_option("--flags", flags_file, "flag configuration json file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(quiver)) {
            Quiver q = build_quiver(load_triangulation(k, tri_file), n);
            emit(out, format == "dot" ? q.to_dot() : to_json(q).dump(2));
            return 0;
        }
        if (app.got_subcommand(coords)) {
            std::ifstream f(flags_file);
            if (!f) throw std::runtime_error("cannot open flags file: " + flags_file);
            Json j;
            f >> j;
            FlagConfig cfg = flags_from_json(j);
            PolygonTriangulation tri = load_triangulation(cfg.k, tri_file);
            emit(out, coords_to_json(fg_coordinates(cfg, tri, cfg.n)).dump(2));
            return 0;
        }

        // verify
        const bool randomized = kind != "poisson-lie";
        if (randomized && !have_seed) {
            std::cerr << "verify " << kind << " is randomized and needs --seed\n";
            return 2;
        }
        PitParams pit;
        pit.trials = trials;
        pit.bound = bound;
        pit.seed = seed;

        bool ok = false;
        Json report;
        if (kind == "poisson-hom") {
            PoissonHomReport r = verify_poisson_hom(load_triangulation(k, tri_file), n, pit);
            ok = r.ok;
            report = to_json(r);
        } else if (kind == "main-prop") {
            MainPropReport r = verify_main_prop(n, pit);
            ok = r.ok;
            report = to_json(r);
        } else if (kind == "jacobi") {
            Rng rng(seed);
            int checked = 0, failed = 0;
            for (int it = 0; it < trials; ++it) {
                int s = 4 + (int)rng.uniform(0, 4);
                SingleCircleGeom geom(Circle{s});
                BracketParams params{
                    Rational(rng.uniform(-4, 4)) / Rational(1 + rng.uniform(0, 3)),
                    Rational(rng.uniform(-4, 4)) / Rational(1 + rng.uniform(0, 3))};
                SwapPoly p =
                    SwapPoly::monomial(random_monomial(rng, s, 1 + (int)rng.uniform(0, 2)), 1);
                SwapPoly q =
                    SwapPoly::monomial(random_monomial(rng, s, 1 + (int)rng.uniform(0, 2)), 1);
                SwapPoly r =
                    SwapPoly::monomial(random_monomial(rng, s, 1 + (int)rng.uniform(0, 2)), 1);
                SwapPoly jac = bracket(p, bracket(q, r, params, geom), params, geom) +
                               bracket(q, bracket(r, p, params, geom), params, geom) +
                               bracket(r, bracket(p, q, params, geom), params, geom);
                ++checked;
                if (!jac.is_zero()) ++failed;
            }
            ok = failed == 0 && checked > 0;
            report = Json{{"kind", "jacobi"}, {"checked", checked}, {"failed", failed},
                          {"ok", ok}};
        } else if (kind == "ideal") {
            Rng rng(Rng::derive(seed, 1));
            int s = 2 * n + 3;
            SingleCircleGeom geom(Circle{s});
            int checked = 0, failed = 0;
            for (int it = 0; it < trials * 8; ++it) {
                std::vector<PointId> rows, cols;
                for (int i = 0; i <= n; ++i) {
                    rows.push_back((PointId)rng.uniform(0, s - 1));
                    cols.push_back((PointId)rng.uniform(0, s - 1));
                }
                std::sort(rows.begin(), rows.end());
                std::sort(cols.begin(), cols.end());
                if (std::unique(rows.begin(), rows.end()) != rows.end()) continue;
                if (std::unique(cols.begin(), cols.end()) != cols.end()) continue;
                PointId a = (PointId)rng.uniform(0, s - 1);
                PointId b = (PointId)rng.uniform(0, s - 1);
                if (a == b) continue;
                SwapPoly br = bracket(SwapPoly::pair_gen(a, b), det_pairing({rows, cols}),
                                      BracketParams{}, geom);
                PitParams sub = pit;
                sub.seed = Rng::derive(seed, 100 + (uint64_t)it);
                ++checked;
                if (!is_zero_mod_Rn(br, n, s, sub)) ++failed;
            }
            ok = failed == 0 && checked > 0;
            report = Json{{"kind", "ideal"}, {"n", n}, {"checked", checked},
                          {"failed", failed}, {"ok", ok}};
        } else if (kind == "right-tuple") {
            int s = 2 * n + 4;
            std::vector<PointId> left;
            for (int i = 0; i < n - 1; ++i) left.push_back(n + i);
            DetQuotient base{left, (PointId)(2 * n - 1), (PointId)(2 * n),
                             default_right_tuple(n)};
            SwapFraction fbase = det_quotient(base);
            int checked = 0, failed = 0;
            std::vector<PointId> tuple;
            std::vector<bool> used((size_t)s, false);
            uint64_t stream = 0;
            std::function<void()> sweep = [&]() {
                if ((int)tuple.size() == n) {
                    DetQuotient q{base.left, base.t, base.y, tuple};
                    PitParams sub = pit;
                    sub.seed = Rng::derive(seed, stream++);
                    ++checked;
                    if (!frac_eq_mod_Rn(fbase, det_quotient(q), n, s, sub)) ++failed;
                    return;
                }
                for (PointId p = 0; p < s; ++p) {
                    if (used[(size_t)p]) continue;
                    used[(size_t)p] = true;
                    tuple.push_back(p);
                    sweep();
                    tuple.pop_back();
                    used[(size_t)p] = false;
                }
            };
            sweep();
            ok = failed == 0;
            report = Json{{"kind", "right-tuple"}, {"n", n}, {"tuples", checked},
                          {"failed", failed}, {"ok", ok}};
        } else if (kind == "section") {
            Rng rng(seed);
            PolygonTriangulation tri = load_triangulation(k, tri_file);
            int checked = 0, failed = 0;
            for (int it = 0; it < trials; ++it) {
                FlagConfig cfg = random_flag_config(tri.k, n, 60, rng);
                ++checked;
                if (!verify_section(cfg, tri, n, rng)) ++failed;
            }
            ok = failed == 0 && checked > 0;
            report = Json{{"kind", "section"}, {"n", n}, {"k", tri.k}, {"configs", checked},
                          {"failed", failed}, {"ok", ok}};
        } else if (kind == "surface") {
            SurfaceTriangulation st;
            if (!tri_file.empty()) {
                std::ifstream f(tri_file);
                if (!f) throw std::runtime_error("cannot open surface file: " + tri_file);
                Json j;
                f >> j;
                st = surface_from_json(j);
            } else {
                st = two_triangle_square();
            }
            SurfaceReport r = verify_surface_theta(st, n, pit);
            ok = r.ok;
            report = to_json(r);
        } else if (kind == "poisson-lie") {
            PoissonLieReport r = verify_poisson_lie(m, n);
            ok = r.ok;
            report = to_json(r);
        } else if (kind == "grassmannian") {
            GrassmannReport r = verify_grassmannian(n, m, parse_rational(alpha_s),
                                                    parse_rational(beta_s), pit);
            ok = r.ok;
            report = to_json(r);
        }

        if (format == "text") {
            emit(out, std::string(ok ? "pass" : "fail"));
        } else {
            emit(out, report.dump(2));
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
