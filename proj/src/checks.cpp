#include "svol/checks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "svol/config.hpp"

namespace svol {

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Rational draw_rational(std::mt19937_64& rng) {
    int num = static_cast<int>(rng() % 9) - 4;
    int den = static_cast<int>(rng() % 3) + 1;
    return Rational(num) / den;
}

/// Random polynomial of total degree <= max_degree, small rational
/// coefficients, deterministic per rng state.
Poly random_poly(const VarTablePtr& table, int cap, int max_degree, std::mt19937_64& rng) {
    Poly p(table, cap);
    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& m : monomials_of_degree(*table, d))
            if ((rng() & 1) != 0) p.add_term(m, draw_rational(rng));
    return p;
}

/// Folds a list of asserted-zero residuals into a report: pass iff all are
/// zero, else the first nonzero residual is recorded.
void finish(CheckReport& report, const std::vector<Poly>& residuals, const Stopwatch& timer) {
    report.status = CheckReport::Status::pass;
    report.residual = "0";
    for (const Poly& r : residuals) {
        if (!r.is_zero()) {
            report.status = CheckReport::Status::fail;
            report.residual = r.render();
            break;
        }
    }
    report.elapsed_seconds = timer.seconds();
}

/// eps_i^T G(0) eps_j lifted into the ring.
Poly constant_metric_pairing(const QuotientRing& ring, const MetricSpec& m,
                             const std::vector<Poly>& x, const std::vector<Poly>& y) {
    std::vector<Rational> g0 = m.constant_matrix();
    Poly out = ring.zero();
    for (int a = 0; a < m.n(); ++a)
        for (int b = 0; b < m.n(); ++b)
            out += x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] *
                   g0[static_cast<std::size_t>(a) * m.n() + b];
    return out;
}

std::vector<std::vector<int>> all_orderings(int count) {
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace

std::string status_name(CheckReport::Status s) {
    switch (s) {
        case CheckReport::Status::pass: return "pass";
        case CheckReport::Status::fail: return "fail";
        case CheckReport::Status::report_only: return "report-only";
    }
    return "?";
}

CheckReport check_alternating(int n, std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_alternating",
                       .instance = {.n = n, .k = 0, .metric = "-", .seed = seed}};

    // Pair ring: base point block "a" of order 2, increment block "e" of
    // order 1; the pair (x, y) = (a, a + e) is a first-order pair.
    SimplexSpec spec = SimplexSpec::make(n, 2, SimplexKind::extended);
    spec.block_orders = {2, 1};
    spec.block_names = {"a", "e"};
    QuotientRingPtr ring = cached_ring(spec);

    std::vector<Poly> x_pt = ring->vertex(1);
    std::vector<Poly> y_pt;
    for (int a = 0; a < n; ++a) y_pt.push_back(ring->coord(1, a) + ring->coord(2, a));

    // f(x,y) vanishing on the diagonal: every term carries a (y - x) factor.
    VarTablePtr ambient = VarTable::make({{"x", n}, {"y", n}});
    std::mt19937_64 rng(seed);
    const int ambient_cap = ring->degree_cap() + 3;
    Poly f(ambient, ambient_cap);
    for (int a = 0; a < n; ++a) {
        Poly coeff = random_poly(ambient, ambient_cap, 2, rng);
        Poly diff = Poly::variable(ambient, ambient_cap, ambient->var_index(1, a)) -
                    Poly::variable(ambient, ambient_cap, ambient->var_index(0, a));
        f += coeff * diff;
    }

    auto eval_f = [&](const std::vector<Poly>& xv, const std::vector<Poly>& yv) {
        std::vector<Poly> images = xv;
        images.insert(images.end(), yv.begin(), yv.end());
        return substitute(f, images);
    };
    Poly alternating = ring->normal_form(eval_f(x_pt, y_pt) + eval_f(y_pt, x_pt));

    // Corollary instance: a symmetric diagonal-vanishing function vanishes
    // on the first-order pair outright.
    Poly sym(ambient, ambient_cap);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            Poly da = Poly::variable(ambient, ambient_cap, ambient->var_index(1, a)) -
                      Poly::variable(ambient, ambient_cap, ambient->var_index(0, a));
            Poly db = Poly::variable(ambient, ambient_cap, ambient->var_index(1, b)) -
                      Poly::variable(ambient, ambient_cap, ambient->var_index(0, b));
            sym += da * db * draw_rational(rng);
        }
    }
    std::vector<Poly> sym_images = x_pt;
    sym_images.insert(sym_images.end(), y_pt.begin(), y_pt.end());
    Poly symmetric_vanishes = ring->normal_form(substitute(sym, sym_images));

    finish(report, {alternating, symmetric_vanishes}, timer);
    return report;
}

CheckReport check_bullet_approximation(int n, const MetricSpec& m, const std::string& metric_name,
                                       std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_bullet_approximation",
                       .instance = {.n = n, .k = 2, .metric = metric_name, .seed = seed}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, 2, SimplexKind::mutual_neighbours));
    SimplexInstance s = SimplexInstance::generic(ring);

    Poly resid = bullet(s, m, nullptr, 1, 2) -
                 ring->normal_form(constant_metric_pairing(*ring, m, s.points[1], s.points[2]));
    resid = ring->normal_form(resid);
    Poly low_degrees = ring->zero();
    for (int d = 0; d <= 2; ++d) low_degrees += degree_component(resid, d);

    std::vector<Poly> residuals{low_degrees};
    for (int i = 1; i <= 2; ++i) {
        Poly diag = bullet(s, m, nullptr, i, i) -
                    constant_metric_pairing(*ring, m, s.points[static_cast<std::size_t>(i)],
                                            s.points[static_cast<std::size_t>(i)]);
        residuals.push_back(ring->normal_form(diag));
    }
    finish(report, residuals, timer);
    return report;
}

CheckReport check_gram_reduction(int n, int k, SimplexKind kind, const MetricSpec& m,
                                 const std::string& metric_name, std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{
        .check_name = "check_gram_reduction",
        .instance = {.n = n,
                     .k = k,
                     .metric = metric_name,
                     .seed = seed,
                     .detail = kind == SimplexKind::mutual_neighbours ? "mutual" : "extended"}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, k, kind));
    SimplexInstance s = SimplexInstance::generic(ring);
    ExtensionPerturbation h0 = ExtensionPerturbation::zero(n);
    const ExtensionPerturbation* h = kind == SimplexKind::extended ? &h0 : nullptr;

    Poly lhs = det_ring(gram_matrix(s, m, h));

    PolyMatrix X(n, k, ring->zero());
    for (int j = 1; j <= k; ++j)
        for (int a = 0; a < n; ++a) X.at(a, j - 1) = s.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
    Poly rhs = det_ring(X.transpose() * eval_G(m, s.points[0]) * X);

    finish(report, {ring->normal_form(lhs - rhs)}, timer);
    return report;
}

CheckReport check_symmetry(int n, int k, const MetricSpec& m, const std::string& metric_name,
                           std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_symmetry",
                       .instance = {.n = n, .k = k, .metric = metric_name, .seed = seed}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, k, SimplexKind::mutual_neighbours));
    SimplexInstance s = SimplexInstance::generic(ring);
    Poly reference = square_volume(s, m);

    std::vector<Poly> residuals;
    for (const std::vector<int>& order : all_orderings(k + 1)) {
        Poly vol = square_volume(s.permuted(order), m);
        Poly r = ring->normal_form(vol - reference);
        if (!r.is_zero()) {
            residuals.push_back(std::move(r));
            break;
        }
    }
    finish(report, residuals, timer);
    return report;
}

CheckReport check_vanish_on_first_neighbours(int n, int k, const MetricSpec& m,
                                             const std::string& metric_name, std::uint64_t seed,
                                             int pair_i, int pair_j) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_vanish_on_first_neighbours",
                       .instance = {.n = n,
                                    .k = k,
                                    .metric = metric_name,
                                    .seed = seed,
                                    .detail = "pair(" + std::to_string(pair_i) + "," +
                                              std::to_string(pair_j) + ")"}};

    if (pair_i >= pair_j || pair_i < 0 || pair_j > k)
        throw structural_error("check_vanish_on_first_neighbours: invalid pair");
    SimplexSpec spec = SimplexSpec::make(n, k, SimplexKind::mutual_neighbours);
    spec.overrides.push_back({pair_i, pair_j, 1});
    QuotientRingPtr ring = cached_ring(spec);
    SimplexInstance s = SimplexInstance::generic(ring);

    finish(report, {square_volume(s, m)}, timer);
    return report;
}

CheckReport check_extension_independence(int n, int k, const MetricSpec& m,
                                         const std::string& metric_name,
                                         const std::vector<std::uint64_t>& perturbation_seeds) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_extension_independence",
                       .instance = {.n = n,
                                    .k = k,
                                    .metric = metric_name,
                                    .seed = perturbation_seeds.empty() ? 0 : perturbation_seeds[0]}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, k, SimplexKind::extended));
    SimplexInstance s = SimplexInstance::generic(ring);

    ExtensionPerturbation canonical = ExtensionPerturbation::zero(n);
    Poly reference = square_volume(s, m, &canonical);

    std::vector<Poly> residuals;
    for (std::uint64_t hs : perturbation_seeds) {
        ExtensionPerturbation h = ExtensionPerturbation::random(n, 1, hs);
        residuals.push_back(ring->normal_form(square_volume(s, m, &h) - reference));
    }
    finish(report, residuals, timer);
    return report;
}

CheckReport check_volume_form_identity(int n, const MetricSpec& m, const std::string& metric_name,
                                       std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{.check_name = "check_volume_form_identity",
                       .instance = {.n = n, .k = n, .metric = metric_name, .seed = seed}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, n, SimplexKind::extended));
    SimplexInstance s = SimplexInstance::generic(ring);
    ExtensionPerturbation h0 = ExtensionPerturbation::zero(n);

    Poly theorem = ring->normal_form(omega_squared(s, m) - square_volume(s, m, &h0));

    // Grading instance: with the sqrt(det G(0)) factor replaced by a formal
    // unit, Omega^2 is already the square of its multilinear component.
    PolyMatrix X(n, n, ring->zero());
    for (int j = 1; j <= n; ++j)
        for (int a = 0; a < n; ++a) X.at(a, j - 1) = s.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
    Poly omega_formal = ring->normal_form(det_ring(X) * (Rational(1) / factorial(n)));
    Poly mlc = multilinear_component(omega_formal, *ring);
    Poly grading = ring->normal_form(mlc * mlc - omega_formal * omega_formal);

    finish(report, {theorem, grading}, timer);
    return report;
}

CheckReport experiment_heron_vs_gram(int n, const MetricSpec& m, const std::string& metric_name,
                                     std::uint64_t seed) {
    Stopwatch timer;
    CheckReport report{.check_name = "experiment_heron_vs_gram",
                       .instance = {.n = n, .k = 2, .metric = metric_name, .seed = seed}};

    QuotientRingPtr ring = cached_ring(SimplexSpec::make(n, 2, SimplexKind::mutual_neighbours));
    SimplexInstance s = SimplexInstance::generic(ring);

    Poly residual = ring->normal_form(heron_square_area(s, m) - square_volume(s, m));
    report.status = CheckReport::Status::report_only;
    report.residual = residual.render();
    report.elapsed_seconds = timer.seconds();
    return report;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{
        "check_alternating",
        "check_bullet_approximation",
        "check_extension_independence",
        "check_gram_reduction",
        "check_symmetry",
        "check_vanish_on_first_neighbours",
        "check_volume_form_identity",
        "experiment_heron_vs_gram",
    };
    return names;
}

std::vector<CheckReport> run_suite(const RunConfig& config) {
    std::vector<CheckReport> reports;
    const std::string digest = config.digest();

    auto guard = [&](const CheckInstance& instance, const std::string& name, auto&& body) {
        CheckReport report;
        try {
            report = body();
        } catch (const std::exception& e) {
            report.check_name = name;
            report.instance = instance;
            report.status = CheckReport::Status::fail;
            report.residual = std::string("error: ") + e.what();
        }
        report.provenance = digest;
        reports.push_back(std::move(report));
    };

    for (const std::string& name : config.checks) {
        for (int n : config.n_values) {
            for (const MetricDescriptor& md : config.metrics) {
                std::optional<MetricSpec> metric = md.realize(n);
                if (!metric) continue;
                const std::string label = md.label();
                for (std::uint64_t seed : config.seeds) {
                    if (name == "check_alternating") {
                        if (&md != &config.metrics.front()) continue;  // metric-free check
                        guard({.n = n, .metric = "-", .seed = seed}, name,
                              [&] { return check_alternating(n, seed); });
                    } else if (name == "check_bullet_approximation") {
                        guard({.n = n, .k = 2, .metric = label, .seed = seed}, name,
                              [&] { return check_bullet_approximation(n, *metric, label, seed); });
                    } else if (name == "check_volume_form_identity") {
                        guard({.n = n, .k = n, .metric = label, .seed = seed}, name,
                              [&] { return check_volume_form_identity(n, *metric, label, seed); });
                    } else if (name == "experiment_heron_vs_gram") {
                        if (n < 2) continue;
                        guard({.n = n, .k = 2, .metric = label, .seed = seed}, name,
                              [&] { return experiment_heron_vs_gram(n, *metric, label, seed); });
                    } else {
                        for (int k : config.k_values) {
                            if (k > n) continue;  // invalid combination, skipped
                            CheckInstance base{.n = n, .k = k, .metric = label, .seed = seed};
                            if (name == "check_gram_reduction") {
                                for (SimplexKind kind :
                                     {SimplexKind::mutual_neighbours, SimplexKind::extended}) {
                                    guard(base, name, [&] {
                                        return check_gram_reduction(n, k, kind, *metric, label, seed);
                                    });
                                }
                            } else if (name == "check_symmetry") {
                                guard(base, name,
                                      [&] { return check_symmetry(n, k, *metric, label, seed); });
                            } else if (name == "check_vanish_on_first_neighbours") {
                                for (int i = 0; i <= k; ++i) {
                                    for (int j = i + 1; j <= k; ++j) {
                                        guard(base, name, [&] {
                                            return check_vanish_on_first_neighbours(
                                                n, k, *metric, label, seed, i, j);
                                        });
                                    }
                                }
                            } else if (name == "check_extension_independence") {
                                guard(base, name, [&] {
                                    return check_extension_independence(
                                        n, k, *metric, label, {seed * 1000 + 1, seed * 1000 + 2});
                                });
                            } else {
                                guard(base, name, [&]() -> CheckReport {
                                    throw usage_error("unknown check '" + name + "'");
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        if (a.check_name != b.check_name) return a.check_name < b.check_name;
        return a.instance.tie() < b.instance.tie();
    });
    return reports;
}

}  // namespace svol
