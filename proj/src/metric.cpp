#include "svol/metric.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace svol {

namespace {

// Platform-independent small rational draws: numerators in [-4, 4],
// denominators in {1, 2, 3}.
Rational draw_rational(std::mt19937_64& rng) {
    int num = static_cast<int>(rng() % 9) - 4;
    int den = static_cast<int>(rng() % 3) + 1;
    return Rational(num) / den;
}

bool draw_coin(std::mt19937_64& rng) { return (rng() & 1) != 0; }

void check_point(int n, const std::vector<Poly>& p, const char* who) {
    if (static_cast<int>(p.size()) != n)
        throw structural_error(std::string(who) + ": point dimension mismatch");
}

}  // namespace

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols, rows, entries.front());
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows) throw structural_error("PolyMatrix: dimension mismatch in product");
    Poly z(entries.front().table(), entries.front().degree_cap());
    PolyMatrix out(rows, o.cols, z);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < o.cols; ++c)
            for (int m = 0; m < cols; ++m) out.at(r, c) += at(r, m) * o.at(m, c);
    return out;
}

VarTablePtr ambient_table(int n) { return VarTable::make({{"x", n}}); }

std::vector<Rational> MetricSpec::constant_matrix() const {
    std::vector<Rational> g0;
    g0.reserve(entries_.size());
    for (const Poly& p : entries_) g0.push_back(p.constant_term());
    return g0;
}

MetricSpec validate_metric(int n, std::vector<Poly> entries) {
    if (n < 1) throw validation_error("metric: n must be >= 1");
    if (static_cast<int>(entries.size()) != n * n)
        throw validation_error("metric: expected a square n x n entry array");
    VarTablePtr table = entries.front().table();
    int cap = entries.front().degree_cap();
    for (const Poly& p : entries)
        if (!same_table(p.table(), table) || p.degree_cap() != cap)
            throw validation_error("metric: entries must share one ambient table and cap");
    if (table->block_count() != 1 || table->block(0).dim != n)
        throw validation_error("metric: ambient table must have a single n-dimensional block");

    MetricSpec m;
    m.n_ = n;
    m.ambient_ = table;
    m.entries_ = std::move(entries);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!(m.entry(a, b) == m.entry(b, a)))
                throw validation_error("metric: entries are not symmetric at (" +
                                       std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    for (const Poly& p : m.entries_) m.taylor_degree_ = std::max(m.taylor_degree_, p.degree());
    if (det_rational(m.constant_matrix(), n) <= 0)
        throw validation_error("metric: det G(0) must be positive");
    return m;
}

MetricSpec random_metric(int n, int taylor_degree, std::uint64_t seed) {
    if (n < 1 || taylor_degree < 0) throw structural_error("random_metric: bad parameters");
    std::mt19937_64 rng(seed);
    VarTablePtr table = ambient_table(n);
    int cap = std::max(taylor_degree, 1);

    // Constant part: identity plus a random symmetric matrix, rejection
    // sampled until det G(0) > 0.
    std::vector<Rational> g0;
    for (;;) {
        g0.assign(static_cast<std::size_t>(n) * n, Rational(0));
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                Rational v = draw_rational(rng);
                if (a == b) v += 1;
                g0[static_cast<std::size_t>(a) * n + b] = v;
                g0[static_cast<std::size_t>(b) * n + a] = v;
            }
        }
        if (det_rational(g0, n) > 0) break;
    }

    std::vector<Poly> entries(static_cast<std::size_t>(n) * n, Poly(table, cap));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            Poly p = Poly::constant(table, cap, g0[static_cast<std::size_t>(a) * n + b]);
            for (int d = 1; d <= taylor_degree; ++d) {
                for (const Monomial& mon : monomials_of_degree(*table, d)) {
                    if (!draw_coin(rng)) continue;
                    Rational c = draw_rational(rng);
                    p.add_term(mon, c);
                }
            }
            entries[static_cast<std::size_t>(a) * n + b] = p;
            entries[static_cast<std::size_t>(b) * n + a] = p;
        }
    }
    return validate_metric(n, std::move(entries));
}

PolyMatrix eval_G(const MetricSpec& m, const std::vector<Poly>& point) {
    check_point(m.n(), point, "eval_G");
    PolyMatrix out(m.n(), m.n(), point.front());
    for (int a = 0; a < m.n(); ++a)
        for (int b = 0; b < m.n(); ++b) out.at(a, b) = substitute(m.entry(a, b), point);
    return out;
}

Poly eval_g(const MetricSpec& m, const std::vector<Poly>& x, const std::vector<Poly>& y) {
    check_point(m.n(), x, "eval_g");
    check_point(m.n(), y, "eval_g");
    PolyMatrix Gx = eval_G(m, x);
    Poly result(x.front().table(), x.front().degree_cap());
    for (int a = 0; a < m.n(); ++a) {
        for (int b = 0; b < m.n(); ++b) {
            result += (y[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(a)]) *
                      Gx.at(a, b) *
                      (y[static_cast<std::size_t>(b)] - x[static_cast<std::size_t>(b)]);
        }
    }
    return result;
}

ExtensionPerturbation ExtensionPerturbation::zero(int n) {
    ExtensionPerturbation h;
    h.n_ = n;
    h.ambient_ = ambient_table(n);
    return h;
}

ExtensionPerturbation ExtensionPerturbation::random(int n, int taylor_degree, std::uint64_t seed) {
    ExtensionPerturbation h = zero(n);
    h.seed_ = seed;
    std::mt19937_64 rng(seed);
    int cap = std::max(taylor_degree, 1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int c = b; c < n; ++c) {
                if (!draw_coin(rng)) continue;
                Poly p = Poly::constant(h.ambient_, cap, draw_rational(rng));
                for (int d = 1; d <= taylor_degree; ++d)
                    for (const Monomial& mon : monomials_of_degree(*h.ambient_, d))
                        if (draw_coin(rng)) p.add_term(mon, draw_rational(rng));
                if (!p.is_zero()) h.coefficients_.emplace(std::array<int, 3>{a, b, c}, p);
            }
        }
    }
    return h;
}

Poly ExtensionPerturbation::eval(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
    check_point(n_, x, "ExtensionPerturbation::eval");
    check_point(n_, y, "ExtensionPerturbation::eval");
    Poly result(x.front().table(), x.front().degree_cap());
    for (const auto& [abc, coeff] : coefficients_) {
        Poly term = substitute(coeff, x);
        for (int idx : abc)
            term = term * (y[static_cast<std::size_t>(idx)] - x[static_cast<std::size_t>(idx)]);
        result += term;
    }
    return result;
}

Poly eval_g_extended(const MetricSpec& m, const ExtensionPerturbation& h,
                     const std::vector<Poly>& x, const std::vector<Poly>& y) {
    if (h.n() != m.n()) throw structural_error("eval_g_extended: perturbation dimension mismatch");
    Poly g = eval_g(m, x, y);
    if (h.is_zero()) return g;
    return g + h.eval(x, y);
}

Rational det_rational(const std::vector<Rational>& mat, int n) {
    if (static_cast<int>(mat.size()) != n * n)
        throw structural_error("det_rational: matrix is not n x n");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational det(0);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (int r = 0; r < n; ++r)
            term *= mat[static_cast<std::size_t>(r) * n + perm[static_cast<std::size_t>(r)]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace svol
