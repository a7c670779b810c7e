#include "svol/volumes.hpp"

#include <algorithm>
#include <numeric>

namespace svol {

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

SimplexInstance SimplexInstance::generic(QuotientRingPtr ring) {
    SimplexInstance s;
    s.points.reserve(static_cast<std::size_t>(ring->spec().k) + 1);
    for (int i = 0; i <= ring->spec().k; ++i) s.points.push_back(ring->vertex(i));
    s.ring = std::move(ring);
    return s;
}

SimplexInstance SimplexInstance::permuted(const std::vector<int>& order) const {
    if (order.size() != points.size())
        throw structural_error("SimplexInstance::permuted: order must list every vertex");
    SimplexInstance s;
    s.ring = ring;
    for (int idx : order) {
        if (idx < 0 || idx > k()) throw structural_error("SimplexInstance::permuted: bad index");
        s.points.push_back(points[static_cast<std::size_t>(idx)]);
    }
    return s;
}

SimplexInstance SimplexInstance::with_equal_vertices(int i, int j) const {
    if (i < 0 || i > k() || j < 0 || j > k())
        throw structural_error("SimplexInstance::with_equal_vertices: bad index");
    SimplexInstance s = *this;
    s.points[static_cast<std::size_t>(j)] = points[static_cast<std::size_t>(i)];
    return s;
}

Poly bullet(const SimplexInstance& s, const MetricSpec& m, const ExtensionPerturbation* h,
            int i, int j) {
    if (i < 1 || i > s.k() || j < 1 || j > s.k())
        throw structural_error("bullet: vertex indices must be in 1..k");
    const auto& xi = s.points[static_cast<std::size_t>(i)];
    const auto& xj = s.points[static_cast<std::size_t>(j)];
    const auto& x0 = s.points[0];

    Poly gij(s.ring->var_table(), s.ring->degree_cap());
    if (s.ring->spec().kind == SimplexKind::mutual_neighbours || i == j) {
        gij = eval_g(m, xi, xj);
    } else {
        if (h == nullptr)
            throw usage_error("bullet: extended simplex needs an extension gbar for i != j");
        gij = eval_g_extended(m, *h, xi, xj);
    }
    Poly value = (-gij + eval_g(m, xi, x0) + eval_g(m, xj, x0)) * Rational(1, 2);
    return s.ring->normal_form(value);
}

PolyMatrix gram_matrix(const SimplexInstance& s, const MetricSpec& m,
                       const ExtensionPerturbation* h) {
    int k = s.k();
    PolyMatrix gram(k, k, s.ring->zero());
    for (int i = 1; i <= k; ++i) {
        for (int j = i; j <= k; ++j) {
            Poly b = bullet(s, m, h, i, j);
            gram.at(i - 1, j - 1) = b;
            gram.at(j - 1, i - 1) = b;
        }
    }
    return gram;
}

Poly det_ring(const PolyMatrix& mat) {
    if (mat.rows != mat.cols) throw structural_error("det_ring: matrix is not square");
    int k = mat.rows;
    Poly det(mat.entries.front().table(), mat.entries.front().degree_cap());
    if (k == 0) return det;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        Poly term = Poly::constant(det.table(), det.degree_cap(),
                                   Rational(inversions % 2 == 0 ? 1 : -1));
        for (int r = 0; r < k; ++r) term = term * mat.at(r, perm[static_cast<std::size_t>(r)]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Poly square_volume(const SimplexInstance& s, const MetricSpec& m, const ExtensionPerturbation* h) {
    Rational scale = Rational(1) / (factorial(s.k()) * factorial(s.k()));
    return s.ring->normal_form(det_ring(gram_matrix(s, m, h)) * scale);
}

Poly heron_square_area(const SimplexInstance& s, const MetricSpec& m) {
    if (s.k() != 2) throw usage_error("heron_square_area: requires k = 2");
    if (s.ring->spec().kind != SimplexKind::mutual_neighbours)
        throw usage_error("heron_square_area: requires a mutual simplex");
    const auto& x0 = s.points[0];
    const auto& x1 = s.points[1];
    const auto& x2 = s.points[2];
    Poly sum = eval_g(m, x0, x1) * eval_g(m, x0, x2) + eval_g(m, x1, x0) * eval_g(m, x1, x2) +
               eval_g(m, x2, x0) * eval_g(m, x2, x1);
    return s.ring->normal_form(sum * Rational(1, 8));
}

Poly omega_squared(const SimplexInstance& s, const MetricSpec& m) {
    int n = s.n();
    if (s.k() != n) throw usage_error("omega_squared: requires k = n");
    PolyMatrix X(n, n, s.ring->zero());
    for (int j = 1; j <= n; ++j)
        for (int a = 0; a < n; ++a)
            X.at(a, j - 1) = s.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] -
                             s.points[0][static_cast<std::size_t>(a)];
    Poly dX = det_ring(X);
    Poly detG = det_ring(eval_G(m, s.points[0]));
    Rational scale = Rational(1) / (factorial(n) * factorial(n));
    return s.ring->normal_form(dX * dX * detG * scale);
}

Poly multilinear_component(const Poly& p, const QuotientRing& ring) {
    const VarTable& table = *ring.var_table();
    return p.filtered([&table](const Monomial& m) {
        std::vector<int> deg = m.block_degrees(table);
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    });
}

}  // namespace svol
