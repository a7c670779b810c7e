#pragma once

#include "svol/metric.hpp"
#include "svol/quotient.hpp"

namespace svol {

/// A concrete simplex over a quotient ring: k+1 vertex points, each an
/// n-vector of ring elements. The generic instance has the base vertex at
/// the origin and vertex i equal to its own coordinate block; permuted and
/// specialized instances are derived from it.
struct SimplexInstance {
    QuotientRingPtr ring;
    std::vector<std::vector<Poly>> points;

    static SimplexInstance generic(QuotientRingPtr ring);

    int n() const { return ring->spec().n; }
    int k() const { return static_cast<int>(points.size()) - 1; }

    /// Reorders the vertices: new vertex t is old vertex order[t].
    SimplexInstance permuted(const std::vector<int>& order) const;

    /// Replaces vertex j's point by vertex i's (equal-vertex specialization).
    SimplexInstance with_equal_vertices(int i, int j) const;
};

/// Polarization product (x_i - x_0) . (x_j - x_0) =
/// (1/2)(-gbar(x_i,x_j) + g(x_i,x_0) + g(x_j,x_0)), normal-formed.
/// On an extended simplex with i != j an extension must be supplied
/// (ExtensionPerturbation::zero for the canonical one).
Poly bullet(const SimplexInstance& s, const MetricSpec& m, const ExtensionPerturbation* h,
            int i, int j);

/// The k x k matrix of pairwise bullet products, stored symmetric.
PolyMatrix gram_matrix(const SimplexInstance& s, const MetricSpec& m,
                       const ExtensionPerturbation* h = nullptr);

/// Exact Leibniz determinant over the ring.
Poly det_ring(const PolyMatrix& mat);

/// vol^2 = 1/(k!)^2 det(gram), normal-formed.
Poly square_volume(const SimplexInstance& s, const MetricSpec& m,
                   const ExtensionPerturbation* h = nullptr);

/// Degree-reduced Heron formula for k = 2 on mutual simplices:
/// (1/8)(g01*g02 + g10*g12 + g20*g21), normal-formed.
Poly heron_square_area(const SimplexInstance& s, const MetricSpec& m);

/// Squared candidate volume form for k = n:
/// (1/n!)^2 det(X)^2 det(G(x_0)), normal-formed. The square root of the
/// candidate form is never taken.
Poly omega_squared(const SimplexInstance& s, const MetricSpec& m);

/// Component of p with per-block multi-degree exactly (1, ..., 1).
Poly multilinear_component(const Poly& p, const QuotientRing& ring);

Rational factorial(int k);

}  // namespace svol
