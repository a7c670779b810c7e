#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "svol/poly.hpp"

namespace svol {

/// Rectangular matrix of polynomials sharing one table and cap.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> entries;  // row-major

    PolyMatrix(int r, int c, const Poly& fill)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    Poly& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
};

/// A Riemannian metric in coordinates: a symmetric n x n matrix G(x) of
/// polynomials in the ambient variables x1..xn, with det G(0) > 0. The
/// square length of a second-order pair is g(x,y) = (y-x)^T G(x) (y-x).
class MetricSpec {
  public:
    int n() const { return n_; }
    int taylor_degree() const { return taylor_degree_; }
    const VarTablePtr& ambient_table() const { return ambient_; }
    const Poly& entry(int a, int b) const { return entries_[static_cast<std::size_t>(a) * n_ + b]; }
    const std::vector<Poly>& entries() const { return entries_; }

    /// The constant matrix G(0) as exact rationals.
    std::vector<Rational> constant_matrix() const;

    friend MetricSpec validate_metric(int n, std::vector<Poly> entries);

  private:
    MetricSpec() = default;
    int n_ = 0;
    int taylor_degree_ = 0;
    VarTablePtr ambient_;
    std::vector<Poly> entries_;  // n x n row-major
};

/// Checks symmetry and det G(0) > 0; throws validation_error otherwise.
/// Entries must live on an ambient table with a single n-dimensional block.
MetricSpec validate_metric(int n, std::vector<Poly> entries);

/// Ambient table ("x" block of dimension n) for metric entries.
VarTablePtr ambient_table(int n);

/// G(0) = identity plus a small random symmetric rational matrix with
/// det G(0) > 0 (rejection-sampled); higher-degree coefficients are small
/// random rationals. Deterministic per seed.
MetricSpec random_metric(int n, int taylor_degree, std::uint64_t seed);

/// G evaluated at a ring-valued point: exact Taylor expansion by
/// substitution. Result is symmetric.
PolyMatrix eval_G(const MetricSpec& m, const std::vector<Poly>& point);

/// g(x,y) = (y-x)^T G(x) (y-x), truncated at the ring cap.
Poly eval_g(const MetricSpec& m, const std::vector<Poly>& x, const std::vector<Poly>& y);

/// A perturbation h(x,y) = sum_{a<=b<=c} h_abc(x) (y-x)_a (y-x)_b (y-x)_c of
/// order >= 3 in y-x; g + h is an alternative extension of g to fourth-order
/// pairs. The zero perturbation gives the canonical extension (the g formula
/// applied verbatim).
class ExtensionPerturbation {
  public:
    static ExtensionPerturbation zero(int n);
    static ExtensionPerturbation random(int n, int taylor_degree, std::uint64_t seed);

    int n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    bool is_zero() const { return coefficients_.empty(); }

    /// h(x,y) over the ring the points live on.
    Poly eval(const std::vector<Poly>& x, const std::vector<Poly>& y) const;

  private:
    int n_ = 0;
    std::uint64_t seed_ = 0;
    VarTablePtr ambient_;
    std::map<std::array<int, 3>, Poly> coefficients_;  // key: a <= b <= c
};

/// g(x,y) + h(x,y).
Poly eval_g_extended(const MetricSpec& m, const ExtensionPerturbation& h,
                     const std::vector<Poly>& x, const std::vector<Poly>& y);

/// Exact Leibniz determinant of a square matrix of rationals.
Rational det_rational(const std::vector<Rational>& mat, int n);

}  // namespace svol
