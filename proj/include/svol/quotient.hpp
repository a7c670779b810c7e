#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "svol/poly.hpp"

namespace svol {

/// Only first- and second-order neighbour relations occur.
struct NeighbourOrder {
    int value;
    explicit NeighbourOrder(int v) : value(v) {
        if (v != 1 && v != 2) throw structural_error("NeighbourOrder: must be 1 or 2");
    }
    bool operator==(const NeighbourOrder&) const = default;
};

enum class SimplexKind { mutual_neighbours, extended };

/// Lowers the relation between vertices i < j to first order.
struct PairOverride {
    int i;
    int j;
    int order;
    bool operator==(const PairOverride&) const = default;
};

/// Declares the vertex blocks of a simplex and the neighbour orders among
/// them. The base vertex x0 is pinned to the coordinate origin; vertex i has
/// coordinate block eps_i = x_i - x_0.
struct SimplexSpec {
    int n = 0;
    int k = 0;
    SimplexKind kind = SimplexKind::mutual_neighbours;
    std::vector<int> block_orders;          // size k, order of x_i ~ x_0
    std::vector<PairOverride> overrides;    // sorted pairs i < j
    std::vector<std::string> block_names;   // size k

    static SimplexSpec make(int n, int k, SimplexKind kind);

    /// Neighbour order between vertices i < j after overrides, or 0 when the
    /// kind places no relation on the pair.
    int pair_order(int i, int j) const;

    void validate() const;
    std::string key() const;
    bool operator==(const SimplexSpec&) const = default;
};

/// The truncated coordinate ring of the simplex modulo its nilpotency ideal.
/// Normal forms are exact linear projections using per-degree reduced
/// row-echelon bases, built once. Immutable after construction.
class QuotientRing {
  public:
    explicit QuotientRing(SimplexSpec spec);

    const SimplexSpec& spec() const { return spec_; }
    const VarTablePtr& var_table() const { return table_; }
    int degree_cap() const { return cap_; }
    const std::vector<Poly>& generators() const { return generators_; }

    /// Effective neighbour order of vertex i (1-based) relative to the base.
    int block_limit(int i) const { return block_limits_[static_cast<std::size_t>(i - 1)]; }

    Poly zero() const { return Poly(table_, cap_); }
    Poly constant(const Rational& c) const { return Poly::constant(table_, cap_, c); }
    /// Coordinate variable a (0-based) of eps_i = x_i - x_0, i in 1..k.
    Poly coord(int i, int a) const {
        return Poly::variable(table_, cap_, table_->var_index(i - 1, a));
    }
    /// The generic vertex x_i as a coordinate vector (x_0 is the zero vector).
    std::vector<Poly> vertex(int i) const;

    Poly normal_form(const Poly& p) const;
    bool equal(const Poly& a, const Poly& b) const { return normal_form(a - b).is_zero(); }

    /// Monomials of the given degree that survive normal form (a basis of the
    /// degree-d slice of the quotient).
    std::vector<Monomial> standard_monomials(int degree) const;

  private:
    bool within_limits(const Monomial& m) const;
    Poly prune(const Poly& p) const;
    void insert_row(int degree, Poly row);

    SimplexSpec spec_;
    VarTablePtr table_;
    int cap_ = 0;
    std::vector<int> block_limits_;
    std::vector<Poly> generators_;
    // Per degree: pivot monomial -> fully reduced row with unit pivot coefficient.
    std::vector<std::map<Monomial, Poly, MonomialGreater>> rows_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

QuotientRingPtr build_ideal(const SimplexSpec& spec);

/// Process-wide cache of built rings, keyed by SimplexSpec. Thread-safe.
QuotientRingPtr cached_ring(const SimplexSpec& spec);

}  // namespace svol
