#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svol/errors.hpp"
#include "svol/rational.hpp"
#include "svol/vartable.hpp"

namespace svol {

/// Sparse monomial: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].second <= 0)
                throw structural_error("Monomial: exponents must be positive");
            if (i + 1 < factors_.size() && factors_[i].first == factors_[i + 1].first)
                throw structural_error("Monomial: duplicate variable");
        }
    }

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, int exp = 1) { return Monomial({{v, exp}}); }

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent(int v) const {
        for (auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    /// Per-block total degree against the given table.
    std::vector<int> block_degrees(const VarTable& table) const {
        std::vector<int> deg(static_cast<std::size_t>(table.block_count()), 0);
        for (auto& [v, e] : factors_) deg[static_cast<std::size_t>(table.block_of(v))] += e;
        return deg;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
                r.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (auto& [v, e] : o.factors_)
            if (exponent(v) < e) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;

    /// Graded lexicographic compare: higher total degree wins; at equal degree
    /// the monomial with the larger exponent on the earliest differing
    /// variable is the larger.
    static int cmp(const Monomial& x, const Monomial& y) {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy ? -1 : 1;
        auto a = x.factors_.begin(), b = y.factors_.begin();
        while (a != x.factors_.end() && b != y.factors_.end()) {
            if (a->first != b->first)
                // The one holding the smaller variable index has a positive
                // exponent there while the other has zero.
                return a->first < b->first ? 1 : -1;
            if (a->second != b->second) return a->second > b->second ? 1 : -1;
            ++a, ++b;
        }
        if (a != x.factors_.end()) return 1;
        if (b != y.factors_.end()) return -1;
        return 0;
    }

  private:
    std::vector<std::pair<int, int>> factors_;
};

/// Orders maps leading-monomial first.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

/// Sparse multivariate polynomial over Rational, truncated at a total-degree
/// cap. Terms are kept in descending graded-lex order with no zero
/// coefficients, so equal polynomials have identical term maps.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    Poly(VarTablePtr table, int degree_cap) : table_(std::move(table)), cap_(degree_cap) {}

    static Poly constant(VarTablePtr table, int cap, Rational c);
    static Poly variable(VarTablePtr table, int cap, int var);

    const VarTablePtr& table() const { return table_; }
    int degree_cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial::one()); }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    bool operator==(const Poly& o) const { return same_table(table_, o.table_) && terms_ == o.terms_; }

    /// Keeps only terms the predicate accepts.
    template <typename Pred>
    Poly filtered(Pred keep) const {
        Poly r(table_, cap_);
        for (auto& [m, c] : terms_)
            if (keep(m)) r.terms_.emplace(m, c);
        return r;
    }

    std::string render() const;

  private:
    void check_compatible(const Poly& o) const;

    VarTablePtr table_;
    int cap_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/// Ring-homomorphic substitution: every variable of p's table must have an
/// image over the (shared) target table; the result is truncated at the
/// images' common degree cap.
Poly substitute(const Poly& p, const std::vector<Poly>& images);

/// Decomposes p by per-block multi-degree; the components sum back to p.
/// Returned in ascending lexicographic multi-degree order.
std::vector<std::pair<std::vector<int>, Poly>> homogeneous_components(const Poly& p);

/// The component of p whose total degree is exactly d.
Poly degree_component(const Poly& p, int d);

/// All monomials of exactly `degree`, optionally respecting per-block degree
/// limits. Ascending variable-index order of construction; callers that need
/// a particular order sort themselves.
std::vector<Monomial> monomials_of_degree(const VarTable& table, int degree,
                                          const std::vector<int>* block_limits = nullptr);

}  // namespace svol
