#include "svol/quotient.hpp"

#include <mutex>
#include <sstream>

namespace svol {

namespace {

const char* kBlockLetters[] = {"e", "f", "h", "w", "u", "v"};

// Non-decreasing index tuples of the given length over 0..n-1.
void multisets_rec(int n, int len, int start, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(current);
        return;
    }
    for (int a = start; a < n; ++a) {
        current.push_back(a);
        multisets_rec(n, len - 1, a, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> coordinate_multisets(int n, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    multisets_rec(n, len, 0, current, out);
    return out;
}

}  // namespace

SimplexSpec SimplexSpec::make(int n, int k, SimplexKind kind) {
    SimplexSpec s;
    s.n = n;
    s.k = k;
    s.kind = kind;
    s.block_orders.assign(static_cast<std::size_t>(k), 2);
    for (int i = 0; i < k; ++i) {
        s.block_names.push_back(i < 6 ? kBlockLetters[i] : "b" + std::to_string(i + 1));
    }
    return s;
}

int SimplexSpec::pair_order(int i, int j) const {
    if (i > j) std::swap(i, j);
    int base_order;
    if (i == 0) {
        base_order = block_orders[static_cast<std::size_t>(j - 1)];
    } else if (kind == SimplexKind::mutual_neighbours) {
        base_order = 2;
    } else {
        return 0;  // extended: no relation between non-base vertices
    }
    for (const PairOverride& o : overrides)
        if (o.i == i && o.j == j) return o.order;
    return base_order;
}

void SimplexSpec::validate() const {
    if (n < 1) throw structural_error("SimplexSpec: n must be >= 1");
    if (k < 1) throw structural_error("SimplexSpec: k must be >= 1");
    if (static_cast<int>(block_orders.size()) != k || static_cast<int>(block_names.size()) != k)
        throw structural_error("SimplexSpec: need one order and one name per vertex block");
    for (int o : block_orders) (void)NeighbourOrder(o);
    for (const PairOverride& o : overrides) {
        if (o.i < 0 || o.j <= o.i || o.j > k)
            throw structural_error("SimplexSpec: override pair out of range");
        if (o.order != 1)
            throw structural_error("SimplexSpec: overrides may only lower a relation to order 1");
        if (kind == SimplexKind::extended && o.i != 0)
            throw structural_error(
                "SimplexSpec: extended simplices relate only base pairs; override (" +
                std::to_string(o.i) + "," + std::to_string(o.j) + ") is not governed by the kind");
    }
}

std::string SimplexSpec::key() const {
    std::ostringstream out;
    out << "n" << n << "k" << k << (kind == SimplexKind::mutual_neighbours ? "m" : "x");
    for (int o : block_orders) out << o;
    for (const std::string& name : block_names) out << "_" << name;
    for (const PairOverride& o : overrides) out << "|" << o.i << "," << o.j << ":" << o.order;
    return out.str();
}

QuotientRing::QuotientRing(SimplexSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    std::vector<VarTable::Block> blocks;
    for (int i = 0; i < spec_.k; ++i)
        blocks.push_back({spec_.block_names[static_cast<std::size_t>(i)], spec_.n});
    table_ = VarTable::make(std::move(blocks));

    cap_ = 0;
    for (int i = 1; i <= spec_.k; ++i) {
        block_limits_.push_back(spec_.pair_order(0, i));
        cap_ += block_limits_.back();
    }
    rows_.resize(static_cast<std::size_t>(cap_) + 1);

    // Generators live one degree above the cap so that e.g. e1^3 is
    // representable in a cap-2 ring; ring arithmetic itself stays capped.
    const int gen_cap = cap_ + 1;

    // Generators for base pairs (0, i): every monomial of degree order+1 in
    // block i alone. These act as the per-block degree limits during pruning.
    std::vector<Poly> cross_generators;
    for (int i = 1; i <= spec_.k; ++i) {
        int m = spec_.pair_order(0, i);
        std::vector<int> limits(static_cast<std::size_t>(spec_.k), 0);
        limits[static_cast<std::size_t>(i - 1)] = m + 1;
        for (const Monomial& mon : monomials_of_degree(*table_, m + 1, &limits)) {
            Poly g(table_, gen_cap);
            g.add_term(mon, 1);
            generators_.push_back(std::move(g));
        }
    }
    // Generators for related non-base pairs (i, j): all products of order+1
    // coordinates (indices non-decreasing) of the difference eps_i - eps_j.
    for (int i = 1; i <= spec_.k; ++i) {
        for (int j = i + 1; j <= spec_.k; ++j) {
            int m = spec_.pair_order(i, j);
            if (m == 0) continue;
            for (const std::vector<int>& tuple : coordinate_multisets(spec_.n, m + 1)) {
                Poly g = Poly::constant(table_, gen_cap, 1);
                for (int a : tuple) {
                    g = g * (Poly::variable(table_, gen_cap, table_->var_index(i - 1, a)) -
                             Poly::variable(table_, gen_cap, table_->var_index(j - 1, a)));
                }
                generators_.push_back(g);
                // Capped, limit-pruned copy used to seed the echelon bases;
                // monomials dropped here lie in the monomial-generator span.
                Poly seed(table_, cap_);
                for (auto& [mon, c] : g.terms())
                    if (within_limits(mon)) seed.add_term(mon, c);
                if (!seed.is_zero()) cross_generators.push_back(std::move(seed));
            }
        }
    }

    // Assemble the per-degree echelon bases: multiples of the cross-pair
    // generators, reduced modulo the monomial generators (block limits).
    for (const Poly& g : cross_generators) {
        int gdeg = g.degree();
        if (gdeg < 0) continue;
        for (int d = gdeg; d <= cap_; ++d) {
            for (const Monomial& mon : monomials_of_degree(*table_, d - gdeg, &block_limits_)) {
                Poly mult(table_, cap_);
                mult.add_term(mon, 1);
                Poly row = prune(g * mult);
                if (!row.is_zero()) insert_row(d, std::move(row));
            }
        }
    }
}

bool QuotientRing::within_limits(const Monomial& m) const {
    std::vector<int> deg = m.block_degrees(*table_);
    for (int b = 0; b < spec_.k; ++b)
        if (deg[static_cast<std::size_t>(b)] > block_limits_[static_cast<std::size_t>(b)])
            return false;
    return true;
}

Poly QuotientRing::prune(const Poly& p) const {
    return p.filtered([this](const Monomial& m) { return within_limits(m); });
}

void QuotientRing::insert_row(int degree, Poly row) {
    auto& pivots = rows_[static_cast<std::size_t>(degree)];
    // Reduce against existing rows until no pivot monomial remains. Row
    // tails are pivot-free, so each subtraction cannot reintroduce one.
    for (;;) {
        const Monomial* hit = nullptr;
        Rational coeff;
        for (auto& [m, c] : row.terms()) {
            auto it = pivots.find(m);
            if (it != pivots.end()) {
                hit = &it->first;
                coeff = c;
                break;
            }
        }
        if (!hit) break;
        row -= pivots.at(*hit) * coeff;
    }
    if (row.is_zero()) return;
    Monomial lead = row.terms().begin()->first;
    row = row * (Rational(1) / row.terms().begin()->second);
    // Back-substitute into rows that mention the new pivot.
    for (auto& [m, r] : pivots) {
        Rational c = r.coefficient(lead);
        if (c != 0) r -= row * c;
    }
    pivots.emplace(std::move(lead), std::move(row));
}

std::vector<Poly> QuotientRing::vertex(int i) const {
    if (i < 0 || i > spec_.k) throw structural_error("QuotientRing::vertex: index out of range");
    std::vector<Poly> v;
    for (int a = 0; a < spec_.n; ++a) v.push_back(i == 0 ? zero() : coord(i, a));
    return v;
}

Poly QuotientRing::normal_form(const Poly& p) const {
    if (!same_table(p.table(), table_) || p.degree_cap() != cap_)
        throw structural_error("normal_form: polynomial lives on a different ring");
    Poly r = prune(p);
    // The ideal is graded, so reduce each monomial against its own degree
    // slice; rows have pivot-free tails, so one sweep per degree suffices.
    for (;;) {
        const Poly* row = nullptr;
        Rational coeff;
        for (auto& [m, c] : r.terms()) {
            const auto& pivots = rows_[static_cast<std::size_t>(m.degree())];
            auto it = pivots.find(m);
            if (it != pivots.end()) {
                row = &it->second;
                coeff = c;
                break;
            }
        }
        if (!row) break;
        r -= *row * coeff;
    }
    return r;
}

std::vector<Monomial> QuotientRing::standard_monomials(int degree) const {
    std::vector<Monomial> out;
    if (degree < 0 || degree > cap_) return out;
    const auto& pivots = rows_[static_cast<std::size_t>(degree)];
    for (const Monomial& m : monomials_of_degree(*table_, degree, &block_limits_))
        if (pivots.find(m) == pivots.end()) out.push_back(m);
    return out;
}

QuotientRingPtr build_ideal(const SimplexSpec& spec) {
    return std::make_shared<const QuotientRing>(spec);
}

QuotientRingPtr cached_ring(const SimplexSpec& spec) {
    static std::mutex mu;
    static std::map<std::string, QuotientRingPtr> cache;
    std::string key = spec.key();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QuotientRingPtr ring = build_ideal(spec);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(ring)).first->second;
}

}  // namespace svol
