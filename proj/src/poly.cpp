#include "svol/poly.hpp"

#include <sstream>

namespace svol {

Poly Poly::constant(VarTablePtr table, int cap, Rational c) {
    Poly p(std::move(table), cap);
    if (c != 0 && cap >= 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

Poly Poly::variable(VarTablePtr table, int cap, int var) {
    if (var < 0 || var >= table->total_vars())
        throw structural_error("Poly::variable: index out of range");
    Poly p(std::move(table), cap);
    if (cap >= 1) p.terms_.emplace(Monomial::var(var), Rational(1));
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // leading term has maximal degree
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0 || m.degree() > cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (!same_table(table_, o.table_))
        throw structural_error("Poly: operands live on different variable tables");
    if (cap_ != o.cap_) throw structural_error("Poly: operands have different degree caps");
}

Poly Poly::operator-() const {
    Poly r(table_, cap_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(table_, cap_);
    for (auto& [ma, ca] : terms_) {
        if (ma.degree() > cap_) continue;
        for (auto& [mb, cb] : o.terms_) {
            if (ma.degree() + mb.degree() > cap_) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(table_, cap_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

std::string Poly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            out << render_rational(a);
        } else {
            if (a != 1) out << render_rational(a) << "*";
            bool firstvar = true;
            for (auto& [v, e] : m.factors()) {
                if (!firstvar) out << "*";
                firstvar = false;
                out << table_->var_name(v);
                if (e > 1) out << "^" << e;
            }
        }
    }
    return out.str();
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (static_cast<int>(images.size()) != p.table()->total_vars())
        throw structural_error("substitute: need one image per variable of the source table");
    VarTablePtr target;
    int cap = 0;
    for (const Poly& im : images) {
        if (!target) {
            target = im.table();
            cap = im.degree_cap();
        } else if (!same_table(target, im.table()) || cap != im.degree_cap()) {
            throw structural_error("substitute: images live on different tables or caps");
        }
    }

    // Power cache per variable, grown on demand.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int v, int e) -> const Poly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        if (cache.empty()) cache.push_back(Poly::constant(target, cap, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[static_cast<std::size_t>(v)]);
        return cache[static_cast<std::size_t>(e)];
    };

    Poly result(target, cap);
    for (auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target, cap, c);
        for (auto& [v, e] : m.factors()) term = term * power(v, e);
        result += term;
    }
    return result;
}

std::vector<std::pair<std::vector<int>, Poly>> homogeneous_components(const Poly& p) {
    std::map<std::vector<int>, Poly> groups;
    for (auto& [m, c] : p.terms()) {
        std::vector<int> deg = m.block_degrees(*p.table());
        auto it = groups.find(deg);
        if (it == groups.end()) it = groups.emplace(deg, Poly(p.table(), p.degree_cap())).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<std::vector<int>, Poly>> out;
    out.reserve(groups.size());
    for (auto& [deg, comp] : groups) out.emplace_back(deg, std::move(comp));
    return out;
}

Poly degree_component(const Poly& p, int d) {
    return p.filtered([d](const Monomial& m) { return m.degree() == d; });
}

namespace {

void enumerate_rec(const VarTable& table, int var, int remaining, const std::vector<int>* limits,
                   std::vector<int>& block_deg, std::vector<std::pair<int, int>>& current,
                   std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial(current));
        return;
    }
    if (var >= table.total_vars()) return;
    int b = table.block_of(var);
    int max_e = remaining;
    if (limits)
        max_e = std::min(max_e, (*limits)[static_cast<std::size_t>(b)] -
                                    block_deg[static_cast<std::size_t>(b)]);
    for (int e = 0; e <= max_e; ++e) {
        if (e > 0) {
            current.emplace_back(var, e);
            block_deg[static_cast<std::size_t>(b)] += e;
        }
        enumerate_rec(table, var + 1, remaining - e, limits, block_deg, current, out);
        if (e > 0) {
            current.pop_back();
            block_deg[static_cast<std::size_t>(b)] -= e;
        }
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VarTable& table, int degree,
                                          const std::vector<int>* block_limits) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> block_deg(static_cast<std::size_t>(table.block_count()), 0);
    std::vector<std::pair<int, int>> current;
    enumerate_rec(table, 0, degree, block_limits, block_deg, current, out);
    return out;
}

}  // namespace svol
