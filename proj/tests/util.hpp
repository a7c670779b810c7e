#pragma once

#include <random>
#include <string>
#include <vector>

#include "svol/metric.hpp"
#include "svol/poly_parse.hpp"

namespace testutil {

inline svol::MetricSpec euclidean(int n) {
    svol::VarTablePtr table = svol::ambient_table(n);
    std::vector<svol::Poly> entries(static_cast<std::size_t>(n) * n, svol::Poly(table, 1));
    for (int a = 0; a < n; ++a)
        entries[static_cast<std::size_t>(a) * n + a] = svol::Poly::constant(table, 1, 1);
    return svol::validate_metric(n, std::move(entries));
}

/// diag(1 + x1, 1, ..., 1)
inline svol::MetricSpec diag_1px1(int n) {
    svol::VarTablePtr table = svol::ambient_table(n);
    std::vector<svol::Poly> entries(static_cast<std::size_t>(n) * n, svol::Poly(table, 1));
    for (int a = 0; a < n; ++a)
        entries[static_cast<std::size_t>(a) * n + a] = svol::Poly::constant(table, 1, 1);
    entries[0] = entries[0] + svol::Poly::variable(table, 1, 0);
    return svol::validate_metric(n, std::move(entries));
}

inline svol::Poly parse(const std::string& text, const svol::VarTablePtr& table, int cap) {
    return svol::parse_poly(text, table, cap);
}

inline svol::Rational draw_rational(std::mt19937_64& rng) {
    int num = static_cast<int>(rng() % 9) - 4;
    int den = static_cast<int>(rng() % 3) + 1;
    return svol::Rational(num) / den;
}

inline svol::Poly random_poly(const svol::VarTablePtr& table, int cap, int max_degree,
                              std::mt19937_64& rng) {
    svol::Poly p(table, cap);
    for (int d = 0; d <= max_degree; ++d)
        for (const svol::Monomial& m : svol::monomials_of_degree(*table, d))
            if ((rng() & 1) != 0) p.add_term(m, draw_rational(rng));
    return p;
}

}  // namespace testutil
