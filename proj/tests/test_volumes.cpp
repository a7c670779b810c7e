#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "svol/volumes.hpp"
#include "util.hpp"

using namespace svol;
using testutil::euclidean;
using testutil::parse;

namespace {

SimplexInstance mutual_instance(int n, int k) {
    return SimplexInstance::generic(cached_ring(SimplexSpec::make(n, k, SimplexKind::mutual_neighbours)));
}

SimplexInstance extended_instance(int n, int k) {
    return SimplexInstance::generic(cached_ring(SimplexSpec::make(n, k, SimplexKind::extended)));
}

}  // namespace

TEST_CASE("generic instances") {
    SimplexInstance s = mutual_instance(2, 2);
    CHECK(s.n() == 2);
    CHECK(s.k() == 2);
    for (const Poly& c : s.points[0]) CHECK(c.is_zero());
    CHECK(s.points[1][0] == s.ring->coord(1, 0));
    CHECK(s.points[2][1] == s.ring->coord(2, 1));
}

TEST_CASE("bullet is the euclidean inner product for the euclidean metric") {
    SimplexInstance s = mutual_instance(2, 2);
    MetricSpec m = euclidean(2);
    const VarTablePtr& t = s.ring->var_table();
    const int cap = s.ring->degree_cap();
    CHECK(bullet(s, m, nullptr, 1, 2) == s.ring->normal_form(parse("e1*f1 + e2*f2", t, cap)));
    CHECK(bullet(s, m, nullptr, 1, 1) == s.ring->normal_form(parse("e1^2 + e2^2", t, cap)));
}

TEST_CASE("bullet of a vertex with itself is its exact square length") {
    SimplexInstance s = mutual_instance(2, 2);
    MetricSpec m = random_metric(2, 2, 43);
    for (int i = 1; i <= 2; ++i) {
        Poly expected = s.ring->normal_form(eval_g(m, s.points[0], s.points[static_cast<std::size_t>(i)]));
        CHECK(bullet(s, m, nullptr, i, i) == expected);
    }
}

TEST_CASE("bullet on an extended pair requires an extension") {
    SimplexInstance s = extended_instance(2, 2);
    MetricSpec m = euclidean(2);
    CHECK_THROWS_AS(bullet(s, m, nullptr, 1, 2), usage_error);
    ExtensionPerturbation h = ExtensionPerturbation::zero(2);
    CHECK_NOTHROW(bullet(s, m, &h, 1, 2));
    CHECK_NOTHROW(bullet(s, m, nullptr, 1, 1));
}

TEST_CASE("gram matrix") {
    MetricSpec m = euclidean(2);

    SUBCASE("k=1 is the square length") {
        SimplexInstance s = mutual_instance(2, 1);
        PolyMatrix g = gram_matrix(s, m);
        CHECK(g.rows == 1);
        CHECK(g.at(0, 0) == s.ring->normal_form(eval_g(m, s.points[0], s.points[1])));
    }

    SUBCASE("k=2 euclidean entries") {
        SimplexInstance s = mutual_instance(2, 2);
        PolyMatrix g = gram_matrix(s, m);
        const VarTablePtr& t = s.ring->var_table();
        const int cap = s.ring->degree_cap();
        CHECK(g.at(0, 0) == s.ring->normal_form(parse("e1^2 + e2^2", t, cap)));
        CHECK(g.at(1, 1) == s.ring->normal_form(parse("f1^2 + f2^2", t, cap)));
        CHECK(g.at(0, 1) == g.at(1, 0));
        CHECK(g.at(0, 1) == s.ring->normal_form(parse("e1*f1 + e2*f2", t, cap)));
    }
}

TEST_CASE("ring determinants") {
    QuotientRingPtr q = cached_ring(SimplexSpec::make(2, 2, SimplexKind::mutual_neighbours));

    SUBCASE("identity") {
        PolyMatrix eye(2, 2, q->zero());
        eye.at(0, 0) = eye.at(1, 1) = q->constant(1);
        CHECK(det_ring(eye) == q->constant(1));
    }

    SUBCASE("2x2 cofactor expansion") {
        PolyMatrix mat(2, 2, q->zero());
        Poly a = q->coord(1, 0), b = q->coord(1, 1), c = q->coord(2, 0), d = q->coord(2, 1);
        mat.at(0, 0) = a, mat.at(0, 1) = b, mat.at(1, 0) = c, mat.at(1, 1) = d;
        CHECK(det_ring(mat) == a * d - b * c);
    }

    SUBCASE("equal columns give zero") {
        PolyMatrix mat(2, 2, q->zero());
        mat.at(0, 0) = mat.at(0, 1) = q->coord(1, 0);
        mat.at(1, 0) = mat.at(1, 1) = q->coord(2, 1);
        CHECK(det_ring(mat).is_zero());
    }

    SUBCASE("non-square is rejected") {
        PolyMatrix mat(2, 3, q->zero());
        CHECK_THROWS_AS(det_ring(mat), structural_error);
    }
}

TEST_CASE("square volume") {
    SUBCASE("euclidean k=2 matches the naive expansion") {
        SimplexInstance s = mutual_instance(2, 2);
        MetricSpec m = euclidean(2);
        Poly vol = square_volume(s, m);

        oracle::Ring naive(s.ring->spec());
        oracle::OPoly ovol = oracle::square_volume(naive, oracle::Metric::from_spec(m), nullptr,
                                                   naive.generic_points());
        CHECK(naive.render(ovol) == vol.render());
    }

    SUBCASE("random metric matches the naive expansion") {
        SimplexInstance s = mutual_instance(2, 2);
        MetricSpec m = random_metric(2, 2, 47);
        Poly vol = square_volume(s, m);
        oracle::Ring naive(s.ring->spec());
        oracle::OPoly ovol = oracle::square_volume(naive, oracle::Metric::from_spec(m), nullptr,
                                                   naive.generic_points());
        CHECK(naive.render(ovol) == vol.render());
    }

    SUBCASE("vanishes when two vertices coincide") {
        SimplexInstance s = mutual_instance(2, 2);
        MetricSpec m = random_metric(2, 2, 47);
        CHECK(square_volume(s.with_equal_vertices(1, 2), m).is_zero());
    }

    SUBCASE("k=1 is the square length") {
        SimplexInstance s = mutual_instance(2, 1);
        MetricSpec m = random_metric(2, 2, 47);
        CHECK(square_volume(s, m) ==
              s.ring->normal_form(eval_g(m, s.points[0], s.points[1])));
    }
}

TEST_CASE("permuted instances recompute consistently") {
    SimplexInstance s = mutual_instance(2, 2);
    MetricSpec m = euclidean(2);
    SimplexInstance p = s.permuted({2, 0, 1});
    CHECK(p.points[0] == s.points[2]);
    CHECK(p.points[1] == s.points[0]);
    CHECK(s.ring->equal(square_volume(p, m), square_volume(s, m)));
}

TEST_CASE("heron square area") {
    SUBCASE("k must be 2") {
        SimplexInstance s = mutual_instance(2, 1);
        CHECK_THROWS_AS(heron_square_area(s, euclidean(2)), usage_error);
    }

    SUBCASE("vanishes when two vertices coincide") {
        SimplexInstance s = mutual_instance(2, 2);
        CHECK(heron_square_area(s.with_equal_vertices(1, 2), euclidean(2)).is_zero());
    }

    SUBCASE("euclidean generic matches the naive expansion") {
        SimplexInstance s = mutual_instance(2, 2);
        MetricSpec m = euclidean(2);
        Poly area = heron_square_area(s, m);
        oracle::Ring naive(s.ring->spec());
        oracle::OPoly oarea = oracle::heron_square_area(naive, oracle::Metric::from_spec(m),
                                                        naive.generic_points());
        CHECK(naive.render(oarea) == area.render());
    }
}

TEST_CASE("omega squared") {
    SUBCASE("requires k = n") {
        SimplexInstance s = extended_instance(2, 1);
        CHECK_THROWS_AS(omega_squared(s, euclidean(2)), usage_error);
    }

    SUBCASE("n = 1 is the square length") {
        SimplexInstance s = extended_instance(1, 1);
        MetricSpec m = random_metric(1, 2, 53);
        CHECK(omega_squared(s, m) ==
              s.ring->normal_form(eval_g(m, s.points[0], s.points[1])));
    }

    SUBCASE("euclidean n = 2 is a quarter of det(X)^2") {
        SimplexInstance s = extended_instance(2, 2);
        Poly expected = s.ring->normal_form(
            parse("1/4*(e1*f2 - e2*f1)^2", s.ring->var_table(), s.ring->degree_cap()));
        CHECK(omega_squared(s, euclidean(2)) == expected);
    }

    SUBCASE("random metric agrees with the extended square volume") {
        SimplexInstance s = extended_instance(2, 2);
        MetricSpec m = random_metric(2, 2, 59);
        ExtensionPerturbation h = ExtensionPerturbation::zero(2);
        CHECK(s.ring->equal(omega_squared(s, m), square_volume(s, m, &h)));

        oracle::Ring naive(s.ring->spec());
        oracle::Metric om = oracle::Metric::from_spec(m);
        auto pts = naive.generic_points();
        oracle::OPoly lhs = oracle::omega_squared(naive, om, pts);
        oracle::OPoly rhs = oracle::square_volume(naive, om, nullptr, pts);
        CHECK(oracle::is_zero(naive.reduce(oracle::sub(lhs, rhs))));
        CHECK(naive.render(lhs) == omega_squared(s, m).render());
    }
}

TEST_CASE("multilinear component") {
    QuotientRingPtr q = cached_ring(SimplexSpec::make(1, 2, SimplexKind::mutual_neighbours));
    const VarTablePtr& t = q->var_table();
    const int cap = q->degree_cap();
    CHECK(multilinear_component(parse("e1*f1 + e1^2*f1", t, cap), *q) == parse("e1*f1", t, cap));
    CHECK(multilinear_component(q->constant(5), *q).is_zero());
    CHECK(multilinear_component(parse("e1", t, cap), *q).is_zero());
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(3) == 6);
    CHECK(factorial(4) == 24);
}
