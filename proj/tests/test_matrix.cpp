#include <doctest.h>

#include "generators.hpp"
#include "matinv/matrix.hpp"

using namespace matinv;

TEST_CASE("conjugation basics") {
    auto rng = gen::stream(21);
    const auto a = random_tuple(rng, 3);
    CHECK(conj_act(SL2Element(), a) == a);

    const MatTuple upper{make_mat2(1, 2, 0, -1), make_mat2(0, 1, 0, 0)};
    const auto lower = conj_act(SL2Element::weyl(), upper);
    for (const auto& m : lower) CHECK(m(0, 1).is_zero());
    CHECK_FALSE(lower.is_upper_triangular());
}

TEST_CASE("left-right action") {
    auto rng = gen::stream(22);
    const auto a = random_tuple(rng, 4);
    CHECK(leftright_act(SL2Element(), SL2Element(), a) == a);
    const auto g = random_sl2(rng);
    CHECK(leftright_act(g, g, a) == conj_act(g, a));
}

TEST_CASE("star action") {
    auto rng = gen::stream(23);
    const auto a = random_tuple(rng, 3);
    CHECK(star_act(MatrixX::Identity(3, 3), a) == a);

    MatrixX swap = MatrixX::Zero(3, 3);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    swap(2, 2) = 1;
    const auto swapped = star_act(swap, a);
    CHECK(swapped[0] == a[1]);
    CHECK(swapped[1] == a[0]);
    CHECK(swapped[2] == a[2]);

    CHECK_THROWS_AS(star_act(MatrixX::Identity(2, 2), a), SizeMismatch);
    CHECK_THROWS_AS(star_act(MatrixX::Zero(3, 3), a), SingularMatrix);
}

TEST_CASE("trace-free split") {
    const auto split = tracefree_part(MatTuple{make_mat2(1, 1, 0, 0)});
    CHECK(split.part[0] == make_mat2(Rational(1, 2), 1, 0, Rational(-1, 2)));
    CHECK(split.traces[0] == 1);

    const MatTuple x{make_mat2(1, 2, 3, -1)};
    CHECK(tracefree_part(x).part.tuple() == x);
    CHECK(tracefree_part(x).traces[0] == 0);

    const auto id = tracefree_part(MatTuple{mat2::identity()});
    CHECK(id.part.tuple().is_zero());
    CHECK(id.traces[0] == 2);

    auto rng = gen::stream(24);
    for (int t = 0; t < gen::kCases; ++t) {
        const auto a = random_tuple(rng, 3);
        const auto s = tracefree_part(a);
        CHECK(s.part.tuple().is_trace_zero());
        CHECK(with_traces(s.part, s.traces) == a);
    }
}

TEST_CASE("SL2 elements") {
    CHECK(sl2_from_shears(0, 0, 0) == SL2Element());
    CHECK(sl2_from_shears(1, 0, 0).matrix() == make_mat2(1, 1, 0, 1));
    CHECK_THROWS_AS(SL2Element::from(make_mat2(2, 0, 0, 1)), NotInSL2);

    auto rng = gen::stream(25);
    for (int t = 0; t < gen::kCases; ++t) {
        const auto g = random_sl2(rng);
        const auto h = random_sl2(rng);
        CHECK(det2(g.matrix()) == 1);
        CHECK(Mat2(g.matrix() * g.inverse()) == mat2::identity());
        const auto a = random_tuple(rng, 2);
        CHECK(conj_act(g, conj_act(h, a)) == conj_act(g * h, a));
    }
}

TEST_CASE("star action is a left action and commutes with conjugation") {
    auto rng = gen::stream(26);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_tuple(rng, 3);
        const auto h1 = random_gl(rng, 3, 4);
        const auto h2 = random_gl(rng, 3, 4);
        CHECK(star_act(h1, star_act(h2, a)) == star_act(MatrixX(h1 * h2), a));
        const auto g = random_sl2(rng);
        CHECK(star_act(h1, conj_act(g, a)) == conj_act(g, star_act(h1, a)));
    }
}

TEST_CASE("tuple validation") {
    CHECK_THROWS_AS(MatTuple(std::vector<Mat2>{}), LengthMismatch);
    CHECK_THROWS_AS(TraceZeroTuple::from(MatTuple{mat2::identity()}), NotTraceZero);
    const auto x = TraceZeroTuple::from_coordinates({1}, {2}, {3});
    CHECK(x[0] == make_mat2(2, 3, 1, -2));
    CHECK(x.a(0) == 1);
    CHECK(x.b(0) == 2);
    CHECK(x.c(0) == 3);
}
