#include <doctest.h>

#include "bpba/error.hpp"
#include "bpba/matrix.hpp"

using namespace bpba;

TEST_CASE("identity and tensor") {
    const ExactVector v{1, Rational(2, 3), -5, 0};
    CHECK(ExactMatrix::identity(4) * v == v);
    CHECK(tensor(ExactMatrix::identity(2), ExactMatrix::identity(2)) == ExactMatrix::identity(4));
}

TEST_CASE("tensor uses the block convention") {
    const ExactMatrix a{{1, 2}, {3, 4}};
    const ExactMatrix b{{0, 1}, {1, 0}};
    const ExactMatrix t = tensor(a, b);
    CHECK(t(0, 1) == Rational(1));
    CHECK(t(1, 2) == Rational(2));
    CHECK(t(3, 2) == Rational(4));
    CHECK(t(2, 2) == Rational(0));
    CHECK(tensor(ExactVector{1, 2}, ExactVector{3, 4}) == ExactVector{3, 4, 6, 8});
}

TEST_CASE("shape errors") {
    const ExactMatrix a(2, 3);
    const ExactMatrix b(2, 2);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS((a * ExactVector{1, 2}), DimensionError);
    CHECK_THROWS_AS((ExactVector{1} + ExactVector{1, 2}), DimensionError);
}

TEST_CASE("arithmetic") {
    const ExactMatrix a{{1, 2}, {3, 4}};
    const ExactMatrix b{{0, 1}, {Rational(1, 2), 0}};
    CHECK(a * b == ExactMatrix{{1, 1}, {2, 3}});
    CHECK(a.transpose() == ExactMatrix{{1, 3}, {2, 4}});
    CHECK(Rational(2) * a - a == a);
    CHECK((a - a).is_zero());
    ExactVector v{1, 1};
    v.axpy(Rational(1, 2), ExactVector{2, 4});
    CHECK(v == ExactVector{2, 3});
    CHECK(dot(ExactVector{1, 2}, ExactVector{3, 4}) == Rational(11));
}

TEST_CASE("proportionality") {
    Rational f;
    CHECK(proportional(ExactVector{0, 2, 4}, ExactVector{0, -1, -2}, &f));
    CHECK(f == Rational(-1, 2));
    CHECK_FALSE(proportional(ExactVector{1, 2}, ExactVector{1, 3}));
    CHECK_FALSE(proportional(ExactVector{1, 0}, ExactVector{1, 1}));
}
