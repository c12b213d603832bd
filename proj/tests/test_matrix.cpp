#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/matrix.hpp"

using namespace cybe;

namespace {
Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}
} // namespace

TEST_CASE("rref and rank") {
    Matrix m(std::vector<Vec>{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})});
    CHECK(m.rank() == 2);
    auto piv = m.rref();
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(m.at(0, 0) == Scalar(1));
    CHECK(m.at(0, 1) == Scalar(0));
}

TEST_CASE("nullspace solves the homogeneous system") {
    Matrix m(std::vector<Vec>{vec({1, 2, 3}), vec({0, 1, 1})});
    Matrix ns = m.nullspace();
    CHECK(ns.rows() == 1);
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(dot(m.row(i), ns.row(0)).is_zero());
}

TEST_CASE("solve_linear") {
    Matrix m(std::vector<Vec>{vec({2, 0}), vec({1, 1})});
    auto [ok, x] = solve_linear(m, vec({4, 5}));
    CHECK(ok);
    CHECK(x == vec({2, 3}));
    auto [ok2, x2] = solve_linear(Matrix(std::vector<Vec>{vec({1, 1}), vec({1, 1})}), vec({0, 1}));
    CHECK(!ok2);
}

TEST_CASE("subspace canonical form gives equality") {
    Subspace s1(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    Subspace s2(3, {vec({2, 2, 2}), vec({0, 0, 5})});
    CHECK(s1 == s2);
    CHECK(s1.contains(vec({3, 3, 7})));
    CHECK(!s1.contains(vec({1, 0, 0})));
}

TEST_CASE("sum and intersection") {
    Subspace a(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    Subspace b(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK((a + b).dim() == 3);
    Subspace c = a.intersect(b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(vec({0, 1, 0})));
}

TEST_CASE("perp with respect to a symmetric form") {
    // hyperbolic plane: G = [[0,1],[1,0]]
    Matrix g(2, 2);
    g.at(0, 1) = g.at(1, 0) = Scalar(1);
    Subspace line(2, {vec({1, 0})});
    Subspace p = line.perp(g);
    CHECK(p.dim() == 1);
    CHECK(p.contains(vec({1, 0}))); // isotropic line is self-orthogonal
}
