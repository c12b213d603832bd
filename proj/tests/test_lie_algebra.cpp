#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/lie_algebra.hpp"

#include <random>

using namespace cybe;

namespace {

LieAlgebra make(const char* lbl) { return build_lie_algebra(build_root_system(lbl)); }

Vec rand_elt(const LieAlgebra& L, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vec v(L.dim);
    for (int i = 0; i < L.dim; ++i) v[i] = Scalar(coeff(rng));
    return v;
}

} // namespace

TEST_CASE("sl2 defining relations") {
    LieAlgebra L = make("A1");
    CHECK(L.dim == 3);
    Vec h = L.basis_vec(0);
    Vec e = L.basis_vec(L.root_to_idx.at(Root{1}));
    Vec f = L.basis_vec(L.root_to_idx.at(Root{-1}));
    CHECK(L.bracket(h, e) == Scalar(2) * e);
    CHECK(L.bracket(h, f) == Scalar(-2) * f);
    CHECK(L.bracket(e, f) == h);
    CHECK(L.form(e, f) == Scalar(1));
    CHECK(L.form(h, h) == Scalar(2));
}

TEST_CASE("o(5) has dimension 10 and basis size 10") {
    LieAlgebra L = make("B2");
    CHECK(L.dim == 10);
    CHECK(L.mats.size() == 10);
    CHECK(L.matrix_size() == 5);
}

TEST_CASE("Chevalley normalization holds for every root") {
    for (const char* lbl : {"A2", "B2", "C3", "D3"}) {
        LieAlgebra L = make(lbl);
        CAPTURE(lbl);
        for (const auto& b : L.rs.positive) {
            Root m = b;
            for (int& c : m) c = -c;
            Vec eb = L.basis_vec(L.root_to_idx.at(b));
            Vec fb = L.basis_vec(L.root_to_idx.at(m));
            CHECK(L.bracket(eb, fb) == L.coroot(b));
            // [h, e_b] = b(h) e_b on the Cartan basis
            for (int i = 0; i < L.rank(); ++i) {
                Vec h = L.basis_vec(i);
                Vec lhs = L.bracket(h, eb);
                Scalar ev = L.root_eval(b, h);
                CHECK(lhs == ev * eb);
            }
        }
    }
}

TEST_CASE("invariance of the trace form on random triples") {
    std::mt19937 rng(20240811);
    for (const char* lbl : {"A2", "B2"}) {
        LieAlgebra L = make(lbl);
        for (int trial = 0; trial < 50; ++trial) {
            Vec x = rand_elt(L, rng), y = rand_elt(L, rng), z = rand_elt(L, rng);
            CHECK(L.form(L.bracket(x, y), z) == L.form(x, L.bracket(y, z)));
        }
    }
}

TEST_CASE("Jacobi identity, exhaustive at rank <= 2, random at rank <= 4") {
    for (const char* lbl : {"A1", "A2", "B2"}) {
        LieAlgebra L = make(lbl);
        CAPTURE(lbl);
        for (int i = 0; i < L.dim; ++i)
            for (int j = 0; j < L.dim; ++j)
                for (int k = 0; k < L.dim; ++k) {
                    Vec a = L.basis_vec(i), b = L.basis_vec(j), c = L.basis_vec(k);
                    Vec jac = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) +
                              L.bracket(c, L.bracket(a, b));
                    CHECK(is_zero_vec(jac));
                }
    }
    std::mt19937 rng(71);
    for (const char* lbl : {"A4", "C3", "D4"}) {
        LieAlgebra L = make(lbl);
        CAPTURE(lbl);
        std::uniform_int_distribution<int> pick(0, L.dim - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            Vec a = L.basis_vec(pick(rng)), b = L.basis_vec(pick(rng)), c = L.basis_vec(pick(rng));
            Vec jac = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) +
                      L.bracket(c, L.bracket(a, b));
            CHECK(is_zero_vec(jac));
        }
    }
}

TEST_CASE("B-duality: dual bases pair to the identity") {
    LieAlgebra L = make("B2");
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            Vec dual_i(L.dim);
            for (int k = 0; k < L.dim; ++k) dual_i[k] = L.gram_inv().at(i, k);
            CHECK(L.form(dual_i, L.basis_vec(j)) == (i == j ? Scalar(1) : Scalar(0)));
        }
}

TEST_CASE("sl2 Casimir against the frozen dual-basis value") {
    LieAlgebra L = make("A1");
    CasimirData c = casimir(L);
    int ie = L.root_to_idx.at(Root{1}), im = L.root_to_idx.at(Root{-1});
    Tensor2 expect;
    expect[{ie, im}] = Scalar(1);
    expect[{im, ie}] = Scalar(1);
    expect[{0, 0}] = Scalar(1, 2);
    CHECK(c.omega == expect);
    Tensor2 o0;
    o0[{0, 0}] = Scalar(1, 2);
    CHECK(c.omega0 == o0);
    Tensor2 pos;
    pos[{ie, im}] = Scalar(1);
    CHECK(c.pos_part == pos);
}

TEST_CASE("Casimir is flip symmetric and ad-invariant") {
    for (const char* lbl : {"A2", "B2"}) {
        LieAlgebra L = make(lbl);
        CasimirData c = casimir(L);
        CHECK(flip(c.omega) == c.omega);
        // [x ⊗ 1 + 1 ⊗ x, Omega] = 0 for every basis x
        for (int x = 0; x < L.dim; ++x) {
            Tensor2 acc;
            for (const auto& [k, v] : c.omega) {
                for (const auto& [i, s] : L.bracket_basis(x, k[0])) tensor_add(acc, {i, k[1]}, v * s);
                for (const auto& [j, s] : L.bracket_basis(x, k[1])) tensor_add(acc, {k[0], j}, v * s);
            }
            CHECK(acc.empty());
        }
    }
}

TEST_CASE("exceptional types refuse a matrix realization but keep the diagram") {
    RootSystem g2 = build_root_system('G', 2);
    CHECK_THROWS_AS(build_lie_algebra(g2), DiagramOnly);
    CHECK(g2.num_roots() == 12); // enumeration data still present
}
