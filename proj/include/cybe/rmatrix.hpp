#pragma once

#include "cybe/grading.hpp"
#include "cybe/manin.hpp"

#include <variant>

namespace cybe {

/// Polynomial part p(u,v) of a quasi-trigonometric solution
/// X(u,v) = v*Omega/(u-v) + p(u,v); the singular part is implied, never
/// stored.  Keys are (left basis, right basis, deg_u, deg_v); no zero entries.
struct QuasiTrig {
    std::map<std::array<int, 4>, Scalar> p;

    void add(int i, int j, int du, int dv, const Scalar& c);
    int max_deg_u() const;
    int max_deg_v() const;
    friend bool operator==(const QuasiTrig& a, const QuasiTrig& b) { return a.p == b.p; }
};

/// p = sum_{b>0} e_b ⊗ f_b + Omega_0 / 2.
QuasiTrig standard_r3(const LieAlgebra& L, const CasimirData& cas);

/// X(u,v) + X^{21}(v,u) = 0, i.e. p(u,v) + p^{21}(v,u) = Omega.
bool is_unitary(const QuasiTrig& x, const CasimirData& cas);

/// Expanded entry of N(u,v) = v*Omega + (u-v) p(u,v).
struct NEntry {
    int a, b, du, dv;
    Scalar c;
};

std::vector<NEntry> numerator_entries(const QuasiTrig& x, const CasimirData& cas);

/// (i, j, k, deg_u, deg_v, deg_w) -> coefficient of the cleared CYBE sum.
using CybTensor = std::map<std::array<int, 6>, Scalar>;

/// Reference implementation of the cleared three-term bracket sum
/// (v-w)[N12,N13] + (u-w)[N12,N23] + (u-v)[N13,N23].
CybTensor cyb_lhs_serial(const LieAlgebra& L, const std::vector<NEntry>& n);
/// OpenMP version; identical output by construction.
CybTensor cyb_lhs_parallel(const LieAlgebra& L, const std::vector<NEntry>& n);

/// True iff the cleared CYBE expansion vanishes identically.
bool verify_cybe(const LieAlgebra& L, const CasimirData& cas, const QuasiTrig& x);

/// Lagrangian subalgebra W of the double, modulo u^{-N-1} g[[u^{-1}]],
/// held inside a window.
struct WSubalgebra {
    Subspace space;
    int N = 2, M = 1;
};

struct WConditions {
    bool subalgebra = false;   // closed in the window, contains the deep tail
    bool transversal = false;  // W + g[u] spans, trivially intersecting
    bool lagrangian = false;   // isotropic of complementary dimension
    bool all() const { return subalgebra && transversal && lagrangian; }
};

WConditions check_w_conditions(const LieAlgebra& L, const WindowSpace& win, const WSubalgebra& w);

/// W spanned by the Q-duals of the polynomial-window basis determined by X,
/// plus the deep tail.  Requires a unitary X fitting the window.
WSubalgebra subalgebra_from_solution(const LieAlgebra& L, const CasimirData& cas,
                                     const QuasiTrig& x, const WindowSpace& win);

/// Twist extraction through the Lagrangian-complement graph over the
/// standard W; returns r3 + s with s antisymmetric.
QuasiTrig solution_from_subalgebra(const LieAlgebra& L, const CasimirData& cas,
                                   const WSubalgebra& w, const WindowSpace& win);

/// sigma-preimage of a verified Lagrangian: order-model perp plus lifts.
WSubalgebra lift_i_prime_to_w(const LieAlgebra& L, const VertexData& v, const PairSpace& ps,
                              const Subspace& lagr, const WindowSpace& win);

/// One factor of a polynomial-ring automorphism of g[u].
struct GaugeExp {
    Scalar coeff;
    int power = 0;      // u^power
    int basis_index = 0; // must be a root vector
};
struct GaugeTorus {
    std::vector<Scalar> lambda; // one nonzero scale per simple root
};
using GaugeStep = std::variant<GaugeExp, GaugeTorus>;

/// Matrix of sigma(u) acting on g with polynomial entries; column j holds
/// sigma(x_j).
using PolyAut = std::vector<std::vector<std::map<int, Scalar>>>;

PolyAut gauge_matrix(const LieAlgebra& L, const std::vector<GaugeStep>& steps);
PolyAut gauge_matrix_at_zero(const LieAlgebra& L, const PolyAut& sigma);

/// Y(u,v) = (sigma(u) ⊗ sigma(v)) X(u,v); quasi-trigonometric again.
QuasiTrig apply_gauge(const LieAlgebra& L, const CasimirData& cas, const QuasiTrig& x,
                      const std::vector<GaugeStep>& steps);

/// Window image of sigma~ = sigma(u) (+) sigma(0).
Subspace gauge_window_image(const LieAlgebra& L, const WindowSpace& win, const PolyAut& sigma,
                            const Subspace& w);

} // namespace cybe
