#pragma once

#include "cybe/lie_algebra.hpp"

namespace cybe {

struct WindowError : ScalarError {
    using ScalarError::ScalarError;
};

/// Truncated model of g((u^{-1})) x g with first-factor u-degrees in [-N, M].
/// Coordinates: first factor blocks by descending degree M..-N, each block one
/// slot per Lie algebra basis element, then one block for the second factor.
struct WindowSpace {
    const LieAlgebra* L = nullptr;
    int N = 2, M = 1;

    WindowSpace() = default;
    WindowSpace(const LieAlgebra& alg, int n = 2, int m = 1) : L(&alg), N(n), M(m) {
        if (m < 1 || n < 2) throw WindowError("window requires N >= 2, M >= 1");
    }

    std::size_t dim() const { return static_cast<std::size_t>((N + M + 2) * L->dim); }
    std::size_t first_index(int deg, int b) const {
        if (deg < -N || deg > M) throw WindowError("degree outside window");
        return static_cast<std::size_t>((M - deg) * L->dim + b);
    }
    std::size_t second_index(int b) const {
        return static_cast<std::size_t>((N + M + 1) * L->dim + b);
    }

    /// Gram matrix of Q((f,a),(g,b)) = K(f,g)_0 - K(a,b) on the window basis.
    Matrix gram() const;
    Scalar q_form(const Vec& x, const Vec& y) const;

    /// Componentwise bracket.  Degrees below -N are discarded (genuine
    /// truncation); degrees above M must cancel, otherwise WindowError.
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Image of g[u]: p(u) -> (p(u), p(0)), degrees 0..M.
    Subspace poly_image() const;
    /// Span of u^j g for top_deg >= j >= -N.
    Subspace tail(int top_deg) const;
};

/// Weyl generator triple in dense g-coordinates.
struct WeylTriple {
    Vec e, h, f;
};

/// alpha-grading data for one crossed-out simple root.
struct VertexData {
    int alpha = 0; // node 1..rank
    int k = 0;     // mark of alpha
    std::map<int, std::vector<int>> graded; // grade -> basis indices (Cartan in 0)
    std::vector<int> l_alpha;               // basis indices of g_k + g_0 + g_-k
    std::vector<int> ext_nodes;             // Gamma^ext \ {alpha}
    std::vector<Root> l_positive;           // positive roots of L_alpha
    Vec zeta_s;                             // spanning vector of zeta_S (coroot coords)

    int grade_of(const LieAlgebra& L, int basis_index) const;
    /// Coefficients of an L_alpha root over the simple system ext_nodes;
    /// order follows ext_nodes.
    std::vector<int> l_coords(const RootSystem& rs, const Root& r) const;
};

VertexData alpha_grading(const LieAlgebra& L, int alpha_node);

/// Weyl triple attached to an extended-diagram node (node 0 carries the
/// lowest-root triple with [X, Y] = H the coroot of -theta).
WeylTriple node_triple(const LieAlgebra& L, int node);

/// The product space L_alpha x g carrying Q' = B (+) -B.
struct PairSpace {
    const LieAlgebra* L = nullptr;
    std::vector<int> left; // basis indices spanning L_alpha

    PairSpace() = default;
    PairSpace(const LieAlgebra& alg, const VertexData& v) : L(&alg), left(v.l_alpha) {}

    std::size_t dim() const { return left.size() + static_cast<std::size_t>(L->dim); }
    std::size_t left_index(int basis_index) const;
    std::size_t right_index(int b) const { return left.size() + static_cast<std::size_t>(b); }

    Vec embed(const Vec& a, const Vec& b) const; // a in g-coords restricted to L_alpha
    std::pair<Vec, Vec> split(const Vec& x) const;

    Matrix gram() const;
    Scalar q_prime(const Vec& x, const Vec& y) const;
    /// Componentwise bracket; throws if the left component leaves L_alpha.
    Vec bracket(const Vec& x, const Vec& y) const;
};

/// O_alpha x g inside the window (Lemma-style order model).
Subspace order_model(const LieAlgebra& L, const VertexData& v, const WindowSpace& win);
/// Closed form of the Q-orthogonal complement of the order model.
Subspace order_model_perp(const LieAlgebra& L, const VertexData& v, const WindowSpace& win);

/// Pairs (a, b) with a in g_0+g_{-k}, b in g_0+...+g_{-k} and equal
/// g_0-components.
Subspace delta_alpha(const LieAlgebra& L, const VertexData& v, const PairSpace& ps);

/// Quotient isomorphism onto L_alpha x g: reads the g_k part of the u^{-1}
/// coefficient, the g_0 part of the constant coefficient and the g_{-k} part
/// of the u coefficient.  The element must lie in the order model.
Vec quotient_iso_sigma(const LieAlgebra& L, const VertexData& v, const WindowSpace& win,
                       const PairSpace& ps, const Vec& window_elt);

/// Canonical section of sigma.
Vec sigma_lift(const LieAlgebra& L, const VertexData& v, const WindowSpace& win,
               const PairSpace& ps, const Vec& pair_elt);

} // namespace cybe
