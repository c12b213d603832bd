#pragma once

#include "cybe/bd_triples.hpp"
#include "cybe/grading.hpp"

namespace cybe {

/// Cartan pieces inside h x h (coroot coordinates on each side, 2l total).
struct CartanSpaces {
    Subspace a_prime; // annihilator of Gamma'_1 on the left, Gamma'_2 on the right
    Subspace f_prime; // span (H_beta, H_{A'beta})
    Subspace f;       // span (H_gamma, H_gamma), gamma in S
    Subspace i_a;     // diag(zeta_S)
    Subspace a;       // zeta_S x zeta_S
};

CartanSpaces cartan_spaces(const LieAlgebra& L, const VertexData& v, const BDTriple& t);

/// One chosen Lagrangian subspace of a' satisfying the transversality
/// condition against f + i_a; adjoins at most one square root.
struct IaPrime {
    Subspace space; // in h x h coordinates
    long disc = 1;  // discriminant of the adjoined root, 1 if rational
};

IaPrime construct_i_a_prime(const LieAlgebra& L, const VertexData& v, const BDTriple& t,
                            const CartanSpaces& c);

/// Checks a user-supplied Cartan piece: Q'-isotropy and the transversality
/// condition (f' + span) ∩ (f + i_a) = 0.
struct IaCheck {
    bool isotropic = false;
    bool condf = false;
    bool ok() const { return isotropic && condf; }
};

IaCheck verify_alternative_ia(const LieAlgebra& L, const VertexData& v, const BDTriple& t,
                              const std::vector<Vec>& hh_vectors);

struct LagrangianSubalgebra {
    Subspace total;   // in PairSpace coordinates
    Subspace k_comp;  // graph of tau' over m'_+
    Subspace ia_comp; // Cartan piece
    Subspace n_comp;  // residual root spaces
};

LagrangianSubalgebra build_i_prime(const LieAlgebra& L, const VertexData& v, const PairSpace& ps,
                                   const BDTriple& t, const IaPrime& ia);

/// The left half of the Manin triple attached to the identity data; equals
/// delta_alpha on the nose with the fixed Borel conventions.
Subspace build_i_identity_side(const LieAlgebra& L, const VertexData& v, const PairSpace& ps);

struct ManinReport {
    bool isotropic = false;
    bool half_dimensional = false;
    bool subalgebra_closed = false;
    bool intersection_with_delta_trivial = false;
    bool sum_with_delta_full = false;
    bool all() const {
        return isotropic && half_dimensional && subalgebra_closed &&
               intersection_with_delta_trivial && sum_with_delta_full;
    }
};

ManinReport verify_manin(const LieAlgebra& L, const VertexData& v, const PairSpace& ps,
                         const Subspace& lagr);

} // namespace cybe
