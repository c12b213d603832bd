#pragma once

#include "cybe/root_system.hpp"

#include <array>
#include <map>

namespace cybe {

struct DiagramOnly : UnsupportedAlgebra {
    using UnsupportedAlgebra::UnsupportedAlgebra;
};

/// Sparse matrix over Q used for the defining representation.
struct SMat {
    int n = 0;
    std::map<std::pair<int, int>, Rational> ent;

    Rational at(int i, int j) const {
        auto it = ent.find({i, j});
        return it == ent.end() ? Rational(0) : it->second;
    }
    void add(int i, int j, const Rational& v);
};

SMat commutator(const SMat& x, const SMat& y);
Rational trace_product(const SMat& x, const SMat& y);

/// Sparse expansion in the Lie algebra basis, sorted by index.
using SVec = std::vector<std::pair<int, Scalar>>;

using Tensor2 = std::map<std::array<int, 2>, Scalar>;
using Tensor3 = std::map<std::array<int, 3>, Scalar>;

void tensor_add(Tensor2& t, const std::array<int, 2>& k, const Scalar& v);
void tensor_add(Tensor3& t, const std::array<int, 3>& k, const Scalar& v);
Tensor2 flip(const Tensor2& t);

/// Chevalley-plus-Cartan basis of a classical simple Lie algebra in its
/// defining representation.  Basis order: coroots h_{a_1}..h_{a_l}, then one
/// root vector per root in the RootSystem order.  Normalization:
/// [e_b, e_{-b}] = b^vee and [h, e_b] = b(h) e_b.  The invariant form B is the
/// trace form of the defining representation.
class LieAlgebra {
  public:
    RootSystem rs;
    int dim = 0;

    std::vector<SMat> mats;                 // matrix realization per basis element
    std::vector<Root> basis_root;           // empty Root for Cartan slots
    std::map<Root, int> root_to_idx;        // root -> basis index

    int rank() const { return rs.rank; }
    int matrix_size() const { return msize_; }
    bool is_cartan_index(int i) const { return i < rs.rank; }

    const SVec& bracket_basis(int i, int j) const { return brackets_[i][j]; }
    /// Bracket of dense coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

    const Matrix& gram() const { return gram_; }
    const Matrix& gram_inv() const { return gram_inv_; }
    Scalar form(const Vec& x, const Vec& y) const;

    /// beta(h) for a root beta and h given in coroot coordinates of the
    /// first rank() slots of a dense vector.
    Scalar root_eval(const Root& beta, const Vec& h) const;
    /// Coroot of an arbitrary root, as a dense coordinate vector.
    Vec coroot(const Root& beta) const;

    Vec basis_vec(int i) const;

    friend LieAlgebra build_lie_algebra(const RootSystem& rs);

  private:
    int msize_ = 0;
    std::vector<std::vector<SVec>> brackets_;
    Matrix gram_, gram_inv_;
    SVec expand(const SMat& x) const;
    std::vector<std::pair<int, int>> lead_; // lead matrix position per root slot
};

/// Builds the matrix realization.  Types G/F/E raise DiagramOnly so that the
/// diagram-level enumeration can still proceed from the RootSystem alone.
LieAlgebra build_lie_algebra(const RootSystem& rs);

struct CasimirData {
    Tensor2 omega;    // sum x_i ⊗ x^i over B-dual bases
    Tensor2 omega0;   // Cartan block
    Tensor2 pos_part; // sum over positive roots e_b ⊗ f_b with B(e_b, f_b) = 1
};

CasimirData casimir(const LieAlgebra& L);

} // namespace cybe
