#pragma once

#include "cybe/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace cybe {

struct UnsupportedAlgebra : ScalarError {
    using ScalarError::ScalarError;
};

/// Root coefficient vector in the simple-root basis.
using Root = std::vector<int>;

/// Root system of a simple Lie algebra, roots kept as integer vectors in the
/// simple-root basis.  The series B is numbered with the short root first, so
/// that for B2 the highest root is 2a1 + a2 with marks (2,1).
struct RootSystem {
    char type = 0;             // 'A','B','C','D','E','F','G'
    int rank = 0;
    std::vector<std::vector<int>> cartan;   // a(i,j) = 2(ai,aj)/(aj,aj)
    std::vector<Rational> length_sq;        // (ai,ai)
    std::vector<Root> positive;             // sorted by (height, lex)
    std::vector<Root> roots;                // positives then matching negatives
    Root theta;                             // maximal root
    std::vector<int> marks;                 // theta = sum marks[j] * a_j

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
    std::size_t num_roots() const { return roots.size(); }

    /// Lattice inner product (x, y) for integer coefficient vectors.
    Rational ip(const Root& x, const Root& y) const;
    /// Cartan pairing <x, a_j^vee> = 2(x,a_j)/(a_j,a_j); always an integer.
    int pairing(const Root& x, int j) const;

    bool is_root(const Root& x) const;
    int height(const Root& x) const;

    /// Extended-diagram node root: node 0 is -theta, node i>=1 is a_i.
    Root node_root(int node) const;
    /// Inner product of two extended-diagram nodes.
    Rational node_ip(int n1, int n2) const;

    bool has_matrix_realization() const { return type == 'A' || type == 'B' || type == 'C' || type == 'D'; }
};

/// Builds the root system by closing simple roots under root strings.
/// Supported: A(n>=1), B(n>=2), C(n>=2), D(n>=3), G2, F4, E6, E7, E8.
RootSystem build_root_system(char type, int rank);

/// Parses labels like "A3", "B2", "E8".
RootSystem build_root_system(const std::string& label);

} // namespace cybe
