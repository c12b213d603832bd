#pragma once

#include "cybe/root_system.hpp"

#include <map>

namespace cybe {

struct IsometryError : ScalarError {
    using ScalarError::ScalarError;
};

enum class TripleType { Empty, I, II };

std::string to_string(TripleType t);

/// A triple (Gamma'_1, Gamma'_2, A') at a crossed-out vertex.  Nodes are
/// extended-diagram ids: 0 is the affine node -theta, i >= 1 is a_i.
/// Gamma'_1 lives in Gamma^ext \ {vertex}, Gamma'_2 in Gamma.
struct BDTriple {
    int vertex = 0;
    std::vector<int> g1, g2;  // sorted
    std::map<int, int> bij;   // g1 node -> g2 node
    TripleType type = TripleType::Empty;

    bool empty() const { return g1.empty(); }
    friend bool operator==(const BDTriple& a, const BDTriple& b) {
        return a.vertex == b.vertex && a.g1 == b.g1 && a.g2 == b.g2 && a.bij == b.bij;
    }
    friend bool operator<(const BDTriple& a, const BDTriple& b);
};

/// True iff every element of g1 escapes g1 under iteration of tau (no
/// cycles).  g1, g2 must lie inside `diagram`, a node set with inner products
/// from rs; a non-isometric tau is an error, distinct from inadmissibility.
bool is_bd_admissible(const RootSystem& rs, const std::vector<int>& diagram,
                      const std::vector<int>& g1, const std::vector<int>& g2,
                      const std::map<int, int>& tau);

/// Classifies an isometric candidate as Empty / I / II; nullopt-like result
/// encoded by the bool flag when the candidate is of neither type.
std::pair<bool, TripleType> classify_triple(const RootSystem& rs, int vertex,
                                            const std::vector<int>& g1, const std::vector<int>& g2,
                                            const std::map<int, int>& bij);

/// All triples of type I or II at the vertex, plus the empty triple,
/// deterministic order.
std::vector<BDTriple> enumerate_triples(const RootSystem& rs, int vertex);

/// Independent oracle: exhaustive scan over all subset pairs and bijections.
/// Guarded to rank <= 4.
std::vector<BDTriple> brute_force_enumerate(const RootSystem& rs, int vertex);

/// Pairs of indices into `triples` related by a diagram automorphism of
/// Gamma^ext \ {vertex} fixing the Gamma side of the data.
std::vector<std::pair<std::size_t, std::size_t>>
automorphism_related(const RootSystem& rs, int vertex, const std::vector<BDTriple>& triples);

} // namespace cybe
