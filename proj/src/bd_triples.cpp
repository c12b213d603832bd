#include "cybe/bd_triples.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace cybe {

std::string to_string(TripleType t) {
    switch (t) {
    case TripleType::Empty: return "empty";
    case TripleType::I: return "I";
    case TripleType::II: return "II";
    }
    return "?";
}

bool operator<(const BDTriple& a, const BDTriple& b) {
    if (a.g1.size() != b.g1.size()) return a.g1.size() < b.g1.size();
    if (a.g1 != b.g1) return a.g1 < b.g1;
    if (a.g2 != b.g2) return a.g2 < b.g2;
    return a.bij < b.bij;
}

namespace {

bool is_isometry(const RootSystem& rs, const std::vector<int>& g1, const std::map<int, int>& tau) {
    for (int a : g1)
        for (int b : g1)
            if (rs.node_ip(a, b) != rs.node_ip(tau.at(a), tau.at(b))) return false;
    return true;
}

bool nilpotent(const std::vector<int>& g1, const std::map<int, int>& tau) {
    for (int start : g1) {
        int cur = start;
        std::size_t steps = 0;
        while (true) {
            auto it = tau.find(cur);
            assert(it != tau.end());
            cur = it->second;
            if (!std::binary_search(g1.begin(), g1.end(), cur)) break;
            if (++steps > g1.size()) return false; // cycled
        }
    }
    return true;
}

} // namespace

bool is_bd_admissible(const RootSystem& rs, const std::vector<int>& diagram,
                      const std::vector<int>& g1, const std::vector<int>& g2,
                      const std::map<int, int>& tau) {
    auto inside = [&](const std::vector<int>& s) {
        for (int n : s)
            if (!std::binary_search(diagram.begin(), diagram.end(), n)) return false;
        return true;
    };
    if (!inside(g1) || !inside(g2))
        throw IsometryError("triple subsets must lie inside the given diagram");
    if (g1.size() != g2.size() || tau.size() != g1.size())
        throw IsometryError("tau must be a bijection between the subsets");
    std::set<int> image;
    for (int a : g1) {
        auto it = tau.find(a);
        if (it == tau.end()) throw IsometryError("tau not defined on all of Gamma_1");
        if (!std::binary_search(g2.begin(), g2.end(), it->second))
            throw IsometryError("tau image escapes Gamma_2");
        image.insert(it->second);
    }
    if (image.size() != g1.size()) throw IsometryError("tau is not injective");
    if (!is_isometry(rs, g1, tau)) throw IsometryError("tau is not an isometry");
    return nilpotent(g1, tau);
}

std::pair<bool, TripleType> classify_triple(const RootSystem& rs, int vertex,
                                            const std::vector<int>& g1, const std::vector<int>& g2,
                                            const std::map<int, int>& bij) {
    if (g1.empty()) return {true, TripleType::Empty};
    assert(is_isometry(rs, g1, bij));
    bool has_alpha = std::binary_search(g2.begin(), g2.end(), vertex);
    if (!has_alpha) {
        // type I: (G1, i(G2), i A') admissible inside Gamma^ext \ {vertex}
        return {nilpotent(g1, bij), TripleType::I};
    }
    // type II: some beta maps to alpha (automatic for a bijection onto g2);
    // the restricted triple must be admissible
    int beta = -1;
    for (const auto& [a, b] : bij)
        if (b == vertex) beta = a;
    assert(beta >= 0);
    std::vector<int> g1r;
    for (int a : g1)
        if (a != beta) g1r.push_back(a);
    std::map<int, int> bijr = bij;
    bijr.erase(beta);
    return {nilpotent(g1r, bijr), TripleType::II};
}

namespace {

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, std::size_t m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void extend_bijection(const RootSystem& rs, int vertex, const std::vector<int>& g1,
                      const std::vector<int>& g2, std::size_t pos, std::map<int, int>& partial,
                      std::vector<bool>& used, std::vector<BDTriple>& out) {
    if (pos == g1.size()) {
        auto [ok, type] = classify_triple(rs, vertex, g1, g2, partial);
        if (!ok) return;
        BDTriple t;
        t.vertex = vertex;
        t.g1 = g1;
        t.g2 = g2;
        t.bij = partial;
        t.type = type;
        out.push_back(std::move(t));
        return;
    }
    int a = g1[pos];
    for (std::size_t j = 0; j < g2.size(); ++j) {
        if (used[j]) continue;
        int b = g2[j];
        if (rs.node_ip(a, a) != rs.node_ip(b, b)) continue;
        bool consistent = true;
        for (std::size_t q = 0; q < pos && consistent; ++q)
            if (rs.node_ip(a, g1[q]) != rs.node_ip(b, partial.at(g1[q]))) consistent = false;
        if (!consistent) continue;
        used[j] = true;
        partial[a] = b;
        extend_bijection(rs, vertex, g1, g2, pos + 1, partial, used, out);
        partial.erase(a);
        used[j] = false;
    }
}

std::vector<int> ext_minus(const RootSystem& rs, int vertex) {
    std::vector<int> nodes;
    for (int n = 0; n <= rs.rank; ++n)
        if (n != vertex) nodes.push_back(n);
    return nodes;
}

std::vector<int> gamma_nodes(const RootSystem& rs) {
    std::vector<int> nodes;
    for (int n = 1; n <= rs.rank; ++n) nodes.push_back(n);
    return nodes;
}

void sort_dedup(std::vector<BDTriple>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<BDTriple> enumerate_triples(const RootSystem& rs, int vertex) {
    if (vertex < 1 || vertex > rs.rank) throw UnsupportedAlgebra("vertex must name a simple root");
    std::vector<int> pool1 = ext_minus(rs, vertex);
    std::vector<int> pool2 = gamma_nodes(rs);
    std::vector<BDTriple> out;
    BDTriple empty;
    empty.vertex = vertex;
    out.push_back(empty);
    for (std::size_t m = 1; m <= pool1.size() && m <= pool2.size(); ++m) {
        for (const auto& g1 : subsets_of_size(pool1, m))
            for (const auto& g2 : subsets_of_size(pool2, m)) {
                std::map<int, int> partial;
                std::vector<bool> used(g2.size(), false);
                extend_bijection(rs, vertex, g1, g2, 0, partial, used, out);
            }
    }
    sort_dedup(out);
    return out;
}

std::vector<BDTriple> brute_force_enumerate(const RootSystem& rs, int vertex) {
    if (rs.rank > 4) throw UnsupportedAlgebra("brute-force enumeration is guarded to rank <= 4");
    if (vertex < 1 || vertex > rs.rank) throw UnsupportedAlgebra("vertex must name a simple root");
    std::vector<int> pool1 = ext_minus(rs, vertex);
    std::vector<int> pool2 = gamma_nodes(rs);
    std::vector<BDTriple> out;
    BDTriple empty;
    empty.vertex = vertex;
    out.push_back(empty);
    for (std::size_t m = 1; m <= pool1.size() && m <= pool2.size(); ++m) {
        for (const auto& g1 : subsets_of_size(pool1, m))
            for (const auto& g2 : subsets_of_size(pool2, m)) {
                std::vector<int> perm = g2;
                std::sort(perm.begin(), perm.end());
                do {
                    std::map<int, int> bij;
                    for (std::size_t i = 0; i < m; ++i) bij[g1[i]] = perm[i];
                    if (!is_isometry(rs, g1, bij)) continue;
                    auto [ok, type] = classify_triple(rs, vertex, g1, g2, bij);
                    if (!ok) continue;
                    BDTriple t;
                    t.vertex = vertex;
                    t.g1 = g1;
                    t.g2 = g2;
                    t.bij = bij;
                    t.type = type;
                    out.push_back(std::move(t));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    }
    sort_dedup(out);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
automorphism_related(const RootSystem& rs, int vertex, const std::vector<BDTriple>& triples) {
    std::vector<int> nodes = ext_minus(rs, vertex);
    // all isometric self-bijections of the crossed diagram
    std::vector<std::map<int, int>> autos;
    std::vector<int> perm = nodes;
    std::sort(perm.begin(), perm.end());
    do {
        std::map<int, int> s;
        for (std::size_t i = 0; i < nodes.size(); ++i) s[nodes[i]] = perm[i];
        bool iso = true;
        for (int a : nodes)
            for (int b : nodes)
                if (rs.node_ip(a, b) != rs.node_ip(s[a], s[b])) iso = false;
        bool identity = true;
        for (int a : nodes)
            if (s[a] != a) identity = false;
        if (iso && !identity) autos.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<std::size_t, std::size_t>> related;
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
            if (triples[i].empty() || triples[j].empty()) continue;
            for (const auto& s : autos) {
                // sigma moves G1 and relabels the map; Gamma side fixed
                std::vector<int> g1s;
                for (int a : triples[i].g1) g1s.push_back(s.at(a));
                std::sort(g1s.begin(), g1s.end());
                if (g1s != triples[j].g1 || triples[i].g2 != triples[j].g2) continue;
                bool same = true;
                for (const auto& [a, b] : triples[i].bij)
                    if (triples[j].bij.at(s.at(a)) != b) same = false;
                if (same) {
                    related.emplace_back(i, j);
                    break;
                }
            }
        }
    return related;
}

} // namespace cybe
