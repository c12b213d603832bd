#include "cybe/grading.hpp"

#include <algorithm>
#include <cassert>

namespace cybe {

Matrix WindowSpace::gram() const {
    const int d = L->dim;
    Matrix g(dim(), dim());
    for (int deg = -N; deg <= M; ++deg) {
        int opp = -deg;
        if (opp < -N || opp > M) continue;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Scalar& v = L->gram().at(a, b);
                if (!v.is_zero()) g.at(first_index(deg, a), first_index(opp, b)) = v;
            }
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Scalar& v = L->gram().at(a, b);
            if (!v.is_zero()) g.at(second_index(a), second_index(b)) = -v;
        }
    return g;
}

Scalar WindowSpace::q_form(const Vec& x, const Vec& y) const { return dot(x, mat_vec(gram(), y)); }

Vec WindowSpace::bracket(const Vec& x, const Vec& y) const {
    const int d = L->dim;
    Vec r(dim());
    auto piece = [&](const Vec& v, int deg) {
        Vec g(d);
        for (int b = 0; b < d; ++b) g[b] = v[first_index(deg, b)];
        return g;
    };
    for (int dx = -N; dx <= M; ++dx) {
        Vec px = piece(x, dx);
        if (is_zero_vec(px)) continue;
        for (int dy = -N; dy <= M; ++dy) {
            Vec py = piece(y, dy);
            if (is_zero_vec(py)) continue;
            Vec br = L->bracket(px, py);
            if (is_zero_vec(br)) continue;
            int deg = dx + dy;
            if (deg < -N) continue;
            if (deg > M) throw WindowError("bracket overflows the window top");
            for (int b = 0; b < d; ++b) r[first_index(deg, b)] += br[b];
        }
    }
    Vec sx(d), sy(d);
    for (int b = 0; b < d; ++b) {
        sx[b] = x[second_index(b)];
        sy[b] = y[second_index(b)];
    }
    Vec sb = L->bracket(sx, sy);
    for (int b = 0; b < d; ++b) r[second_index(b)] += sb[b];
    return r;
}

Subspace WindowSpace::poly_image() const {
    const int d = L->dim;
    std::vector<Vec> rows;
    for (int deg = 0; deg <= M; ++deg)
        for (int b = 0; b < d; ++b) {
            Vec v(dim());
            v[first_index(deg, b)] = Scalar(1);
            if (deg == 0) v[second_index(b)] = Scalar(1);
            rows.push_back(std::move(v));
        }
    return Subspace(dim(), rows);
}

Subspace WindowSpace::tail(int top_deg) const {
    const int d = L->dim;
    std::vector<Vec> rows;
    for (int deg = -N; deg <= top_deg; ++deg)
        for (int b = 0; b < d; ++b) {
            Vec v(dim());
            v[first_index(deg, b)] = Scalar(1);
            rows.push_back(std::move(v));
        }
    return Subspace(dim(), rows);
}

int VertexData::grade_of(const LieAlgebra& L, int basis_index) const {
    if (L.is_cartan_index(basis_index)) return 0;
    return L.basis_root[basis_index][alpha - 1];
}

std::vector<int> VertexData::l_coords(const RootSystem& rs, const Root& r) const {
    // r = c_0 * (-theta) + sum_{j != alpha} c_j a_j
    int ra = r[alpha - 1];
    int ka = rs.marks[alpha - 1];
    assert(ra % ka == 0);
    int c0 = -ra / ka;
    std::vector<int> out;
    for (int node : ext_nodes) {
        if (node == 0)
            out.push_back(c0);
        else
            out.push_back(r[node - 1] + c0 * rs.marks[node - 1]);
    }
    return out;
}

VertexData alpha_grading(const LieAlgebra& L, int alpha_node) {
    if (alpha_node < 1 || alpha_node > L.rank())
        throw UnsupportedAlgebra("vertex must name a simple root");
    VertexData v;
    v.alpha = alpha_node;
    v.k = L.rs.marks[alpha_node - 1];
    for (int i = 0; i < L.dim; ++i) {
        int g = L.is_cartan_index(i) ? 0 : L.basis_root[i][alpha_node - 1];
        v.graded[g].push_back(i);
    }
    for (int g : {v.k, 0, -v.k})
        for (int i : v.graded[g]) v.l_alpha.push_back(i);
    std::sort(v.l_alpha.begin(), v.l_alpha.end());
    v.l_alpha.erase(std::unique(v.l_alpha.begin(), v.l_alpha.end()), v.l_alpha.end());
    for (int node = 0; node <= L.rank(); ++node)
        if (node != alpha_node) v.ext_nodes.push_back(node);

    // positive roots of L_alpha: grade-0 positives of g plus all of g_{-k}
    for (const auto& r : L.rs.positive)
        if (r[alpha_node - 1] == 0) v.l_positive.push_back(r);
    for (int i : v.graded[-v.k])
        if (!L.is_cartan_index(i)) v.l_positive.push_back(L.basis_root[i]);
    for (const auto& r : v.l_positive) {
        auto c = v.l_coords(L.rs, r);
        for (int x : c) assert(x >= 0);
        (void)c;
    }

    // zeta_S: annihilator of Gamma \ {alpha} in coroot coordinates
    Matrix cond(L.rank() - 1, L.rank());
    int row = 0;
    for (int j = 1; j <= L.rank(); ++j) {
        if (j == alpha_node) continue;
        Root aj(L.rank(), 0);
        aj[j - 1] = 1;
        for (int i = 0; i < L.rank(); ++i) cond.at(row, i) = Scalar(L.rs.pairing(aj, i));
        ++row;
    }
    Matrix ns = cond.nullspace();
    assert(ns.rows() == 1);
    v.zeta_s = ns.row(0);
    return v;
}

WeylTriple node_triple(const LieAlgebra& L, int node) {
    WeylTriple t;
    Root r = L.rs.node_root(node);
    Root m = r;
    for (int& c : m) c = -c;
    t.e = L.basis_vec(L.root_to_idx.at(r));
    t.f = L.basis_vec(L.root_to_idx.at(m));
    t.h = L.bracket(t.e, t.f);
    Vec expect = L.coroot(r);
    assert(t.h == expect);
    (void)expect;
    return t;
}

std::size_t PairSpace::left_index(int basis_index) const {
    auto it = std::lower_bound(left.begin(), left.end(), basis_index);
    assert(it != left.end() && *it == basis_index);
    return static_cast<std::size_t>(it - left.begin());
}

Vec PairSpace::embed(const Vec& a, const Vec& b) const {
    Vec out(dim());
    for (int i = 0; i < L->dim; ++i) {
        if (!a[i].is_zero()) {
            auto it = std::lower_bound(left.begin(), left.end(), i);
            if (it == left.end() || *it != i)
                throw UnsupportedAlgebra("left component not inside L_alpha");
            out[static_cast<std::size_t>(it - left.begin())] = a[i];
        }
        out[right_index(i)] = b[i];
    }
    return out;
}

std::pair<Vec, Vec> PairSpace::split(const Vec& x) const {
    Vec a(L->dim), b(L->dim);
    for (std::size_t i = 0; i < left.size(); ++i) a[left[i]] = x[i];
    for (int i = 0; i < L->dim; ++i) b[i] = x[right_index(i)];
    return {a, b};
}

Matrix PairSpace::gram() const {
    Matrix g(dim(), dim());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < left.size(); ++j) g.at(i, j) = L->gram().at(left[i], left[j]);
    for (int i = 0; i < L->dim; ++i)
        for (int j = 0; j < L->dim; ++j) g.at(right_index(i), right_index(j)) = -L->gram().at(i, j);
    return g;
}

Scalar PairSpace::q_prime(const Vec& x, const Vec& y) const { return dot(x, mat_vec(gram(), y)); }

Vec PairSpace::bracket(const Vec& x, const Vec& y) const {
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    return embed(L->bracket(xa, ya), L->bracket(xb, yb));
}

Subspace order_model(const LieAlgebra& L, const VertexData& v, const WindowSpace& win) {
    if (win.N < 2) throw WindowError("order model needs a window with N >= 2");
    std::vector<Vec> rows;
    auto add_range = [&](int grade, int top) {
        auto it = v.graded.find(grade);
        if (it == v.graded.end()) return;
        for (int b : it->second)
            for (int deg = -win.N; deg <= top; ++deg) {
                Vec x(win.dim());
                x[win.first_index(deg, b)] = Scalar(1);
                rows.push_back(std::move(x));
            }
    };
    for (int r = 1; r <= v.k; ++r) add_range(r, -1);
    for (int r = 1 - v.k; r <= 0; ++r) add_range(r, 0);
    add_range(-v.k, 1);
    for (int b = 0; b < L.dim; ++b) {
        Vec x(win.dim());
        x[win.second_index(b)] = Scalar(1);
        rows.push_back(std::move(x));
    }
    return Subspace(win.dim(), rows);
}

Subspace order_model_perp(const LieAlgebra& L, const VertexData& v, const WindowSpace& win) {
    if (win.N < 2) throw WindowError("order model needs a window with N >= 2");
    (void)L;
    std::vector<Vec> rows;
    auto add_range = [&](int grade, int top) {
        auto it = v.graded.find(grade);
        if (it == v.graded.end()) return;
        for (int b : it->second)
            for (int deg = -win.N; deg <= top; ++deg) {
                Vec x(win.dim());
                x[win.first_index(deg, b)] = Scalar(1);
                rows.push_back(std::move(x));
            }
    };
    for (int r = -v.k; r <= -1; ++r) add_range(r, 0);
    for (int r = 0; r <= v.k - 1; ++r) add_range(r, -1);
    add_range(v.k, -2);
    return Subspace(win.dim(), rows);
}

Subspace delta_alpha(const LieAlgebra& L, const VertexData& v, const PairSpace& ps) {
    std::vector<Vec> rows;
    Vec zero(L.dim);
    for (int b : v.graded.at(0)) {
        Vec x(L.dim);
        x[b] = Scalar(1);
        rows.push_back(ps.embed(x, x));
    }
    if (v.graded.count(-v.k))
        for (int b : v.graded.at(-v.k)) {
            Vec x(L.dim);
            x[b] = Scalar(1);
            rows.push_back(ps.embed(x, zero));
        }
    for (int r = 1; r <= v.k; ++r) {
        auto it = v.graded.find(-r);
        if (it == v.graded.end()) continue;
        for (int b : it->second) {
            Vec x(L.dim);
            x[b] = Scalar(1);
            rows.push_back(ps.embed(zero, x));
        }
    }
    return Subspace(ps.dim(), rows);
}

Vec quotient_iso_sigma(const LieAlgebra& L, const VertexData& v, const WindowSpace& win,
                       const PairSpace& ps, const Vec& window_elt) {
    Subspace om = order_model(L, v, win);
    if (!om.contains(window_elt))
        throw UnsupportedAlgebra("sigma applies only to elements of the order model");
    Vec a(L.dim), b(L.dim);
    for (int idx : v.graded.at(v.k)) a[idx] = window_elt[win.first_index(-1, idx)];
    for (int idx : v.graded.at(0)) a[idx] += window_elt[win.first_index(0, idx)];
    if (v.graded.count(-v.k))
        for (int idx : v.graded.at(-v.k)) a[idx] += window_elt[win.first_index(1, idx)];
    for (int i = 0; i < L.dim; ++i) b[i] = window_elt[win.second_index(i)];
    return ps.embed(a, b);
}

Vec sigma_lift(const LieAlgebra& L, const VertexData& v, const WindowSpace& win,
               const PairSpace& ps, const Vec& pair_elt) {
    auto [a, b] = ps.split(pair_elt);
    Vec out(win.dim());
    for (int i = 0; i < L.dim; ++i) {
        if (!a[i].is_zero()) {
            int g = v.grade_of(L, i);
            int deg = g == v.k ? -1 : (g == 0 ? 0 : 1);
            assert(g == v.k || g == 0 || g == -v.k);
            out[win.first_index(deg, i)] = a[i];
        }
        out[win.second_index(i)] = b[i];
    }
    return out;
}

} // namespace cybe
