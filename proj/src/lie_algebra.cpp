#include "cybe/lie_algebra.hpp"

#include <algorithm>
#include <cassert>

namespace cybe {

void SMat::add(int i, int j, const Rational& v) {
    if (v == 0) return;
    auto [it, fresh] = ent.try_emplace({i, j}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) ent.erase(it);
    }
}

SMat commutator(const SMat& x, const SMat& y) {
    SMat r;
    r.n = x.n;
    for (const auto& [px, vx] : x.ent)
        for (const auto& [py, vy] : y.ent) {
            if (px.second == py.first) r.add(px.first, py.second, vx * vy);
            if (py.second == px.first) r.add(py.first, px.second, -vx * vy);
        }
    return r;
}

Rational trace_product(const SMat& x, const SMat& y) {
    Rational t;
    for (const auto& [px, vx] : x.ent) {
        auto it = y.ent.find({px.second, px.first});
        if (it != y.ent.end()) t += vx * it->second;
    }
    return t;
}

void tensor_add(Tensor2& t, const std::array<int, 2>& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

void tensor_add(Tensor3& t, const std::array<int, 3>& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

Tensor2 flip(const Tensor2& t) {
    Tensor2 r;
    for (const auto& [k, v] : t) r[{k[1], k[0]}] = v;
    return r;
}

namespace {

struct Candidate {
    SMat mat;
    std::vector<int> weight; // eps coordinates
    std::pair<int, int> lead;
};

// Matrix models.  A: sl(n+1).  B/D: forms anti-diagonal, so Cartan elements
// are diag(t_1..t_n, [0,] -t_n..-t_1) matching the diag(...) vectors used for
// o(5).  C: anti-diagonal symplectic form.
void build_candidates(const RootSystem& rs, int& msize, int& epsdim,
                      std::vector<Candidate>& cands, std::vector<std::vector<int>>& simple_eps,
                      std::vector<std::vector<Rational>>& cartan_param) {
    const int n = rs.rank;
    auto E = [](int N, int i, int j, const Rational& v) {
        SMat m;
        m.n = N;
        m.add(i, j, v);
        return m;
    };
    if (rs.type == 'A') {
        msize = n + 1;
        epsdim = n + 1;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                Candidate c;
                c.mat = E(msize, i, j, 1);
                c.weight.assign(epsdim, 0);
                c.weight[i] = 1;
                c.weight[j] = -1;
                c.lead = {i, j};
                cands.push_back(std::move(c));
            }
        simple_eps.assign(n, std::vector<int>(epsdim, 0));
        for (int i = 0; i < n; ++i) {
            simple_eps[i][i] = 1;
            simple_eps[i][i + 1] = -1;
        }
        // traceless diagonals: parameterized by t_1..t_n with last entry -sum
        cartan_param.assign(msize, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i) cartan_param[i][i] = 1;
        for (int i = 0; i < n; ++i) cartan_param[n][i] = -1;
        return;
    }
    const bool isB = rs.type == 'B', isC = rs.type == 'C', isD = rs.type == 'D';
    if (!isB && !isC && !isD)
        throw DiagramOnly("no matrix realization for type " + rs.label() +
                          "; diagram-level operations only");
    msize = isB ? 2 * n + 1 : 2 * n;
    epsdim = n;
    auto prime = [&](int i) { return msize - 1 - i; };
    auto sgn = [&](int i) { return i < n ? 1 : -1; }; // C only
    auto eps = [&](int i) {
        std::vector<int> w(n, 0);
        if (i < n)
            w[i] = 1;
        else if (i >= msize - n)
            w[msize - 1 - i] = -1;
        return w;
    };
    for (int i = 0; i < msize; ++i)
        for (int j = 0; j < msize; ++j) {
            if (i == j) continue;
            std::pair<int, int> mirror{prime(j), prime(i)};
            if (std::pair<int, int>{i, j} > mirror) continue;
            SMat m;
            m.n = msize;
            if (isC) {
                m.add(i, j, 1);
                m.add(prime(j), prime(i), -Rational(sgn(i) * sgn(j)));
            } else {
                if (j == prime(i)) continue; // zero in B/D
                m.add(i, j, 1);
                m.add(prime(j), prime(i), -1);
            }
            if (m.ent.empty()) continue;
            Candidate c;
            c.mat = std::move(m);
            std::vector<int> w = eps(i);
            std::vector<int> wj = eps(j);
            for (int k = 0; k < n; ++k) w[k] -= wj[k];
            bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
            if (zero) continue;
            c.weight = std::move(w);
            c.lead = {i, j};
            cands.push_back(std::move(c));
        }
    simple_eps.assign(n, std::vector<int>(epsdim, 0));
    if (isB) {
        // short root first: a_1 = e_n, a_j = e_{n-j+1} - e_{n-j+2}
        simple_eps[0][n - 1] = 1;
        for (int j = 2; j <= n; ++j) {
            simple_eps[j - 1][n - j] = 1;
            simple_eps[j - 1][n - j + 1] = -1;
        }
    } else {
        for (int i = 0; i + 1 < n; ++i) {
            simple_eps[i][i] = 1;
            simple_eps[i][i + 1] = -1;
        }
        if (isC)
            simple_eps[n - 1][n - 1] = 2;
        else {
            simple_eps[n - 1][n - 2] = 1;
            simple_eps[n - 1][n - 1] = 1;
        }
    }
    cartan_param.assign(msize, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) {
        cartan_param[i][i] = 1;
        cartan_param[msize - 1 - i][i] = -1;
    }
}

} // namespace

Vec LieAlgebra::basis_vec(int i) const {
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : brackets_[i][j]) r[k] += c * v;
        }
    }
    return r;
}

Scalar LieAlgebra::form(const Vec& x, const Vec& y) const { return dot(x, apply(gram_, y)); }

Scalar LieAlgebra::root_eval(const Root& beta, const Vec& h) const {
    Scalar s;
    for (int j = 0; j < rs.rank; ++j) {
        if (h[j].is_zero()) continue;
        s += Scalar(rs.pairing(beta, j)) * h[j];
    }
    return s;
}

Vec LieAlgebra::coroot(const Root& beta) const {
    // beta^vee = 2 t_beta / (beta,beta); solve for coordinates over simple
    // coroots from the Cartan pairings <a_j, beta^vee> = 2(a_j,beta)/(beta,beta).
    Matrix A(rs.rank, rs.rank);
    Vec b(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        // a_j evaluated on h_{a_i} is the Cartan integer a(j,i)
        for (int i = 0; i < rs.rank; ++i) A.at(j, i) = Scalar(rs.cartan[j][i]);
        Root aj(rs.rank, 0);
        aj[j] = 1;
        b[j] = Scalar(Rational(2) * rs.ip(aj, beta) / rs.ip(beta, beta));
    }
    auto [ok, x] = solve_linear(A, b);
    assert(ok);
    Vec full(dim);
    for (int i = 0; i < rs.rank; ++i) full[i] = x[i];
    return full;
}

SVec LieAlgebra::expand(const SMat& x) const {
    SVec out;
    SMat rest = x;
    for (int k = rs.rank; k < dim; ++k) {
        auto [i, j] = lead_[k];
        Rational v = rest.at(i, j);
        if (v == 0) continue;
        Rational c = v / mats[k].at(i, j);
        out.emplace_back(k, Scalar(c));
        for (const auto& [p, mv] : mats[k].ent) rest.add(p.first, p.second, -c * mv);
    }
    // remaining part must be a diagonal Cartan element
    Matrix A(msize_, rs.rank);
    Vec b(msize_);
    for (int i = 0; i < rs.rank; ++i)
        for (const auto& [p, v] : mats[i].ent) {
            assert(p.first == p.second);
            A.at(p.first, i) = Scalar(v);
        }
    for (const auto& [p, v] : rest.ent) {
        if (p.first != p.second) assert(false && "expansion left a non-diagonal remainder");
        b[p.first] = Scalar(v);
    }
    auto [ok, c] = solve_linear(A, b);
    assert(ok && "matrix does not lie in the algebra span");
    SVec cart;
    for (int i = 0; i < rs.rank; ++i)
        if (!c[i].is_zero()) cart.emplace_back(i, c[i]);
    cart.insert(cart.end(), out.begin(), out.end());
    std::sort(cart.begin(), cart.end());
    return cart;
}

LieAlgebra build_lie_algebra(const RootSystem& rs) {
    LieAlgebra L;
    L.rs = rs;
    int epsdim = 0;
    std::vector<Candidate> cands;
    std::vector<std::vector<int>> simple_eps;
    std::vector<std::vector<Rational>> cartan_param;
    build_candidates(rs, L.msize_, epsdim, cands, simple_eps, cartan_param);
    (void)cartan_param;

    const int l = rs.rank;
    L.dim = l + static_cast<int>(rs.num_roots());
    assert(cands.size() == rs.num_roots());

    // match candidate weights to roots: solve sum_i c_i * simple_eps_i = weight
    Matrix S(epsdim, l);
    for (int i = 0; i < l; ++i)
        for (int r = 0; r < epsdim; ++r) S.at(r, i) = Scalar(simple_eps[i][r]);
    std::map<Root, const Candidate*> by_root;
    for (const auto& c : cands) {
        Vec w(epsdim);
        for (int r = 0; r < epsdim; ++r) w[r] = Scalar(c.weight[r]);
        auto [ok, coeff] = solve_linear(S, w);
        assert(ok);
        Root root(l);
        for (int i = 0; i < l; ++i) {
            assert(coeff[i].is_rational() && coeff[i].rat_part().get_den() == 1);
            root[i] = static_cast<int>(coeff[i].rat_part().get_num().get_si());
        }
        assert(rs.is_root(root));
        bool fresh = by_root.emplace(root, &c).second;
        assert(fresh && "two candidates matched one root");
        (void)fresh;
    }

    L.mats.resize(L.dim);
    L.basis_root.assign(L.dim, Root{});
    L.lead_.assign(L.dim, {-1, -1});

    // root vectors: e_b from the candidate, e_{-b} scaled so [e_b, e_{-b}] = b^vee
    auto neg = [&](const Root& r) {
        Root m = r;
        for (int& c : m) c = -c;
        return m;
    };
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        const Root& r = rs.roots[k];
        L.basis_root[l + k] = r;
        L.root_to_idx[r] = l + static_cast<int>(k);
    }
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        const Root& b = rs.positive[k];
        const Candidate* cp = by_root.at(b);
        const Candidate* cm = by_root.at(neg(b));
        int ip = L.root_to_idx[b], im = L.root_to_idx[neg(b)];
        L.mats[ip] = cp->mat;
        L.lead_[ip] = cp->lead;
        // [F_b, F_{-b}] = B(F_b, F_{-b}) t_b; rescale F_{-b} so the bracket is
        // the coroot 2 t_b / (b,b)_form
        Rational pairing = trace_product(cp->mat, cm->mat);
        assert(pairing != 0);
        SMat c = commutator(cp->mat, cm->mat); // = pairing * t_b
        // (b,b)_form = b(t_b); b(h) for h = diag: weight dot applied via c
        // evaluate b on c: b(c) = pairing * (b,b)_form
        Rational bc;
        {
            // b as eps-weight functional on a diagonal matrix
            const auto& w = cp->weight;
            for (const auto& [p, v] : c.ent) {
                assert(p.first == p.second);
                // eps-coordinate of this diagonal position
                if (rs.type == 'A') {
                    bc += Rational(w[p.first]) * v;
                } else {
                    int n = rs.rank;
                    if (p.first < n)
                        bc += Rational(w[p.first]) * v;
                    else if (p.first >= c.n - n)
                        bc += Rational(-w[c.n - 1 - p.first]) * v;
                }
            }
        }
        Rational form_bb = bc / pairing;
        assert(form_bb != 0);
        Rational lambda = Rational(2) / (form_bb * pairing);
        SMat fneg = cm->mat;
        for (auto& [p, v] : fneg.ent) v *= lambda;
        L.mats[im] = fneg;
        L.lead_[im] = cm->lead;
    }

    // Cartan basis: coroots of the simple roots, h_i = [e_i, e_{-i}]
    for (int i = 0; i < l; ++i) {
        Root a(l, 0);
        a[i] = 1;
        L.mats[i] = commutator(L.mats[L.root_to_idx[a]], L.mats[L.root_to_idx[neg(a)]]);
        for (const auto& [p, v] : L.mats[i].ent) {
            assert(p.first == p.second);
            (void)p;
            (void)v;
        }
    }

    // structure constants
    L.brackets_.assign(L.dim, std::vector<SVec>(L.dim));
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            if (j < i) continue;
            SVec e = L.expand(commutator(L.mats[i], L.mats[j]));
            SVec m;
            for (auto& [k, v] : e) m.emplace_back(k, -v);
            L.brackets_[i][j] = std::move(e);
            L.brackets_[j][i] = std::move(m);
        }

    // invariant form and its inverse
    L.gram_ = Matrix(L.dim, L.dim);
    for (int i = 0; i < L.dim; ++i)
        for (int j = i; j < L.dim; ++j) {
            Scalar v = Scalar(trace_product(L.mats[i], L.mats[j]));
            L.gram_.at(i, j) = v;
            L.gram_.at(j, i) = v;
        }
    {
        Matrix aug(L.dim, 2 * L.dim);
        for (int i = 0; i < L.dim; ++i) {
            for (int j = 0; j < L.dim; ++j) aug.at(i, j) = L.gram_.at(i, j);
            aug.at(i, L.dim + i) = Scalar(1);
        }
        auto piv = aug.rref();
        assert(piv.size() == static_cast<std::size_t>(L.dim) && "degenerate invariant form");
        (void)piv;
        L.gram_inv_ = Matrix(L.dim, L.dim);
        for (int i = 0; i < L.dim; ++i)
            for (int j = 0; j < L.dim; ++j) L.gram_inv_.at(i, j) = aug.at(i, L.dim + j);
    }

    // spot-check the Chevalley relations
    for (int i = 0; i < l; ++i) {
        Root a(l, 0);
        a[i] = 1;
        Vec h = L.coroot(a);
        Vec e = L.basis_vec(L.root_to_idx[a]);
        Vec lhs = L.bracket(h, e);
        for (int k = 0; k < L.dim; ++k) assert(lhs[k] == Scalar(2) * e[k]);
        (void)lhs;
        (void)h;
    }
    return L;
}

CasimirData casimir(const LieAlgebra& L) {
    CasimirData c;
    const Matrix& Binv = L.gram_inv();
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            const Scalar& v = Binv.at(i, j);
            if (v.is_zero()) continue;
            tensor_add(c.omega, {i, j}, v);
            if (L.is_cartan_index(i) && L.is_cartan_index(j)) tensor_add(c.omega0, {i, j}, v);
        }
    for (const auto& b : L.rs.positive) {
        int ip = L.root_to_idx.at(b);
        Root m = b;
        for (int& x : m) x = -x;
        int im = L.root_to_idx.at(m);
        Scalar pair = L.gram().at(ip, im);
        tensor_add(c.pos_part, {ip, im}, pair.inverse());
    }
    // consistency: omega = pos_part + flip(pos_part) + omega0
    Tensor2 check = c.omega0;
    for (const auto& [k, v] : c.pos_part) {
        tensor_add(check, k, v);
        tensor_add(check, {k[1], k[0]}, v);
    }
    assert(check == c.omega);
    return c;
}

} // namespace cybe
