#include "cybe/rmatrix.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cybe {

void QuasiTrig::add(int i, int j, int du, int dv, const Scalar& c) {
    if (c.is_zero()) return;
    std::array<int, 4> k{i, j, du, dv};
    auto [it, fresh] = p.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

int QuasiTrig::max_deg_u() const {
    int m = 0;
    for (const auto& [k, v] : p) m = std::max(m, k[2]);
    return m;
}

int QuasiTrig::max_deg_v() const {
    int m = 0;
    for (const auto& [k, v] : p) m = std::max(m, k[3]);
    return m;
}

QuasiTrig standard_r3(const LieAlgebra& L, const CasimirData& cas) {
    (void)L;
    QuasiTrig x;
    for (const auto& [k, v] : cas.pos_part) x.add(k[0], k[1], 0, 0, v);
    Scalar half(1, 2);
    for (const auto& [k, v] : cas.omega0) x.add(k[0], k[1], 0, 0, half * v);
    return x;
}

bool is_unitary(const QuasiTrig& x, const CasimirData& cas) {
    QuasiTrig acc = x;
    for (const auto& [k, v] : x.p) acc.add(k[1], k[0], k[3], k[2], v); // p^{21}(v,u)
    for (const auto& [k, v] : cas.omega) acc.add(k[0], k[1], 0, 0, -v);
    return acc.p.empty();
}

std::vector<NEntry> numerator_entries(const QuasiTrig& x, const CasimirData& cas) {
    QuasiTrig n;
    for (const auto& [k, v] : cas.omega) n.add(k[0], k[1], 0, 1, v); // v * Omega
    for (const auto& [k, v] : x.p) {
        n.add(k[0], k[1], k[2] + 1, k[3], v);  // u * p
        n.add(k[0], k[1], k[2], k[3] + 1, -v); // -v * p
    }
    std::vector<NEntry> out;
    out.reserve(n.p.size());
    for (const auto& [k, v] : n.p) out.push_back({k[0], k[1], k[2], k[3], v});
    return out;
}

namespace {

void cyb_add(CybTensor& t, std::array<int, 6> k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

// prefactors: term 0 gets (v-w), term 1 gets (u-w), term 2 gets (u-v)
void add_with_prefactor(CybTensor& t, int term, std::array<int, 3> idx, std::array<int, 3> deg,
                        const Scalar& c) {
    auto bump = [&](int var, const Scalar& s) {
        std::array<int, 3> d = deg;
        d[var] += 1;
        cyb_add(t, {idx[0], idx[1], idx[2], d[0], d[1], d[2]}, s);
    };
    switch (term) {
    case 0:
        bump(1, c);
        bump(2, -c);
        break;
    case 1:
        bump(0, c);
        bump(2, -c);
        break;
    default:
        bump(0, c);
        bump(1, -c);
        break;
    }
}

// One left entry against all right entries, all three bracket terms.
void expand_one(const LieAlgebra& L, const std::vector<NEntry>& n, std::size_t ei, CybTensor& t) {
    const NEntry& e = n[ei];
    for (const NEntry& f : n) {
        Scalar c = e.c * f.c;
        // (v-w) [N12(u,v), N13(u,w)] : [a, a'] ⊗ b ⊗ b'
        for (const auto& [k, s] : L.bracket_basis(e.a, f.a))
            add_with_prefactor(t, 0, {k, e.b, f.b}, {e.du + f.du, e.dv, f.dv}, c * s);
        // (u-w) [N12(u,v), N23(v,w)] : a ⊗ [b, a'] ⊗ b'
        for (const auto& [k, s] : L.bracket_basis(e.b, f.a))
            add_with_prefactor(t, 1, {e.a, k, f.b}, {e.du, e.dv + f.du, f.dv}, c * s);
        // (u-v) [N13(u,w), N23(v,w)] : a ⊗ a' ⊗ [b, b']
        for (const auto& [k, s] : L.bracket_basis(e.b, f.b))
            add_with_prefactor(t, 2, {e.a, f.a, k}, {e.du, f.du, e.dv + f.dv}, c * s);
    }
}

} // namespace

CybTensor cyb_lhs_serial(const LieAlgebra& L, const std::vector<NEntry>& n) {
    CybTensor t;
    for (std::size_t i = 0; i < n.size(); ++i) expand_one(L, n, i, t);
    return t;
}

CybTensor cyb_lhs_parallel(const LieAlgebra& L, const std::vector<NEntry>& n) {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::vector<CybTensor> part(threads);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n.size(); ++i) {
#ifdef _OPENMP
        CybTensor& mine = part[omp_get_thread_num()];
#else
        CybTensor& mine = part[0];
#endif
        expand_one(L, n, i, mine);
    }
    CybTensor t = std::move(part[0]);
    for (int q = 1; q < threads; ++q)
        for (const auto& [k, v] : part[q]) cyb_add(t, k, v);
    return t;
}

bool verify_cybe(const LieAlgebra& L, const CasimirData& cas, const QuasiTrig& x) {
    auto n = numerator_entries(x, cas);
    return cyb_lhs_parallel(L, n).empty();
}

namespace {

Vec dual_basis_vector(const LieAlgebra& L, int a) {
    Vec v(L.dim);
    for (int j = 0; j < L.dim; ++j) v[j] = L.gram_inv().at(a, j);
    return v;
}

/// polynomial slice P_{k,a}(u) of p: all (i, a, du, k) entries.
std::map<int, Vec> p_slice(const LieAlgebra& L, const QuasiTrig& x, int a, int k) {
    std::map<int, Vec> by_deg; // du -> g vector
    for (const auto& [key, c] : x.p) {
        if (key[1] != a || key[3] != k) continue;
        auto [it, fresh] = by_deg.try_emplace(key[2], Vec(L.dim));
        it->second[key[0]] += c;
    }
    return by_deg;
}

/// Solve A X = B column by column with a single elimination.
std::vector<Vec> solve_multi(const Matrix& A, const std::vector<Vec>& rhs) {
    std::size_t n = A.cols(), m = rhs.size();
    Matrix aug;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Vec r = A.row(i);
        r.resize(n + m);
        for (std::size_t q = 0; q < m; ++q) r[n + q] = rhs[q][i];
        aug.push_row(std::move(r));
    }
    auto piv = aug.rref();
    for (auto c : piv)
        if (c >= n) throw ScalarError("inconsistent linear system");
    std::vector<Vec> out(m, Vec(n));
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t q = 0; q < m; ++q) out[q][piv[i]] = aug.at(i, n + q);
    return out;
}

bool isotropic_subspace(const Matrix& gram, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vec gi = mat_vec(gram, s.basis_vector(i));
        for (std::size_t j = i; j < s.dim(); ++j)
            if (!dot(s.basis_vector(j), gi).is_zero()) return false;
    }
    return true;
}

} // namespace

WConditions check_w_conditions(const LieAlgebra& L, const WindowSpace& win, const WSubalgebra& w) {
    WConditions c;
    const std::size_t d = static_cast<std::size_t>(L.dim);
    c.subalgebra = w.space.contains(win.tail(-win.N)); // deep tail at least
    if (c.subalgebra) {
        try {
            for (std::size_t i = 0; i < w.space.dim() && c.subalgebra; ++i)
                for (std::size_t j = i + 1; j < w.space.dim() && c.subalgebra; ++j) {
                    Vec br = win.bracket(w.space.basis_vector(i), w.space.basis_vector(j));
                    if (!w.space.contains(br)) c.subalgebra = false;
                }
        } catch (const WindowError&) {
            c.subalgebra = false;
        }
    }
    Subspace g_poly = win.poly_image();
    c.transversal = w.space.intersect(g_poly).dim() == 0 &&
                    (w.space + g_poly).dim() == win.dim();
    c.lagrangian =
        w.space.dim() == (static_cast<std::size_t>(win.N) + 1) * d && isotropic_subspace(win.gram(), w.space);
    return c;
}

WSubalgebra subalgebra_from_solution(const LieAlgebra& L, const CasimirData& cas,
                                     const QuasiTrig& x, const WindowSpace& win) {
    if (!is_unitary(x, cas)) throw UnsupportedAlgebra("solution is not unitary");
    const int dvmax = x.max_deg_v();
    if (x.max_deg_u() > win.M || dvmax > win.N - 1)
        throw WindowError("solution does not fit the window; need M >= " +
                          std::to_string(x.max_deg_u()) + ", N >= " + std::to_string(dvmax + 1));
    const int d = L.dim;
    std::vector<Vec> rows;
    // deep tail u^{-N} g .. u^{-(dvmax+1)} g
    for (int deg = -win.N; deg <= -(dvmax + 1); ++deg)
        for (int b = 0; b < d; ++b) {
            Vec v(win.dim());
            v[win.first_index(deg, b)] = Scalar(1);
            rows.push_back(std::move(v));
        }
    for (int a = 0; a < d; ++a) {
        for (int k = 1; k <= dvmax; ++k) {
            Vec v(win.dim());
            Vec xa = dual_basis_vector(L, a);
            for (int b = 0; b < d; ++b) v[win.first_index(-k, b)] = xa[b];
            for (const auto& [du, g] : p_slice(L, x, a, k)) {
                for (int b = 0; b < d; ++b) v[win.first_index(du, b)] += g[b];
                if (du == 0)
                    for (int b = 0; b < d; ++b) v[win.second_index(b)] += g[b];
            }
            rows.push_back(std::move(v));
        }
        // k = 0: (P_{0,a}(u), P_{0,a}(0) - x^a)
        Vec v(win.dim());
        for (const auto& [du, g] : p_slice(L, x, a, 0)) {
            for (int b = 0; b < d; ++b) v[win.first_index(du, b)] += g[b];
            if (du == 0)
                for (int b = 0; b < d; ++b) v[win.second_index(b)] += g[b];
        }
        Vec xa = dual_basis_vector(L, a);
        for (int b = 0; b < d; ++b) v[win.second_index(b)] -= xa[b];
        rows.push_back(std::move(v));
    }
    WSubalgebra w;
    w.space = Subspace(win.dim(), rows);
    w.N = win.N;
    w.M = win.M;
    return w;
}

QuasiTrig solution_from_subalgebra(const LieAlgebra& L, const CasimirData& cas,
                                   const WSubalgebra& w, const WindowSpace& win) {
    WConditions cond = check_w_conditions(L, win, w);
    if (!cond.transversal)
        throw UnsupportedAlgebra("W is not transversal to g[u]: no solution");
    if (!cond.subalgebra || !cond.lagrangian)
        throw UnsupportedAlgebra("W fails the subalgebra/Lagrangian conditions");

    const int d = L.dim;
    QuasiTrig r3 = standard_r3(L, cas);
    WSubalgebra w3 = subalgebra_from_solution(L, cas, r3, win);

    // polynomial window basis p_{a,k}
    std::vector<std::pair<int, int>> pk;
    std::vector<Vec> pvecs;
    for (int k = 0; k <= win.M; ++k)
        for (int a = 0; a < d; ++a) {
            Vec v(win.dim());
            v[win.first_index(k, a)] = Scalar(1);
            if (k == 0) v[win.second_index(a)] = Scalar(1);
            pk.emplace_back(a, k);
            pvecs.push_back(std::move(v));
        }

    // duals inside W3: solve Q(sum c_i w3_i, p_{b,m}) = delta
    Matrix gram = win.gram();
    Matrix A(pvecs.size(), w3.space.dim());
    for (std::size_t col = 0; col < w3.space.dim(); ++col) {
        Vec gw = mat_vec(gram, w3.space.basis_vector(col));
        for (std::size_t row = 0; row < pvecs.size(); ++row) A.at(row, col) = dot(pvecs[row], gw);
    }
    std::vector<Vec> units(pvecs.size(), Vec(pvecs.size()));
    for (std::size_t i = 0; i < pvecs.size(); ++i) units[i][i] = Scalar(1);
    std::vector<Vec> dual_coeffs = solve_multi(A, units);

    // decompose each dual over W + g[u]; the g[u] part gives the twist
    Matrix dec(win.dim(), w.space.dim() + pvecs.size());
    for (std::size_t c = 0; c < w.space.dim(); ++c)
        for (std::size_t r = 0; r < win.dim(); ++r) dec.at(r, c) = w.space.basis_vector(c)[r];
    for (std::size_t c = 0; c < pvecs.size(); ++c)
        for (std::size_t r = 0; r < win.dim(); ++r) dec.at(r, w.space.dim() + c) = pvecs[c][r];

    std::vector<Vec> duals;
    for (std::size_t i = 0; i < pk.size(); ++i) {
        Vec dv(win.dim());
        for (std::size_t c = 0; c < w3.space.dim(); ++c)
            dv = dv + (dual_coeffs[i][c] * w3.space.basis_vector(c));
        duals.push_back(std::move(dv));
    }
    std::vector<Vec> coords = solve_multi(dec, duals);

    QuasiTrig out = r3; // X = r3 + s
    QuasiTrig s;
    for (std::size_t i = 0; i < pk.size(); ++i) {
        auto [a, k] = pk[i];
        for (std::size_t c = 0; c < pvecs.size(); ++c) {
            const Scalar& y = coords[i][w.space.dim() + c];
            if (y.is_zero()) continue;
            auto [b, m] = pk[c];
            // phi(w3dual) = -q, q = sum y * p_{b,m}; s += phi ⊗ x_a v^k
            s.add(b, a, m, k, -y);
        }
    }
    // antisymmetry of the twist is forced by the Lagrangian property
    {
        QuasiTrig acc = s;
        for (const auto& [key, c] : s.p) acc.add(key[1], key[0], key[3], key[2], c);
        assert(acc.p.empty() && "twist is not antisymmetric");
        (void)acc;
    }
    for (const auto& [key, c] : s.p) out.add(key[0], key[1], key[2], key[3], c);
    return out;
}

WSubalgebra lift_i_prime_to_w(const LieAlgebra& L, const VertexData& v, const PairSpace& ps,
                              const Subspace& lagr, const WindowSpace& win) {
    ManinReport rep = verify_manin(L, v, ps, lagr);
    if (!rep.all())
        throw UnsupportedAlgebra("Lagrangian fails verification; refusing to lift");
    Subspace perp = order_model_perp(L, v, win);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < perp.dim(); ++i) rows.push_back(perp.basis_vector(i));
    for (std::size_t i = 0; i < lagr.dim(); ++i)
        rows.push_back(sigma_lift(L, v, win, ps, lagr.basis_vector(i)));
    WSubalgebra w;
    w.space = Subspace(win.dim(), rows);
    w.N = win.N;
    w.M = win.M;
    return w;
}

namespace {

using Poly1 = std::map<int, Scalar>;

Poly1 poly_mul(const Poly1& a, const Poly1& b) {
    Poly1 out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            Scalar v = ca * cb;
            if (v.is_zero()) continue;
            auto [it, fresh] = out.try_emplace(da + db, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

PolyAut aut_identity(int dim) {
    PolyAut m(dim, std::vector<Poly1>(dim));
    for (int i = 0; i < dim; ++i) m[i][i][0] = Scalar(1);
    return m;
}

PolyAut aut_compose(const PolyAut& f, const PolyAut& g) {
    // (f ∘ g)(x_j) = f(g(x_j))
    int dim = static_cast<int>(f.size());
    PolyAut out(dim, std::vector<Poly1>(dim));
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
            if (g[k][j].empty()) continue;
            for (int i = 0; i < dim; ++i) {
                if (f[i][k].empty()) continue;
                Poly1 prod = poly_mul(f[i][k], g[k][j]);
                for (const auto& [deg, c] : prod) {
                    auto [it, fresh] = out[i][j].try_emplace(deg, c);
                    if (!fresh) {
                        it->second += c;
                        if (it->second.is_zero()) out[i][j].erase(it);
                    }
                }
            }
        }
    return out;
}

} // namespace

PolyAut gauge_matrix(const LieAlgebra& L, const std::vector<GaugeStep>& steps) {
    PolyAut total = aut_identity(L.dim);
    for (const auto& step : steps) {
        PolyAut m(L.dim, std::vector<Poly1>(L.dim));
        if (std::holds_alternative<GaugeExp>(step)) {
            const auto& e = std::get<GaugeExp>(step);
            if (L.is_cartan_index(e.basis_index))
                throw UnsupportedAlgebra("gauge exponent must be a nilpotent root vector");
            if (e.power < 0) throw UnsupportedAlgebra("gauge exponent needs a nonnegative power");
            Vec arg = L.basis_vec(e.basis_index);
            for (int j = 0; j < L.dim; ++j) {
                Vec cur = L.basis_vec(j);
                Scalar fact(1);
                int t = 0;
                while (!is_zero_vec(cur)) {
                    if (t > 2 * L.dim) throw UnsupportedAlgebra("gauge exponent is not nilpotent");
                    for (int i = 0; i < L.dim; ++i)
                        if (!cur[i].is_zero()) {
                            Scalar c = cur[i] * fact;
                            auto [it, fresh] = m[i][j].try_emplace(e.power * t, c);
                            if (!fresh) {
                                it->second += c;
                                if (it->second.is_zero()) m[i][j].erase(it);
                            }
                        }
                    cur = L.bracket(arg, cur);
                    ++t;
                    fact *= e.coeff / Scalar(t);
                }
            }
        } else {
            const auto& tor = std::get<GaugeTorus>(step);
            if (static_cast<int>(tor.lambda.size()) != L.rank())
                throw UnsupportedAlgebra("torus factor needs one scale per simple root");
            for (const Scalar& lam : tor.lambda)
                if (lam.is_zero()) throw UnsupportedAlgebra("torus scales must be nonzero");
            for (int j = 0; j < L.dim; ++j) {
                if (L.is_cartan_index(j)) {
                    m[j][j][0] = Scalar(1);
                    continue;
                }
                Scalar mult(1);
                const Root& r = L.basis_root[j];
                for (int i = 0; i < L.rank(); ++i) {
                    for (int rep = 0; rep < r[i]; ++rep) mult *= tor.lambda[i];
                    for (int rep = 0; rep < -r[i]; ++rep) mult /= tor.lambda[i];
                }
                m[j][j][0] = mult;
            }
        }
        total = aut_compose(total, m);
    }
    return total;
}

PolyAut gauge_matrix_at_zero(const LieAlgebra& L, const PolyAut& sigma) {
    PolyAut out(L.dim, std::vector<Poly1>(L.dim));
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            auto it = sigma[i][j].find(0);
            if (it != sigma[i][j].end()) out[i][j][0] = it->second;
        }
    return out;
}

QuasiTrig apply_gauge(const LieAlgebra& L, const CasimirData& cas, const QuasiTrig& x,
                      const std::vector<GaugeStep>& steps) {
    PolyAut sig = gauge_matrix(L, steps);
    QuasiTrig y;
    // (sigma(u) ⊗ sigma(v)) p
    for (const auto& [key, c] : x.p) {
        for (int i = 0; i < L.dim; ++i) {
            if (sig[i][key[0]].empty()) continue;
            for (int j = 0; j < L.dim; ++j) {
                if (sig[j][key[1]].empty()) continue;
                for (const auto& [da, ca] : sig[i][key[0]])
                    for (const auto& [db, cb] : sig[j][key[1]])
                        y.add(i, j, key[2] + da, key[3] + db, c * ca * cb);
            }
        }
    }
    // v * [(sigma(u) ⊗ sigma(v)) Omega - Omega] / (u - v)
    QuasiTrig big;
    for (const auto& [key, c] : cas.omega)
        for (int i = 0; i < L.dim; ++i) {
            if (sig[i][key[0]].empty()) continue;
            for (int j = 0; j < L.dim; ++j) {
                if (sig[j][key[1]].empty()) continue;
                for (const auto& [da, ca] : sig[i][key[0]])
                    for (const auto& [db, cb] : sig[j][key[1]]) big.add(i, j, da, db, c * ca * cb);
            }
        }
    for (const auto& [key, c] : cas.omega) big.add(key[0], key[1], 0, 0, -c);
    // exact division by (u - v), grouped per tensor slot
    std::map<std::array<int, 2>, std::map<std::array<int, 2>, Scalar>> slots;
    for (const auto& [key, c] : big.p) slots[{key[0], key[1]}][{key[2], key[3]}] = c;
    for (auto& [ij, poly] : slots) {
        std::map<std::array<int, 2>, Scalar> quot;
        while (!poly.empty()) {
            // the map is u-major sorted, so the last key has top u-degree
            auto it = std::prev(poly.end());
            auto [deg, c] = *it;
            if (deg[0] == 0)
                throw ScalarError("gauge image of the Casimir not divisible by u - v");
            // quot += c u^{a-1} v^b ; poly -= c(u - v) u^{a-1} v^b
            quot[{deg[0] - 1, deg[1]}] += c;
            poly.erase(it);
            auto [jt, fresh] = poly.try_emplace({deg[0] - 1, deg[1] + 1}, c);
            if (!fresh) {
                jt->second += c;
                if (jt->second.is_zero()) poly.erase(jt);
            }
        }
        for (const auto& [deg, c] : quot) y.add(ij[0], ij[1], deg[0], deg[1] + 1, c); // times v
    }
    return y;
}

Subspace gauge_window_image(const LieAlgebra& L, const WindowSpace& win, const PolyAut& sigma,
                            const Subspace& w) {
    PolyAut sig0 = gauge_matrix_at_zero(L, sigma);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < w.dim(); ++r) {
        const Vec src = w.basis_vector(r);
        Vec out(win.dim());
        for (int deg = -win.N; deg <= win.M; ++deg)
            for (int b = 0; b < L.dim; ++b) {
                const Scalar& c = src[win.first_index(deg, b)];
                if (c.is_zero()) continue;
                for (int i = 0; i < L.dim; ++i)
                    for (const auto& [d2, c2] : sigma[i][b]) {
                        int nd = deg + d2;
                        if (nd > win.M) throw WindowError("gauge image escapes the window");
                        out[win.first_index(nd, i)] += c * c2;
                    }
            }
        for (int b = 0; b < L.dim; ++b) {
            const Scalar& c = src[win.second_index(b)];
            if (c.is_zero()) continue;
            for (int i = 0; i < L.dim; ++i) {
                auto it = sig0[i][b].find(0);
                if (it != sig0[i][b].end()) out[win.second_index(i)] += c * it->second;
            }
        }
        rows.push_back(std::move(out));
    }
    return Subspace(win.dim(), rows);
}

} // namespace cybe
