#include "cybe/uq.hpp"

#include <algorithm>
#include <cassert>

namespace cybe {

// ---------- QPoly ----------

QPoly QPoly::power(int e, const mpz_class& k) {
    QPoly p;
    if (k != 0) p.c[e] = k;
    return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly out = a;
    for (const auto& [e, k] : b.c) {
        auto [it, fresh] = out.c.try_emplace(e, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) out.c.erase(it);
        }
    }
    return out;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly nb;
    for (const auto& [e, k] : b.c) nb.c[e] = -k;
    return a + nb;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ka] : a.c)
        for (const auto& [eb, kb] : b.c) {
            auto [it, fresh] = out.c.try_emplace(ea + eb, ka * kb);
            if (!fresh) {
                it->second += ka * kb;
                if (it->second == 0) out.c.erase(it);
            }
        }
    return out;
}

namespace {

// dense ordinary-polynomial helpers over Q for gcd/exact division
using Dense = std::vector<Rational>;

Dense to_dense(const QPoly& p) {
    if (p.is_zero()) return {};
    int lo = p.c.begin()->first;
    assert(lo >= 0);
    int hi = p.c.rbegin()->first;
    Dense d(hi + 1);
    for (const auto& [e, k] : p.c) d[e] = Rational(k);
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense divmod(Dense a, const Dense& b, Dense& quot) {
    quot.assign(a.size(), Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.size() >= b.size() && !a.empty() && a.back() == 0) trim(a);
    }
    trim(quot);
    return a; // remainder
}

Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense q;
        Dense r = divmod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
    return a;
}

QPoly from_dense_primitive(const Dense& d) {
    // scale to integer coefficients with content 1 and positive lead
    QPoly p;
    if (d.empty()) return p;
    mpz_class lcm = 1;
    for (const auto& x : d)
        if (x != 0) {
            mpz_class den = x.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
    mpz_class content = 0;
    std::vector<mpz_class> ints(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rational r = d[i] * Rational(lcm);
        assert(r.get_den() == 1);
        ints[i] = r.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (content == 0) return p;
    if (ints.back() < 0) content = -content;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (ints[i] != 0) p.c[static_cast<int>(i)] = ints[i] / content;
    return p;
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    Dense q;
    Dense r = divmod(to_dense(a), to_dense(b), q);
    assert(r.empty());
    QPoly out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        assert(q[i].get_den() == 1);
        out.c[static_cast<int>(i)] = q[i].get_num();
    }
    return out;
}

} // namespace

QScalar::QScalar(QPoly n, QPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ScalarError("zero denominator in q-scalar");
    normalize();
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    int shift = std::min(num_.c.begin()->first, den_.c.begin()->first);
    if (shift != 0) {
        num_ = num_ * QPoly::power(-shift);
        den_ = den_ * QPoly::power(-shift);
    }
    Dense g = poly_gcd(to_dense(num_), to_dense(den_));
    if (g.size() > 1) {
        QPoly gz = from_dense_primitive(g);
        num_ = exact_div(num_, gz);
        den_ = exact_div(den_, gz);
    }
    // reduce shared integer content, normalize the sign of den's low term
    mpz_class cn = 0, cd = 0;
    for (const auto& [e, k] : num_.c) mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), k.get_mpz_t());
    for (const auto& [e, k] : den_.c) mpz_gcd(cd.get_mpz_t(), cd.get_mpz_t(), k.get_mpz_t());
    mpz_class g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.c.begin()->second < 0) g2 = -g2;
    if (g2 != 1 && g2 != 0) {
        for (auto& [e, k] : num_.c) k /= g2;
        for (auto& [e, k] : den_.c) k /= g2;
    }
}

bool QScalar::denominator_trivial() const {
    return den_.c.size() == 1 && den_.c.begin()->first == 0 && den_.c.begin()->second == 1;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    QPoly n;
    for (const auto& [e, k] : r.num_.c) n.c[e] = -k;
    r.num_ = std::move(n);
    return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
QScalar operator*(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}
QScalar operator/(const QScalar& a, const QScalar& b) {
    if (b.is_zero()) throw ScalarError("division by zero q-scalar");
    return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const QScalar& a, const QScalar& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

Rational QScalar::at_one() const {
    Rational n, d;
    for (const auto& [e, k] : num_.c) n += Rational(k);
    for (const auto& [e, k] : den_.c) d += Rational(k);
    if (d == 0) throw ScalarError("q-scalar has a pole at q = 1");
    return n / d;
}

std::string QScalar::str() const {
    auto poly_str = [](const QPoly& p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
            const auto& [e, k] = *it;
            if (!s.empty() && k > 0) s += "+";
            if (k == -1 && e != 0)
                s += "-";
            else if (k != 1 || e == 0)
                s += k.get_str();
            if (e != 0) {
                if (k != 1 && k != -1) s += "*";
                s += "q";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    };
    if (denominator_trivial()) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

// ---------- HSeries ----------

HSeries HSeries::one() {
    HSeries h;
    h.c[0] = 1;
    return h;
}

HSeries HSeries::hbar() {
    HSeries h;
    h.c[1] = 1;
    return h;
}

bool HSeries::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

HSeries operator+(const HSeries& a, const HSeries& b) {
    HSeries r;
    for (int i = 0; i < HSeries::T; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

HSeries operator-(const HSeries& a, const HSeries& b) {
    HSeries r;
    for (int i = 0; i < HSeries::T; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
    HSeries r;
    for (int i = 0; i < HSeries::T; ++i)
        for (int j = 0; i + j < HSeries::T; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

HSeries HSeries::q_power(int e) {
    HSeries r;
    r.c[0] = 1;
    r.c[1] = e;
    r.c[2] = Rational(e) * Rational(e - 1) / 2;
    return r;
}

HSeries to_hseries(const QScalar& s) {
    HSeries n, d;
    for (const auto& [e, k] : s.num().c) n = n + (HSeries::q_power(e) * HSeries{{{Rational(k), 0, 0}}});
    for (const auto& [e, k] : s.den().c) d = d + (HSeries::q_power(e) * HSeries{{{Rational(k), 0, 0}}});
    if (d.c[0] == 0) throw ScalarError("denominator not a unit at q = 1");
    // invert d = d0(1 + x) with x = d1/d0 hbar + d2/d0 hbar^2
    Rational x1 = d.c[1] / d.c[0], x2 = d.c[2] / d.c[0];
    HSeries inv;
    inv.c[0] = Rational(1) / d.c[0];
    inv.c[1] = -x1 / d.c[0];
    inv.c[2] = (x1 * x1 - x2) / d.c[0];
    return n * inv;
}

// ---------- free algebra ----------

std::string gen_name(int id, const RootSystem& rs) {
    GenKind k = gen_kind(id);
    int i = gen_idx(id);
    auto node = [&](int j) { return "a" + std::to_string(j + 1); };
    switch (k) {
    case GK_KP: return i == rs.rank ? "k[d-th]" : "k[" + node(i) + "]";
    case GK_KM: return i == rs.rank ? "k^-1[d-th]" : "k^-1[" + node(i) + "]";
    case GK_EP: return "e[+" + node(i) + "]";
    case GK_EM: return "e[-" + node(i) + "]";
    case GK_EA: return "e[d-th]";
    case GK_H: return "h[" + node(i) + "]";
    }
    return "?";
}

NCPoly nc_mono(Word w, QScalar c) {
    NCPoly p;
    if (!c.is_zero()) p[std::move(w)] = std::move(c);
    return p;
}

void nc_add(NCPoly& p, const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly out = a;
    for (const auto& [w, c] : b) nc_add(out, w, c);
    return out;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly out = a;
    for (const auto& [w, c] : b) nc_add(out, w, -c);
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            nc_add(out, w, ca * cb);
        }
    return out;
}

NCPoly operator*(const QScalar& c, const NCPoly& a) {
    NCPoly out;
    for (const auto& [w, x] : a) nc_add(out, w, c * x);
    return out;
}

// ---------- presentation ----------

int serre_exponent(const RootSystem& rs, int i, int j) {
    // 1 - <a_j, a_i^vee>
    Root aj(rs.rank, 0);
    aj[j] = 1;
    return 1 - rs.pairing(aj, i);
}

int affine_exponent(const RootSystem& rs, int i) { return 1 + rs.pairing(rs.theta, i); }

namespace {

Root gen_weight(const RootSystem& rs, int id) {
    Root w(rs.rank, 0);
    switch (gen_kind(id)) {
    case GK_EP: w[gen_idx(id)] = 1; break;
    case GK_EM: w[gen_idx(id)] = -1; break;
    case GK_EA:
        for (int m = 0; m < rs.rank; ++m) w[m] = -rs.theta[m];
        break;
    default: break;
    }
    return w;
}

/// Root paired by a k-symbol: a_i, or -theta for the affine k.
Root k_weight(const RootSystem& rs, int id) {
    Root w(rs.rank, 0);
    int i = gen_idx(id);
    if (i == rs.rank)
        for (int m = 0; m < rs.rank; ++m) w[m] = -rs.theta[m];
    else
        w[i] = 1;
    return w;
}

int int_ip(const RootSystem& rs, const Root& x, const Root& y) {
    Rational v = rs.ip(x, y);
    assert(v.get_den() == 1);
    return static_cast<int>(v.get_num().get_si());
}

struct Weighted {
    NCPoly poly;
    Root weight;
};

/// [x, y]_q = xy - q^{(wt x, wt y)} yx (plain commutator in classical mode).
Weighted bracket_q(const RootSystem& rs, const Weighted& x, const Weighted& y, bool quantum) {
    Weighted out;
    QScalar f = quantum ? QScalar::q_power(int_ip(rs, x.weight, y.weight)) : QScalar(1);
    out.poly = x.poly * y.poly - f * (y.poly * x.poly);
    out.weight = x.weight;
    for (int m = 0; m < rs.rank; ++m) out.weight[m] += y.weight[m];
    return out;
}

Weighted gen_mono(const RootSystem& rs, int id) {
    return {nc_mono({id}), gen_weight(rs, id)};
}

} // namespace

Presentation generate_presentation(const RootSystem& rs, PresentationMode mode) {
    Presentation P;
    P.rs = rs;
    P.quantum = mode == PresentationMode::Quantum;
    const int l = rs.rank;
    const bool sl2 = rs.type == 'A' && l == 1;
    auto ip_ij = [&](int i, int j) {
        Root a(l, 0), b(l, 0);
        a[i] = 1;
        b[j] = 1;
        return int_ip(rs, a, b);
    };
    auto ip_itheta = [&](int i) {
        Root a(l, 0);
        a[i] = 1;
        return int_ip(rs, a, rs.theta);
    };

    if (!P.quantum) {
        for (int i = 0; i < l; ++i) P.generators.push_back(gen_id(GK_H, i));
        for (int i = 0; i < l; ++i) {
            P.generators.push_back(gen_id(GK_EP, i));
            P.generators.push_back(gen_id(GK_EM, i));
        }
        P.generators.push_back(gen_id(GK_EA, 0));

        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                Weighted h1 = gen_mono(rs, gen_id(GK_H, i)), h2 = gen_mono(rs, gen_id(GK_H, j));
                P.relations.push_back({"cartan-commute(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")",
                                       bracket_q(rs, h1, h2, false).poly});
            }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                for (int s : {+1, -1}) {
                    Weighted h = gen_mono(rs, gen_id(GK_H, i));
                    Weighted e = gen_mono(rs, gen_id(s > 0 ? GK_EP : GK_EM, j));
                    NCPoly rel =
                        bracket_q(rs, h, e, false).poly - (QScalar(s * ip_ij(i, j)) * e.poly);
                    P.relations.push_back({"cartan-weight(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + "," +
                                               (s > 0 ? "+" : "-") + ")",
                                           std::move(rel)});
                }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                Weighted e = gen_mono(rs, gen_id(GK_EP, i));
                Weighted f = gen_mono(rs, gen_id(GK_EM, j));
                NCPoly rel = bracket_q(rs, e, f, false).poly;
                if (i == j) rel = rel - nc_mono({gen_id(GK_H, i)});
                P.relations.push_back({"ef-coroot(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")",
                                       std::move(rel)});
            }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j) continue;
                for (int s : {+1, -1}) {
                    GenKind g = s > 0 ? GK_EP : GK_EM;
                    Weighted cur = gen_mono(rs, gen_id(g, j));
                    int n = serre_exponent(rs, i, j);
                    for (int t = 0; t < n; ++t)
                        cur = bracket_q(rs, gen_mono(rs, gen_id(g, i)), cur, false);
                    P.relations.push_back({"serre(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + "," + (s > 0 ? "+" : "-") +
                                               ")",
                                           cur.poly});
                }
            }
        for (int i = 0; i < l; ++i) {
            Weighted h = gen_mono(rs, gen_id(GK_H, i));
            Weighted ea = gen_mono(rs, gen_id(GK_EA, 0));
            NCPoly rel = bracket_q(rs, h, ea, false).poly + (QScalar(ip_itheta(i)) * ea.poly);
            P.relations.push_back({"cartan-affine(" + std::to_string(i + 1) + ")", std::move(rel)});
        }
        for (int i = 0; i < l; ++i) {
            Weighted f = gen_mono(rs, gen_id(GK_EM, i));
            Weighted ea = gen_mono(rs, gen_id(GK_EA, 0));
            P.relations.push_back(
                {"lowering-affine(" + std::to_string(i + 1) + ")", bracket_q(rs, f, ea, false).poly});
        }
        for (int i = 0; i < l; ++i) {
            Weighted cur = gen_mono(rs, gen_id(GK_EA, 0));
            int n = affine_exponent(rs, i);
            for (int t = 0; t < n; ++t) cur = bracket_q(rs, gen_mono(rs, gen_id(GK_EP, i)), cur, false);
            P.relations.push_back({"serre-affine(" + std::to_string(i + 1) + ")", cur.poly});
        }
        for (int i = 0; i < l; ++i) {
            if (sl2 || ip_itheta(i) == 0) continue;
            Weighted cur = bracket_q(rs, gen_mono(rs, gen_id(GK_EP, i)),
                                     gen_mono(rs, gen_id(GK_EA, 0)), false);
            cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), false);
            P.relations.push_back({"affine-double(" + std::to_string(i + 1) + ")", cur.poly});
        }
        if (sl2) {
            Weighted cur = bracket_q(rs, gen_mono(rs, gen_id(GK_EP, 0)),
                                     gen_mono(rs, gen_id(GK_EA, 0)), false);
            cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), false);
            cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), false);
            P.relations.push_back({"affine-quadruple", cur.poly});
        }
        return P;
    }

    // quantum generators
    for (int i = 0; i <= l; ++i) {
        P.generators.push_back(gen_id(GK_KP, i));
        P.generators.push_back(gen_id(GK_KM, i));
    }
    for (int i = 0; i < l; ++i) {
        P.generators.push_back(gen_id(GK_EP, i));
        P.generators.push_back(gen_id(GK_EM, i));
    }
    P.generators.push_back(gen_id(GK_EA, 0));

    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            for (int s1 : {+1, -1})
                for (int s2 : {+1, -1}) {
                    int a = gen_id(s1 > 0 ? GK_KP : GK_KM, i);
                    int b = gen_id(s2 > 0 ? GK_KP : GK_KM, j);
                    NCPoly rel = nc_mono({a, b}) - nc_mono({b, a});
                    P.relations.push_back({"k-commute(" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + "," + (s1 > 0 ? "+" : "-") +
                                               (s2 > 0 ? "+" : "-") + ")",
                                           std::move(rel)});
                }
    for (int i = 0; i <= l; ++i) {
        std::string nm = i == l ? "d-th" : std::to_string(i + 1);
        NCPoly r1 = nc_mono({gen_id(GK_KP, i), gen_id(GK_KM, i)}) - nc_mono({});
        NCPoly r2 = nc_mono({gen_id(GK_KM, i), gen_id(GK_KP, i)}) - nc_mono({});
        P.relations.push_back({"k-inverse(" + nm + ",+)", std::move(r1)});
        P.relations.push_back({"k-inverse(" + nm + ",-)", std::move(r2)});
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int s : {+1, -1}) {
                int e = gen_id(s > 0 ? GK_EP : GK_EM, j);
                NCPoly rel = nc_mono({gen_id(GK_KP, i), e, gen_id(GK_KM, i)}) -
                             QScalar::q_power(s * ip_ij(i, j)) * nc_mono({e});
                P.relations.push_back({"k-weight(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + "," + (s > 0 ? "+" : "-") + ")",
                                       std::move(rel)});
            }
    {
        QScalar qq = QScalar::q_power(1) - QScalar::q_power(-1);
        for (int i = 0; i < l; ++i) {
            NCPoly rel = nc_mono({gen_id(GK_EP, i), gen_id(GK_EM, i)}) -
                         nc_mono({gen_id(GK_EM, i), gen_id(GK_EP, i)});
            rel = rel - (QScalar(1) / qq) * nc_mono({gen_id(GK_KP, i)});
            rel = rel + (QScalar(1) / qq) * nc_mono({gen_id(GK_KM, i)});
            P.relations.push_back({"ef-k(" + std::to_string(i + 1) + ")", std::move(rel)});
        }
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            for (int s : {+1, -1}) {
                GenKind g = s > 0 ? GK_EP : GK_EM;
                Weighted cur = gen_mono(rs, gen_id(g, j));
                int n = serre_exponent(rs, i, j);
                for (int t = 0; t < n; ++t) cur = bracket_q(rs, gen_mono(rs, gen_id(g, i)), cur, true);
                P.relations.push_back({"q-serre(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + "," + (s > 0 ? "+" : "-") + ")",
                                       cur.poly});
            }
        }
    for (int i = 0; i < l; ++i) {
        NCPoly rel = nc_mono({gen_id(GK_KP, i), gen_id(GK_EA, 0), gen_id(GK_KM, i)}) -
                     QScalar::q_power(-ip_itheta(i)) * nc_mono({gen_id(GK_EA, 0)});
        P.relations.push_back({"k-affine(" + std::to_string(i + 1) + ")", std::move(rel)});
    }
    for (int i = 0; i < l; ++i) {
        NCPoly rel = nc_mono({gen_id(GK_EM, i), gen_id(GK_EA, 0)}) -
                     nc_mono({gen_id(GK_EA, 0), gen_id(GK_EM, i)});
        P.relations.push_back({"lowering-affine(" + std::to_string(i + 1) + ")", std::move(rel)});
    }
    for (int i = 0; i < l; ++i) {
        Weighted cur = gen_mono(rs, gen_id(GK_EA, 0));
        int n = affine_exponent(rs, i);
        for (int t = 0; t < n; ++t) cur = bracket_q(rs, gen_mono(rs, gen_id(GK_EP, i)), cur, true);
        P.relations.push_back({"q-serre-affine(" + std::to_string(i + 1) + ")", cur.poly});
    }
    for (int i = 0; i < l; ++i) {
        if (sl2 || ip_itheta(i) == 0) continue;
        Weighted cur =
            bracket_q(rs, gen_mono(rs, gen_id(GK_EP, i)), gen_mono(rs, gen_id(GK_EA, 0)), true);
        cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), true);
        P.relations.push_back({"affine-double(" + std::to_string(i + 1) + ")", cur.poly});
    }
    if (sl2) {
        Weighted cur =
            bracket_q(rs, gen_mono(rs, gen_id(GK_EP, 0)), gen_mono(rs, gen_id(GK_EA, 0)), true);
        cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), true);
        cur = bracket_q(rs, cur, gen_mono(rs, gen_id(GK_EA, 0)), true);
        P.relations.push_back({"affine-quadruple", cur.poly});
    }
    {
        // k[d-th] = prod k[a_i]^{-n_i}
        Word w{gen_id(GK_KP, l)};
        Word rhs;
        for (int i = 0; i < l; ++i)
            for (int t = 0; t < rs.marks[i]; ++t) rhs.push_back(gen_id(GK_KM, i));
        NCPoly rel = nc_mono(w) - nc_mono(rhs);
        P.relations.push_back({"k-affine-product", std::move(rel)});
    }

    // Hopf structure on generators
    auto set_k = [&](int i) {
        Word kp{gen_id(GK_KP, i)}, km{gen_id(GK_KM, i)};
        P.coproduct[gen_id(GK_KP, i)][{kp, kp}] = QScalar(1);
        P.coproduct[gen_id(GK_KM, i)][{km, km}] = QScalar(1);
        P.antipode[gen_id(GK_KP, i)] = nc_mono(km);
        P.antipode[gen_id(GK_KM, i)] = nc_mono(kp);
        P.counit[gen_id(GK_KP, i)] = QScalar(1);
        P.counit[gen_id(GK_KM, i)] = QScalar(1);
    };
    for (int i = 0; i <= l; ++i) set_k(i);
    for (int i = 0; i < l; ++i) {
        int ep = gen_id(GK_EP, i), em = gen_id(GK_EM, i);
        P.coproduct[ep][{Word{ep}, Word{}}] = QScalar(1);
        P.coproduct[ep][{Word{gen_id(GK_KM, i)}, Word{ep}}] = QScalar(1);
        P.coproduct[em][{Word{em}, Word{gen_id(GK_KP, i)}}] = QScalar(1);
        P.coproduct[em][{Word{}, Word{em}}] = QScalar(1);
        P.antipode[ep] = QScalar(-1) * nc_mono(Word{gen_id(GK_KP, i), ep});
        P.antipode[em] = QScalar(-1) * nc_mono(Word{em, gen_id(GK_KM, i)});
        P.counit[ep] = QScalar(0);
        P.counit[em] = QScalar(0);
    }
    {
        int ea = gen_id(GK_EA, 0);
        P.coproduct[ea][{Word{ea}, Word{}}] = QScalar(1);
        P.coproduct[ea][{Word{gen_id(GK_KM, l)}, Word{ea}}] = QScalar(1);
        P.antipode[ea] = QScalar(-1) * nc_mono(Word{gen_id(GK_KP, l), ea});
        P.counit[ea] = QScalar(0);
    }
    return P;
}

// ---------- rewriting ----------

namespace {

bool is_k(int id) { return gen_kind(id) == GK_KP || gen_kind(id) == GK_KM; }
bool is_e(int id) {
    GenKind g = gen_kind(id);
    return g == GK_EP || g == GK_EM || g == GK_EA || g == GK_H;
}

struct Measure {
    long inversions = 0; // (k, e) pairs out of order
    long length = 0;
    long disorder = 0; // unordered adjacent k-pairs
    friend bool operator<(const Measure& a, const Measure& b) {
        if (a.inversions != b.inversions) return a.inversions < b.inversions;
        if (a.length != b.length) return a.length < b.length;
        return a.disorder < b.disorder;
    }
};

Measure measure_of(const Word& w) {
    Measure m;
    m.length = static_cast<long>(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (is_k(w[i]))
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (is_e(w[j])) ++m.inversions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (is_k(w[i]) && is_k(w[i + 1]) && w[i] > w[i + 1]) ++m.disorder;
    return m;
}

/// One rewrite step; returns false when the word is in normal form.
bool step(const RootSystem& rs, const Word& w, QScalar& coeff, Word& out) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        if (is_k(a) && is_k(b)) {
            if (gen_idx(a) == gen_idx(b) && gen_kind(a) != gen_kind(b)) {
                out = w;
                out.erase(out.begin() + i, out.begin() + i + 2);
                return true;
            }
            if (a > b) {
                out = w;
                std::swap(out[i], out[i + 1]);
                return true;
            }
        }
        if (is_k(a) && is_e(b)) {
            int sign = gen_kind(a) == GK_KP ? 1 : -1;
            int e = int_ip(rs, k_weight(rs, a), gen_weight(rs, b));
            coeff = coeff * QScalar::q_power(sign * e);
            out = w;
            std::swap(out[i], out[i + 1]);
            return true;
        }
    }
    return false;
}

} // namespace

NCPoly rewrite_normal_form(const NCPoly& p, const Presentation& pres) {
    NCPoly cur = p;
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        if (++guard > 100000) throw ScalarError("rewriting did not terminate");
        NCPoly next;
        for (const auto& [w, c] : cur) {
            QScalar coeff = c;
            Word out;
            if (step(pres.rs, w, coeff, out)) {
                assert(measure_of(out) < measure_of(w));
                nc_add(next, out, coeff);
                changed = true;
            } else {
                nc_add(next, w, c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------- Hopf checks ----------

namespace {

QScalar counit_of_word(const Presentation& P, const Word& w) {
    QScalar c(1);
    for (int id : w) {
        auto it = P.counit.find(id);
        assert(it != P.counit.end());
        c = c * it->second;
        if (c.is_zero()) break;
    }
    return c;
}

NCPoly2 nc2_mul(const NCPoly2& a, const NCPoly2& b) {
    NCPoly2 out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w1 = wa.first;
            w1.insert(w1.end(), wb.first.begin(), wb.first.end());
            Word w2 = wa.second;
            w2.insert(w2.end(), wb.second.begin(), wb.second.end());
            QScalar c = ca * cb;
            if (c.is_zero()) continue;
            auto [it, fresh] = out.try_emplace({w1, w2}, c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

NCPoly2 coproduct_of_word(const Presentation& P, const Word& w) {
    NCPoly2 out;
    out[{Word{}, Word{}}] = QScalar(1);
    for (int id : w) {
        auto it = P.coproduct.find(id);
        assert(it != P.coproduct.end());
        out = nc2_mul(out, it->second);
    }
    return out;
}

NCPoly antipode_of_word(const Presentation& P, const Word& w) {
    NCPoly out = nc_mono({});
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto jt = P.antipode.find(*it);
        assert(jt != P.antipode.end());
        out = out * jt->second;
    }
    return out;
}

void nc3_add(NCPoly3& p, std::array<Word, 3> w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(std::move(w), c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

} // namespace

HopfReport check_hopf_on_generators(const Presentation& pres) {
    HopfReport rep;
    for (int g : pres.generators) {
        HopfReport::Row row{};
        row.generator = g;
        const NCPoly2& dg = pres.coproduct.at(g);
        // coassociativity in the free algebra
        NCPoly3 lhs, rhs;
        for (const auto& [w, c] : dg) {
            for (const auto& [w1, c1] : coproduct_of_word(pres, w.first))
                nc3_add(lhs, {w1.first, w1.second, w.second}, c * c1);
            for (const auto& [w2, c2] : coproduct_of_word(pres, w.second))
                nc3_add(rhs, {w.first, w2.first, w2.second}, c * c2);
        }
        row.coassociative = lhs == rhs;
        // counit axioms
        NCPoly left, right;
        for (const auto& [w, c] : dg) {
            nc_add(left, w.second, c * counit_of_word(pres, w.first));
            nc_add(right, w.first, c * counit_of_word(pres, w.second));
        }
        row.counit_left = left == nc_mono({g});
        row.counit_right = right == nc_mono({g});
        // antipode axioms, after k-normalization
        NCPoly anti_l, anti_r;
        for (const auto& [w, c] : dg) {
            anti_l = anti_l + (c * (antipode_of_word(pres, w.first) * nc_mono(w.second)));
            anti_r = anti_r + (c * (nc_mono(w.first) * antipode_of_word(pres, w.second)));
        }
        NCPoly target = counit_of_word(pres, {g}) * nc_mono({});
        row.antipode_left = rewrite_normal_form(anti_l, pres) == target;
        row.antipode_right = rewrite_normal_form(anti_r, pres) == target;
        rep.rows.push_back(row);
    }
    return rep;
}

bool HopfReport::all() const {
    for (const auto& r : rows)
        if (!r.all()) return false;
    return !rows.empty();
}

bool counit_kills_relations(const Presentation& pres) {
    for (const auto& rel : pres.relations) {
        QScalar total(0);
        for (const auto& [w, c] : rel.poly) total = total + c * counit_of_word(pres, w);
        if (!total.is_zero()) return false;
    }
    return true;
}

// ---------- classical limit ----------

namespace {

using HWordPoly = std::map<Word, HSeries>;

HWordPoly hw_mul(const HWordPoly& a, const HWordPoly& b) {
    HWordPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            HSeries c = ca * cb;
            if (c.is_zero()) continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, fresh] = out.try_emplace(std::move(w), c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

/// Substitution k -> 1 + hbar h (and inverse series), q -> 1 + hbar.
HWordPoly substitute(const RootSystem& rs, const NCPoly& p) {
    (void)rs;
    HWordPoly out;
    for (const auto& [w, c] : p) {
        HWordPoly term;
        term[{}] = to_hseries(c);
        for (int id : w) {
            HWordPoly g;
            switch (gen_kind(id)) {
            case GK_KP: {
                int h = gen_id(GK_H, gen_idx(id));
                g[{}] = HSeries::one();
                g[{h}] = HSeries::hbar();
                break;
            }
            case GK_KM: {
                int h = gen_id(GK_H, gen_idx(id));
                g[{}] = HSeries::one();
                HSeries neg;
                neg.c[1] = -1;
                g[{h}] = neg;
                HSeries sq;
                sq.c[2] = 1;
                g[{h, h}] = sq;
                break;
            }
            default:
                g[{id}] = HSeries::one();
            }
            term = hw_mul(term, g);
        }
        for (const auto& [w2, c2] : term) {
            auto [it, fresh] = out.try_emplace(w2, c2);
            if (!fresh) {
                it->second = it->second + c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

NCPoly clear_denominators(NCPoly p) {
    for (int guard = 0; guard < 16; ++guard) {
        const QPoly* bad = nullptr;
        for (const auto& [w, c] : p)
            if (!c.denominator_trivial()) {
                bad = &c.den();
                break;
            }
        if (!bad) return p;
        p = QScalar(*bad, QPoly::one()) * p;
    }
    throw ScalarError("could not clear denominators");
}

using RatPoly = std::map<Word, Rational>;

RatPoly order_part(const HWordPoly& p, int t) {
    RatPoly out;
    for (const auto& [w, c] : p)
        if (c.c[t] != 0) out[w] = c.c[t];
    return out;
}

bool proportional(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    if (a.size() != b.size()) return false;
    Rational ratio = a.begin()->second / b.begin()->second;
    auto it = a.begin();
    auto jt = b.begin();
    for (; it != a.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != ratio * jt->second) return false;
    }
    return true;
}

RatPoly at_one_poly(const NCPoly& p) {
    RatPoly out;
    for (const auto& [w, c] : p) {
        Rational v = c.at_one();
        if (v != 0) out[w] = v;
    }
    return out;
}

const NCPoly* find_relation(const Presentation& P, const std::string& tag) {
    for (const auto& r : P.relations)
        if (r.tag == tag) return &r.poly;
    return nullptr;
}

} // namespace

bool LimitReport::all() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return !rows.empty();
}

LimitReport classical_limit_check(const RootSystem& rs) {
    Presentation Q = generate_presentation(rs, PresentationMode::Quantum);
    Presentation C = generate_presentation(rs, PresentationMode::Classical);
    LimitReport rep;

    auto expect_order = [&](const std::string& qtag, const std::string& ctag, int order) {
        const NCPoly* qr = find_relation(Q, qtag);
        const NCPoly* cr = find_relation(C, ctag);
        if (!qr || !cr) return;
        HWordPoly h = substitute(rs, clear_denominators(*qr));
        bool pass = true;
        for (int t = 0; t < order; ++t)
            if (!order_part(h, t).empty()) pass = false;
        RatPoly got = order_part(h, order);
        RatPoly want;
        for (const auto& [w, c] : *cr) {
            Rational v = c.at_one();
            if (v != 0) want[w] = v;
        }
        pass = pass && proportional(got, want);
        rep.rows.push_back({qtag, ctag, pass});
    };
    auto expect_zero = [&](const std::string& qtag) {
        const NCPoly* qr = find_relation(Q, qtag);
        if (!qr) return;
        HWordPoly h = substitute(rs, clear_denominators(*qr));
        bool pass = true;
        for (int t = 0; t < HSeries::T; ++t)
            if (!order_part(h, t).empty()) pass = false;
        rep.rows.push_back({qtag, "", pass});
    };
    auto expect_q_one = [&](const std::string& qtag, const std::string& ctag) {
        const NCPoly* qr = find_relation(Q, qtag);
        const NCPoly* cr = find_relation(C, ctag);
        if (!qr || !cr) return;
        bool pass = proportional(at_one_poly(*qr), at_one_poly(*cr));
        rep.rows.push_back({qtag, ctag + " (q=1)", pass});
    };

    const int l = rs.rank;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            expect_order("k-commute(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ",++)",
                         "cartan-commute(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                         2);
    for (int i = 0; i <= l; ++i) {
        std::string nm = i == l ? "d-th" : std::to_string(i + 1);
        expect_zero("k-inverse(" + nm + ",+)");
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (const char* s : {"+", "-"})
                expect_order("k-weight(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                 s + ")",
                             "cartan-weight(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "," + s + ")",
                             1);
    for (int i = 0; i < l; ++i)
        expect_order("ef-k(" + std::to_string(i + 1) + ")",
                     "ef-coroot(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")", 1);
    for (int i = 0; i < l; ++i)
        expect_order("k-affine(" + std::to_string(i + 1) + ")",
                     "cartan-affine(" + std::to_string(i + 1) + ")", 1);
    for (int i = 0; i < l; ++i)
        expect_order("lowering-affine(" + std::to_string(i + 1) + ")",
                     "lowering-affine(" + std::to_string(i + 1) + ")", 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            for (const char* s : {"+", "-"})
                expect_q_one("q-serre(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                 s + ")",
                             "serre(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + s +
                                 ")");
        }
    for (int i = 0; i < l; ++i)
        expect_q_one("q-serre-affine(" + std::to_string(i + 1) + ")",
                     "serre-affine(" + std::to_string(i + 1) + ")");
    for (int i = 0; i < l; ++i)
        expect_q_one("affine-double(" + std::to_string(i + 1) + ")",
                     "affine-double(" + std::to_string(i + 1) + ")");
    expect_q_one("affine-quadruple", "affine-quadruple");
    return rep;
}

} // namespace cybe
