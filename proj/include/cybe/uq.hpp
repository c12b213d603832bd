#pragma once

#include "cybe/root_system.hpp"

#include <map>
#include <vector>

namespace cybe {

/// Integer-coefficient Laurent polynomial in q.
struct QPoly {
    std::map<int, mpz_class> c; // exponent -> coefficient, no zeros

    static QPoly zero() { return {}; }
    static QPoly one() { return power(0); }
    static QPoly power(int e, const mpz_class& k = 1);
    bool is_zero() const { return c.empty(); }
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    friend bool operator<(const QPoly& a, const QPoly& b) { return a.c < b.c; }
};

/// Reduced ratio of two Laurent polynomials; denominator sign-normalized.
class QScalar {
  public:
    QScalar() : num_(), den_(QPoly::one()) {}
    QScalar(long v) : num_(QPoly::power(0, v)), den_(QPoly::one()) { normalize(); }
    QScalar(QPoly n, QPoly d);
    static QScalar q_power(int e) { return QScalar(QPoly::power(e), QPoly::one()); }

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool denominator_trivial() const;

    QScalar operator-() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const QScalar& a, const QScalar& b);

    /// Value at q = 1; requires den(1) != 0.
    Rational at_one() const;
    std::string str() const;

  private:
    void normalize();
    QPoly num_, den_;
};

/// Truncated power series in hbar (mod hbar^T).
struct HSeries {
    static constexpr int T = 3;
    std::array<Rational, T> c{};

    static HSeries one();
    static HSeries hbar();
    bool is_zero() const;
    friend HSeries operator+(const HSeries& a, const HSeries& b);
    friend HSeries operator-(const HSeries& a, const HSeries& b);
    friend HSeries operator*(const HSeries& a, const HSeries& b);
    /// (1 + hbar)^e for any integer e.
    static HSeries q_power(int e);
};

/// Converts after the caller has cleared denominators (den must be a unit at
/// q = 1).
HSeries to_hseries(const QScalar& s);

// ---- free algebra over the generator alphabet ----

enum GenKind : int { GK_KP = 0, GK_KM = 1, GK_EP = 2, GK_EM = 3, GK_EA = 4, GK_H = 5 };

// idx semantics: for GK_KP/GK_KM, idx in 0..l-1 names k_{a_{idx+1}} and
// idx == l names k_{delta-theta}; for GK_EP/GK_EM/GK_H, idx in 0..l-1;
// GK_EA has idx 0.
inline int gen_id(GenKind k, int idx) { return k * 256 + idx; }
inline GenKind gen_kind(int id) { return static_cast<GenKind>(id / 256); }
inline int gen_idx(int id) { return id % 256; }
std::string gen_name(int id, const RootSystem& rs);

using Word = std::vector<int>;
using NCPoly = std::map<Word, QScalar>;
using NCPoly2 = std::map<std::pair<Word, Word>, QScalar>;
using NCPoly3 = std::map<std::array<Word, 3>, QScalar>;

NCPoly nc_mono(Word w, QScalar c = QScalar(1));
void nc_add(NCPoly& p, const Word& w, const QScalar& c);
NCPoly operator+(const NCPoly& a, const NCPoly& b);
NCPoly operator-(const NCPoly& a, const NCPoly& b);
NCPoly operator*(const NCPoly& a, const NCPoly& b);
NCPoly operator*(const QScalar& c, const NCPoly& a);

struct Relation {
    std::string tag;
    NCPoly poly; // relation poly == 0
};

struct Presentation {
    RootSystem rs;
    bool quantum = false;
    std::vector<int> generators;
    std::vector<Relation> relations;
    std::map<int, NCPoly2> coproduct;
    std::map<int, NCPoly> antipode;
    std::map<int, QScalar> counit;
};

/// Serre exponent n_ij = 1 - <a_j, a_i^vee> and affine exponent
/// n_i0 = 1 + 2(a_i, theta)/(a_i, a_i).
int serre_exponent(const RootSystem& rs, int i, int j);
int affine_exponent(const RootSystem& rs, int i);

enum class PresentationMode { Classical, Quantum };

Presentation generate_presentation(const RootSystem& rs, PresentationMode mode);

/// Normal form modulo the k-commutation fragment only: inverse pairs cancel,
/// k-symbols move right past e-symbols (picking up q-powers) and sort among
/// themselves.  Serre-type relations are never applied.
NCPoly rewrite_normal_form(const NCPoly& p, const Presentation& pres);

struct HopfReport {
    struct Row {
        int generator;
        bool coassociative, counit_left, counit_right, antipode_left, antipode_right;
        bool all() const {
            return coassociative && counit_left && counit_right && antipode_left && antipode_right;
        }
    };
    std::vector<Row> rows;
    bool all() const;
};

HopfReport check_hopf_on_generators(const Presentation& pres);

/// counit applied to every relation must give 0 identically.
bool counit_kills_relations(const Presentation& pres);

struct LimitReport {
    struct Row {
        std::string quantum_tag;
        std::string classical_tag; // empty when definitional
        bool pass;
    };
    std::vector<Row> rows;
    bool all() const;
};

/// First-order classical limit: k = 1 + hbar h, q = 1 + hbar; each quantum
/// relation must reduce to its classical counterpart (Serre-type relations
/// are compared at q = 1 on the q-commutator expansion).
LimitReport classical_limit_check(const RootSystem& rs);

} // namespace cybe
