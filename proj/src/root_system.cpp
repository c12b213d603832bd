#include "cybe/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace cybe {

namespace {

// Cartan matrix and squared lengths per type.  Conventions: chains are
// numbered along the diagram; B starts at the short end.
void type_data(char type, int n, std::vector<std::vector<int>>& a, std::vector<Rational>& len) {
    auto chain = [&](int size) {
        a.assign(size, std::vector<int>(size, 0));
        for (int i = 0; i < size; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < size; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    };
    switch (type) {
    case 'A':
        if (n < 1) throw UnsupportedAlgebra("A requires rank >= 1");
        chain(n);
        len.assign(n, Rational(2));
        return;
    case 'B':
        if (n < 2) throw UnsupportedAlgebra("B requires rank >= 2");
        chain(n);
        a[1][0] = -2; // alpha_1 short
        len.assign(n, Rational(2));
        len[0] = Rational(1);
        return;
    case 'C':
        if (n < 2) throw UnsupportedAlgebra("C requires rank >= 2");
        chain(n);
        a[n - 2][n - 1] = -1;
        a[n - 1][n - 2] = -2;
        len.assign(n, Rational(2));
        len[n - 1] = Rational(4);
        return;
    case 'D':
        if (n < 3) throw UnsupportedAlgebra("D requires rank >= 3");
        chain(n);
        if (n >= 3) {
            a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
            a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
        }
        len.assign(n, Rational(2));
        return;
    case 'G':
        if (n != 2) throw UnsupportedAlgebra("G requires rank 2");
        a = {{2, -1}, {-3, 2}};
        len = {Rational(2), Rational(6)};
        return;
    case 'F':
        if (n != 4) throw UnsupportedAlgebra("F requires rank 4");
        chain(4);
        a[1][2] = -2; // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[2][1] = -1;
        len = {Rational(4), Rational(4), Rational(2), Rational(2)};
        return;
    case 'E': {
        if (n < 6 || n > 8) throw UnsupportedAlgebra("E requires rank 6, 7 or 8");
        // chain a1..a_{n-1}, node n attached to a3 (Bourbaki numbering with
        // the branch node relabelled last)
        chain(n);
        a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
        a[n - 1][2] = a[2][n - 1] = -1;
        len.assign(n, Rational(2));
        return;
    }
    default:
        throw UnsupportedAlgebra(std::string("unknown type '") + type + "'");
    }
}

} // namespace

Rational RootSystem::ip(const Root& x, const Root& y) const {
    Rational s;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (y[j] == 0) continue;
            // (ai, aj) = a(i,j) * (aj,aj)/2
            s += Rational(cartan[i][j]) * length_sq[j] / 2 * x[i] * y[j];
        }
    }
    return s;
}

int RootSystem::pairing(const Root& x, int j) const {
    int s = 0;
    for (int i = 0; i < rank; ++i) s += x[i] * cartan[i][j];
    return s;
}

bool RootSystem::is_root(const Root& x) const {
    return std::find(roots.begin(), roots.end(), x) != roots.end();
}

int RootSystem::height(const Root& x) const {
    int h = 0;
    for (int c : x) h += c;
    return h;
}

Root RootSystem::node_root(int node) const {
    if (node == 0) {
        Root r = theta;
        for (int& c : r) c = -c;
        return r;
    }
    Root r(rank, 0);
    r[node - 1] = 1;
    return r;
}

Rational RootSystem::node_ip(int n1, int n2) const { return ip(node_root(n1), node_root(n2)); }

RootSystem build_root_system(char type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    type_data(type, rank, rs.cartan, rs.length_sq);

    // symmetry check of the induced bilinear form
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            assert(Rational(rs.cartan[i][j]) * rs.length_sq[j] ==
                   Rational(rs.cartan[j][i]) * rs.length_sq[i]);

    // Generate positive roots level by level via root strings: beta + a_i is
    // a root iff q - <beta, a_i^vee> > 0 with q the depth of the string below.
    std::set<Root> pos;
    std::vector<Root> level;
    for (int i = 0; i < rank; ++i) {
        Root r(rank, 0);
        r[i] = 1;
        pos.insert(r);
        level.push_back(r);
    }
    while (!level.empty()) {
        std::vector<Root> next;
        for (const auto& beta : level) {
            for (int i = 0; i < rank; ++i) {
                int q = 0;
                Root down = beta;
                while (true) {
                    down[i] -= 1;
                    bool ok = pos.count(down) > 0;
                    if (!ok && q == 0) {
                        // beta - a_i could be a negative root only when beta = a_i
                        bool is_simple = true;
                        for (int j = 0; j < rank; ++j)
                            if (beta[j] != (j == i ? 1 : 0)) is_simple = false;
                        if (is_simple) ok = false;
                    }
                    if (!ok) break;
                    ++q;
                }
                if (q - rs.pairing(beta, i) > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }

    rs.positive.assign(pos.begin(), pos.end());
    std::sort(rs.positive.begin(), rs.positive.end(), [&](const Root& x, const Root& y) {
        int hx = rs.height(x), hy = rs.height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    rs.roots = rs.positive;
    for (const auto& r : rs.positive) {
        Root neg = r;
        for (int& c : neg) c = -c;
        rs.roots.push_back(neg);
    }

    // highest root and marks
    rs.theta = rs.positive.back();
    int hmax = rs.height(rs.theta);
    for (const auto& r : rs.positive)
        if (rs.height(r) == hmax && r != rs.theta)
            throw UnsupportedAlgebra("highest root is not unique; not a simple type");
    rs.marks = rs.theta;
    return rs;
}

RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2) throw UnsupportedAlgebra("bad algebra label '" + label + "'");
    char t = static_cast<char>(std::toupper(label[0]));
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (...) {
        throw UnsupportedAlgebra("bad algebra label '" + label + "'");
    }
    return build_root_system(t, n);
}

} // namespace cybe
