#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/root_system.hpp"

#include <algorithm>
#include <set>

using namespace cybe;

namespace {

// independent oracle: close the simple roots under all simple reflections
std::set<Root> reflection_closure(const RootSystem& rs) {
    std::set<Root> roots;
    std::vector<Root> frontier;
    for (int i = 0; i < rs.rank; ++i) {
        Root r(rs.rank, 0);
        r[i] = 1;
        roots.insert(r);
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& b : frontier)
            for (int i = 0; i < rs.rank; ++i) {
                Root s = b;
                int p = rs.pairing(b, i);
                s[i] -= p;
                if (roots.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return roots;
}

std::size_t expected_count(char t, int n) {
    switch (t) {
    case 'A': return static_cast<std::size_t>(n) * (n + 1);
    case 'B':
    case 'C': return 2u * n * n;
    case 'D': return 2u * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    }
    return 0;
}

} // namespace

TEST_CASE("rank one has two roots") {
    RootSystem rs = build_root_system('A', 1);
    CHECK(rs.num_roots() == 2);
    CHECK(rs.theta == Root{1});
    CHECK(rs.marks == std::vector<int>{1});
}

TEST_CASE("B2 matches the printed highest root and marks") {
    RootSystem rs = build_root_system('B', 2);
    CHECK(rs.theta == Root{2, 1});
    CHECK(rs.marks == std::vector<int>{2, 1});
    // alpha_1 short, alpha_2 long
    CHECK(rs.length_sq[0] == Rational(1));
    CHECK(rs.length_sq[1] == Rational(2));
    // theta is long
    CHECK(rs.ip(rs.theta, rs.theta) == Rational(2));
}

TEST_CASE("A2 positives from the reflection-closure oracle") {
    RootSystem rs = build_root_system('A', 2);
    CHECK(rs.num_roots() == 6);
    std::set<Root> pos(rs.positive.begin(), rs.positive.end());
    CHECK(pos == std::set<Root>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("counts, negation closure and reflection closure per type") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
             {'C', 2}, {'C', 3}, {'D', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}}) {
        RootSystem rs = build_root_system(t, n);
        CAPTURE(rs.label());
        CHECK(rs.num_roots() == expected_count(t, n));
        std::set<Root> all(rs.roots.begin(), rs.roots.end());
        CHECK(all.size() == rs.num_roots());
        for (const auto& r : all) {
            Root m = r;
            for (int& c : m) c = -c;
            CHECK(all.count(m) == 1);
        }
        // oracle equality on the positive half
        std::set<Root> oracle = reflection_closure(rs);
        CHECK(oracle == all);
        // reflections permute the set
        for (int i = 0; i < rs.rank; ++i) {
            std::set<Root> img;
            for (const auto& r : all) {
                Root s = r;
                s[i] -= rs.pairing(r, i);
                img.insert(s);
            }
            CHECK(img == all);
        }
    }
}

TEST_CASE("cartan matrix consistency with the bilinear form") {
    for (const char* lbl : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = build_root_system(lbl);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) {
                Root ai(rs.rank, 0), aj(rs.rank, 0);
                ai[i] = 1;
                aj[j] = 1;
                CHECK(Rational(rs.cartan[i][j]) ==
                      Rational(2) * rs.ip(ai, aj) / rs.ip(aj, aj));
            }
    }
}

TEST_CASE("theta is dominant and marks decompose it") {
    for (const char* lbl : {"A2", "A4", "B2", "B3", "C3", "D4", "G2", "E6"}) {
        RootSystem rs = build_root_system(lbl);
        for (int i = 0; i < rs.rank; ++i) {
            Root ai(rs.rank, 0);
            ai[i] = 1;
            CHECK(rs.ip(rs.theta, ai) >= 0);
            CHECK(rs.marks[i] == rs.theta[i]);
        }
    }
}

TEST_CASE("bad labels are rejected") {
    CHECK_THROWS_AS(build_root_system('B', 1), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system('E', 5), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system('Z', 3), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system("X9"), UnsupportedAlgebra);
    CHECK_THROWS_AS(build_root_system("Aq"), UnsupportedAlgebra);
}
