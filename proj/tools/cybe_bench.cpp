// Benchmark of the cleared-CYBE expansion kernel: serial reference vs the
// OpenMP version, on the standard solution and on a classified twisted one.

#include "cybe/classify.hpp"

#include <chrono>
#include <iostream>

using namespace cybe;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_case(const std::string& label, const LieAlgebra& L, const CasimirData& cas,
                const QuasiTrig& x, int reps) {
    auto entries = numerator_entries(x, cas);
    auto t0 = std::chrono::steady_clock::now();
    CybTensor serial;
    for (int r = 0; r < reps; ++r) serial = cyb_lhs_serial(L, entries);
    double ts = ms_since(t0) / reps;
    t0 = std::chrono::steady_clock::now();
    CybTensor parallel;
    for (int r = 0; r < reps; ++r) parallel = cyb_lhs_parallel(L, entries);
    double tp = ms_since(t0) / reps;
    bool same = serial == parallel;
    std::cout << label << ": " << entries.size() << " numerator entries, serial " << ts
              << " ms, parallel " << tp << " ms, speedup " << (tp > 0 ? ts / tp : 0)
              << (same ? "" : "  [MISMATCH]") << "\n";
    if (!same) std::exit(1);
}

} // namespace

int main() {
    for (const std::string& label : {"A2", "B2", "A3"}) {
        RootSystem rs = build_root_system(label);
        LieAlgebra L = build_lie_algebra(rs);
        CasimirData cas = casimir(L);
        bench_case(label + " standard", L, cas, standard_r3(L, cas), 3);
        EnumerateOptions opt;
        auto recs = enumerate_algebra(label, opt);
        for (const auto& r : recs)
            if (r.polynomial_degree >= 1) {
                bench_case(label + " twisted (vertex " + node_name(r.vertex) + ")", L, cas,
                           r.solution, 3);
                break;
            }
    }
    return 0;
}
