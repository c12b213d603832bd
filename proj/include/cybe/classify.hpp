#pragma once

#include "cybe/rmatrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace cybe {

/// One classified (vertex, triple, canonical Cartan piece) with its solution
/// and verification flags; self-validating under cmd_verify.
struct ClassificationRecord {
    std::string algebra;
    int vertex = 0;
    BDTriple triple;
    bool diagram_only = false;

    long sqrt_discriminant = 1;
    std::vector<Vec> ia_prime; // rows over h x h coroot coordinates
    int dim_l_alpha = 0, dim_delta = 0, dim_i_prime = 0;
    ManinReport manin;
    QuasiTrig solution;
    bool cybe_verified = false;
    bool unitary = false;
    int polynomial_degree = 0;
    bool nontrivial_polynomial = false;

    bool all_verified() const {
        return diagram_only || (manin.all() && cybe_verified && unitary);
    }
};

struct EnumerateOptions {
    std::optional<int> vertex;
    bool include_empty = false;
};

std::vector<ClassificationRecord> enumerate_algebra(const std::string& label,
                                                    const EnumerateOptions& opt = {});

/// Automorphism relations between the records (same vertex, triples linked by
/// a diagram automorphism of the crossed diagram).
std::vector<std::pair<std::size_t, std::size_t>>
record_automorphism_pairs(const std::string& label, const std::vector<ClassificationRecord>& recs);

std::string node_name(int node);
int parse_node(const std::string& name);

std::string records_to_json(const std::string& label,
                            const std::vector<ClassificationRecord>& recs);
std::pair<std::string, std::vector<ClassificationRecord>> records_from_json(const std::string& text);

void print_text_report(std::ostream& os, const std::string& label,
                       const std::vector<ClassificationRecord>& recs);

struct VerifyOutcome {
    int records = 0;
    std::vector<std::string> mismatches; // "record 3: cybe_verified" style
    bool ok() const { return mismatches.empty(); }
};

/// Recomputes every flag of every record from the stored data (triple,
/// Cartan piece, solution) and compares.
VerifyOutcome verify_records(const std::string& label,
                             const std::vector<ClassificationRecord>& recs);

/// Presentation/report printing for the uq subcommand.
int run_uq_check(std::ostream& os, const std::string& algebra, const std::string& check);

} // namespace cybe
