#include "cybe/classify.hpp"
#include "cybe/uq.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cybe {

using nlohmann::json;

std::string node_name(int node) { return "alpha" + std::to_string(node); }

int parse_node(const std::string& name) {
    std::string s = name;
    if (s.rfind("alpha", 0) == 0)
        s = s.substr(5);
    else if (s.rfind("a", 0) == 0)
        s = s.substr(1);
    try {
        return std::stoi(s);
    } catch (...) {
        throw UnsupportedAlgebra("bad vertex name '" + name + "'");
    }
}

namespace {

ClassificationRecord classify_one(const LieAlgebra& L, const VertexData& v, const PairSpace& ps,
                                  const BDTriple& t) {
    ClassificationRecord rec;
    rec.algebra = L.rs.label();
    rec.vertex = t.vertex;
    rec.triple = t;

    CartanSpaces cs = cartan_spaces(L, v, t);
    IaPrime ia = construct_i_a_prime(L, v, t, cs);
    rec.sqrt_discriminant = ia.disc;
    for (std::size_t i = 0; i < ia.space.dim(); ++i) rec.ia_prime.push_back(ia.space.basis_vector(i));

    LagrangianSubalgebra lagr = build_i_prime(L, v, ps, t, ia);
    rec.dim_l_alpha = static_cast<int>(ps.left.size());
    Subspace delta = delta_alpha(L, v, ps);
    rec.dim_delta = static_cast<int>(delta.dim());
    rec.dim_i_prime = static_cast<int>(lagr.total.dim());
    rec.manin = verify_manin(L, v, ps, lagr.total);

    if (rec.manin.all()) {
        CasimirData cas = casimir(L);
        WindowSpace win(L, 2, 1);
        WSubalgebra w = lift_i_prime_to_w(L, v, ps, lagr.total, win);
        rec.solution = solution_from_subalgebra(L, cas, w, win);
        rec.cybe_verified = verify_cybe(L, cas, rec.solution);
        rec.unitary = is_unitary(rec.solution, cas);
        for (const auto& [k, c] : rec.solution.p)
            rec.polynomial_degree = std::max(rec.polynomial_degree, k[2] + k[3]);
        rec.nontrivial_polynomial = rec.polynomial_degree >= 1;
    }
    return rec;
}

} // namespace

std::vector<ClassificationRecord> enumerate_algebra(const std::string& label,
                                                    const EnumerateOptions& opt) {
    RootSystem rs = build_root_system(label);
    std::vector<int> vertices;
    for (int v = 1; v <= rs.rank; ++v)
        if (!opt.vertex || *opt.vertex == v) vertices.push_back(v);
    if (opt.vertex && (*opt.vertex < 1 || *opt.vertex > rs.rank))
        throw UnsupportedAlgebra("vertex out of range for " + rs.label());

    if (!rs.has_matrix_realization()) {
        // diagram-level enumeration only
        std::vector<ClassificationRecord> out;
        for (int v : vertices)
            for (const auto& t : enumerate_triples(rs, v)) {
                if (t.empty() && !opt.include_empty) continue;
                ClassificationRecord rec;
                rec.algebra = rs.label();
                rec.vertex = v;
                rec.triple = t;
                rec.diagram_only = true;
                out.push_back(std::move(rec));
            }
        return out;
    }

    LieAlgebra L = build_lie_algebra(rs);
    std::vector<std::vector<ClassificationRecord>> per_vertex(vertices.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
        int v = vertices[vi];
        VertexData vd = alpha_grading(L, v);
        PairSpace ps(L, vd);
        for (const auto& t : enumerate_triples(rs, v)) {
            if (t.empty() && !opt.include_empty) continue;
            per_vertex[vi].push_back(classify_one(L, vd, ps, t));
        }
    }
    std::vector<ClassificationRecord> out;
    for (auto& block : per_vertex)
        for (auto& rec : block) out.push_back(std::move(rec));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
record_automorphism_pairs(const std::string& label, const std::vector<ClassificationRecord>& recs) {
    RootSystem rs = build_root_system(label);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (int v = 1; v <= rs.rank; ++v) {
        std::vector<std::size_t> idx;
        std::vector<BDTriple> triples;
        for (std::size_t i = 0; i < recs.size(); ++i)
            if (recs[i].vertex == v) {
                idx.push_back(i);
                triples.push_back(recs[i].triple);
            }
        for (auto [a, b] : automorphism_related(rs, v, triples)) out.emplace_back(idx[a], idx[b]);
    }
    return out;
}

namespace {

json triple_to_json(const BDTriple& t) {
    json j;
    j["type"] = to_string(t.type);
    j["gamma1"] = json::array();
    for (int n : t.g1) j["gamma1"].push_back(node_name(n));
    j["gamma2"] = json::array();
    for (int n : t.g2) j["gamma2"].push_back(node_name(n));
    j["map"] = json::array();
    for (const auto& [a, b] : t.bij) j["map"].push_back({node_name(a), node_name(b)});
    return j;
}

BDTriple triple_from_json(int vertex, const json& j) {
    BDTriple t;
    t.vertex = vertex;
    for (const auto& s : j.at("gamma1")) t.g1.push_back(parse_node(s.get<std::string>()));
    for (const auto& s : j.at("gamma2")) t.g2.push_back(parse_node(s.get<std::string>()));
    for (const auto& p : j.at("map"))
        t.bij[parse_node(p.at(0).get<std::string>())] = parse_node(p.at(1).get<std::string>());
    std::string ty = j.at("type").get<std::string>();
    t.type = ty == "I" ? TripleType::I : (ty == "II" ? TripleType::II : TripleType::Empty);
    return t;
}

} // namespace

std::string records_to_json(const std::string& label,
                            const std::vector<ClassificationRecord>& recs) {
    json out;
    out["schema"] = "cybe-forge/1";
    out["algebra"] = label;
    out["records"] = json::array();
    for (const auto& r : recs) {
        json j;
        j["algebra"] = r.algebra;
        j["vertex"] = node_name(r.vertex);
        j["triple"] = triple_to_json(r.triple);
        j["diagram_only"] = r.diagram_only;
        if (!r.diagram_only) {
            j["sqrt_discriminant"] = r.sqrt_discriminant;
            j["ia_prime"] = json::array();
            for (const auto& row : r.ia_prime) {
                json jr = json::array();
                for (const auto& s : row) jr.push_back(s.str());
                j["ia_prime"].push_back(jr);
            }
            j["dims"] = {{"l_alpha", r.dim_l_alpha},
                         {"delta", r.dim_delta},
                         {"i_prime", r.dim_i_prime}};
            j["manin"] = {{"isotropic", r.manin.isotropic},
                          {"half_dimensional", r.manin.half_dimensional},
                          {"subalgebra_closed", r.manin.subalgebra_closed},
                          {"intersection_with_delta_trivial", r.manin.intersection_with_delta_trivial},
                          {"sum_with_delta_full", r.manin.sum_with_delta_full}};
            j["solution"] = json::array();
            for (const auto& [k, c] : r.solution.p)
                j["solution"].push_back({{"left", k[0]},
                                         {"right", k[1]},
                                         {"deg_u", k[2]},
                                         {"deg_v", k[3]},
                                         {"scalar", c.str()}});
            j["cybe_verified"] = r.cybe_verified;
            j["unitary"] = r.unitary;
            j["polynomial_degree"] = r.polynomial_degree;
            j["nontrivial_polynomial"] = r.nontrivial_polynomial;
        }
        out["records"].push_back(std::move(j));
    }
    auto pairs = record_automorphism_pairs(label, recs);
    out["automorphism_related"] = json::array();
    for (auto [a, b] : pairs) out["automorphism_related"].push_back({a, b});
    return out.dump(2) + "\n";
}

std::pair<std::string, std::vector<ClassificationRecord>>
records_from_json(const std::string& text) {
    json in = json::parse(text);
    if (in.at("schema").get<std::string>() != "cybe-forge/1")
        throw UnsupportedAlgebra("unknown schema");
    std::string label = in.at("algebra").get<std::string>();
    std::vector<ClassificationRecord> recs;
    for (const auto& j : in.at("records")) {
        ClassificationRecord r;
        r.algebra = j.at("algebra").get<std::string>();
        r.vertex = parse_node(j.at("vertex").get<std::string>());
        r.triple = triple_from_json(r.vertex, j.at("triple"));
        r.diagram_only = j.at("diagram_only").get<bool>();
        if (!r.diagram_only) {
            r.sqrt_discriminant = j.at("sqrt_discriminant").get<long>();
            for (const auto& jr : j.at("ia_prime")) {
                Vec row;
                for (const auto& s : jr) row.push_back(Scalar::parse(s.get<std::string>()));
                r.ia_prime.push_back(std::move(row));
            }
            r.dim_l_alpha = j.at("dims").at("l_alpha").get<int>();
            r.dim_delta = j.at("dims").at("delta").get<int>();
            r.dim_i_prime = j.at("dims").at("i_prime").get<int>();
            const auto& m = j.at("manin");
            r.manin.isotropic = m.at("isotropic").get<bool>();
            r.manin.half_dimensional = m.at("half_dimensional").get<bool>();
            r.manin.subalgebra_closed = m.at("subalgebra_closed").get<bool>();
            r.manin.intersection_with_delta_trivial =
                m.at("intersection_with_delta_trivial").get<bool>();
            r.manin.sum_with_delta_full = m.at("sum_with_delta_full").get<bool>();
            for (const auto& e : j.at("solution"))
                r.solution.add(e.at("left").get<int>(), e.at("right").get<int>(),
                               e.at("deg_u").get<int>(), e.at("deg_v").get<int>(),
                               Scalar::parse(e.at("scalar").get<std::string>()));
            r.cybe_verified = j.at("cybe_verified").get<bool>();
            r.unitary = j.at("unitary").get<bool>();
            r.polynomial_degree = j.at("polynomial_degree").get<int>();
            r.nontrivial_polynomial = j.at("nontrivial_polynomial").get<bool>();
        }
        recs.push_back(std::move(r));
    }
    return {label, recs};
}

namespace {

std::string bond_string(const RootSystem& rs, int a, int b) {
    Rational ip = rs.node_ip(a, b);
    if (ip == 0) return "";
    Rational la = rs.node_ip(a, a), lb = rs.node_ip(b, b);
    Rational prod = Rational(4) * ip * ip / (la * lb);
    if (prod == 1) return "---";
    // arrow points at the shorter root
    if (prod == 2) return la > lb ? "=>=" : "=<=";
    return la > lb ? "3>-" : "-<3";
}

} // namespace

void print_text_report(std::ostream& os, const std::string& label,
                       const std::vector<ClassificationRecord>& recs) {
    RootSystem rs = build_root_system(label);
    os << label << ": rank " << rs.rank << ", " << rs.num_roots() << " roots, marks (";
    for (int i = 0; i < rs.rank; ++i) os << (i ? "," : "") << rs.marks[i];
    os << ")\n";
    for (const auto& r : recs) {
        os << "\nvertex " << node_name(r.vertex) << ", triple " << to_string(r.triple.type) << "\n";
        // crossed extended diagram, rendered as the node list with bonds
        os << "  diagram:";
        for (int n = 0; n <= rs.rank; ++n) {
            if (n) {
                std::string bond = bond_string(rs, n - 1, n);
                os << " " << (bond.empty() ? "   " : bond) << " ";
            } else {
                os << " ";
            }
            if (n == r.vertex)
                os << "[X " << node_name(n) << "]";
            else
                os << node_name(n);
        }
        os << "\n";
        os << "  gamma1 = {";
        for (std::size_t i = 0; i < r.triple.g1.size(); ++i)
            os << (i ? "," : "") << node_name(r.triple.g1[i]);
        os << "}, gamma2 = {";
        for (std::size_t i = 0; i < r.triple.g2.size(); ++i)
            os << (i ? "," : "") << node_name(r.triple.g2[i]);
        os << "}, map: ";
        bool first = true;
        for (const auto& [a, b] : r.triple.bij) {
            os << (first ? "" : ", ") << node_name(a) << "->" << node_name(b);
            first = false;
        }
        if (r.triple.bij.empty()) os << "(none)";
        os << "\n";
        if (r.diagram_only) {
            os << "  diagram-level record (no matrix realization for this type)\n";
            continue;
        }
        os << "  dims: L_alpha=" << r.dim_l_alpha << " delta=" << r.dim_delta
           << " i_prime=" << r.dim_i_prime << ", sqrt disc=" << r.sqrt_discriminant << "\n";
        os << "  manin: isotropic=" << r.manin.isotropic
           << " half_dim=" << r.manin.half_dimensional << " closed=" << r.manin.subalgebra_closed
           << " cap_delta_trivial=" << r.manin.intersection_with_delta_trivial
           << " sum_full=" << r.manin.sum_with_delta_full << "\n";
        os << "  solution: " << r.solution.p.size() << " terms, degree " << r.polynomial_degree
           << ", cybe=" << r.cybe_verified << ", unitary=" << r.unitary << "\n";
    }
}

VerifyOutcome verify_records(const std::string& label,
                             const std::vector<ClassificationRecord>& recs) {
    VerifyOutcome out;
    out.records = static_cast<int>(recs.size());
    RootSystem rs = build_root_system(label);
    std::optional<LieAlgebra> L;
    std::optional<CasimirData> cas;
    if (rs.has_matrix_realization()) {
        L = build_lie_algebra(rs);
        cas = casimir(*L);
    }
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        auto flag = [&](const std::string& field) {
            out.mismatches.push_back("record " + std::to_string(i) + ": " + field);
        };
        auto valid = enumerate_triples(rs, r.vertex);
        BDTriple probe = r.triple;
        bool found = false;
        for (const auto& t : valid)
            if (t == probe) {
                found = true;
                if (t.type != r.triple.type) flag("triple type");
            }
        if (!found) {
            flag("triple not in enumeration");
            continue;
        }
        if (r.diagram_only) {
            if (rs.has_matrix_realization()) flag("diagram_only on a realized type");
            continue;
        }
        VertexData vd = alpha_grading(*L, r.vertex);
        PairSpace ps(*L, vd);
        // rebuild the Lagrangian from the stored Cartan piece
        IaPrime ia;
        ia.disc = r.sqrt_discriminant;
        ia.space = Subspace(2 * static_cast<std::size_t>(L->rank()), r.ia_prime);
        IaCheck ic = verify_alternative_ia(*L, vd, r.triple, r.ia_prime);
        if (!ic.ok()) flag("stored Cartan piece fails isotropy/transversality");
        LagrangianSubalgebra lagr = build_i_prime(*L, vd, ps, r.triple, ia);
        ManinReport m = verify_manin(*L, vd, ps, lagr.total);
        if (m.isotropic != r.manin.isotropic) flag("manin.isotropic");
        if (m.half_dimensional != r.manin.half_dimensional) flag("manin.half_dimensional");
        if (m.subalgebra_closed != r.manin.subalgebra_closed) flag("manin.subalgebra_closed");
        if (m.intersection_with_delta_trivial != r.manin.intersection_with_delta_trivial)
            flag("manin.intersection_with_delta_trivial");
        if (m.sum_with_delta_full != r.manin.sum_with_delta_full) flag("manin.sum_with_delta_full");
        if (static_cast<int>(ps.left.size()) != r.dim_l_alpha) flag("dims.l_alpha");
        if (static_cast<int>(delta_alpha(*L, vd, ps).dim()) != r.dim_delta) flag("dims.delta");
        if (static_cast<int>(lagr.total.dim()) != r.dim_i_prime) flag("dims.i_prime");
        // flags of the stored solution
        bool cy = verify_cybe(*L, *cas, r.solution);
        bool un = is_unitary(r.solution, *cas);
        if (cy != r.cybe_verified) flag("cybe_verified");
        if (un != r.unitary) flag("unitary");
        int deg = 0;
        for (const auto& [k, c] : r.solution.p) deg = std::max(deg, k[2] + k[3]);
        if (deg != r.polynomial_degree) flag("polynomial_degree");
        if ((deg >= 1) != r.nontrivial_polynomial) flag("nontrivial_polynomial");
        if (!m.all() || !cy || !un) flag("verification failure");
    }
    return out;
}

int run_uq_check(std::ostream& os, const std::string& algebra, const std::string& check) {
    RootSystem rs = build_root_system(algebra);
    if (check == "presentation") {
        Presentation q = generate_presentation(rs, PresentationMode::Quantum);
        os << "U_q(" << algebra << "[u]) presentation: " << q.generators.size() << " generators, "
           << q.relations.size() << " relations\n";
        os << "serre exponents n_ij:";
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                if (i != j) os << " n(" << i + 1 << "," << j + 1 << ")=" << serre_exponent(rs, i, j);
        os << "\naffine exponents n_i0:";
        for (int i = 0; i < rs.rank; ++i) os << " n(" << i + 1 << ",0)=" << affine_exponent(rs, i);
        os << "\nk[d-th] =";
        for (int i = 0; i < rs.rank; ++i) os << " k[a" << i + 1 << "]^-" << rs.marks[i];
        os << "\n";
        for (const auto& rel : q.relations) {
            os << "  " << rel.tag << ": ";
            bool first = true;
            for (const auto& [w, c] : rel.poly) {
                os << (first ? "" : " + ") << "(" << c.str() << ")";
                for (int id : w) os << "*" << gen_name(id, rs);
                first = false;
            }
            os << " = 0\n";
        }
        return 0;
    }
    if (check == "hopf") {
        Presentation q = generate_presentation(rs, PresentationMode::Quantum);
        HopfReport rep = check_hopf_on_generators(q);
        bool counit_ok = counit_kills_relations(q);
        for (const auto& row : rep.rows)
            os << gen_name(row.generator, rs) << ": coassoc=" << row.coassociative
               << " counit=" << (row.counit_left && row.counit_right)
               << " antipode=" << (row.antipode_left && row.antipode_right) << "\n";
        os << "counit kills relations: " << counit_ok << "\n";
        return rep.all() && counit_ok ? 0 : 1;
    }
    if (check == "limit") {
        LimitReport rep = classical_limit_check(rs);
        for (const auto& row : rep.rows)
            os << row.quantum_tag << " -> "
               << (row.classical_tag.empty() ? "(definitional)" : row.classical_tag) << ": "
               << (row.pass ? "ok" : "FAIL") << "\n";
        return rep.all() ? 0 : 1;
    }
    throw UnsupportedAlgebra("unknown check '" + check + "' (expected presentation|hopf|limit)");
}

} // namespace cybe
