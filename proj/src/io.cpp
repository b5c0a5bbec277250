#include "indexp/io.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <cstdlib>
#include <fstream>

namespace indexp {

Json cyc_to_json(const CycNumber& z) {
    CycNumber m = cyc_descend_min(z);
    Json coeffs = Json::array();
    for (const auto& q : m.coeffs()) coeffs.push_back(rat_to_string(q));
    return Json{{"conductor", m.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const Json& j) {
    check_input(j.is_object() && j.contains("conductor") && j.contains("coeffs"),
                "cyclotomic value needs {conductor, coeffs}");
    int m = j.at("conductor").get<int>();
    check_input(m >= 1, "conductor must be positive");
    const Json& coeffs = j.at("coeffs");
    check_input(coeffs.is_array(), "coeffs must be an array");
    check_input(static_cast<int>(coeffs.size()) == euler_phi(normalize_conductor(m)),
                "coeffs must have exactly phi(conductor) entries");
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        check_input(coeffs[i].is_string(), "coefficients are rational strings");
        Rational q = rat_from_string(coeffs[i].get<std::string>());
        if (q != 0) terms.emplace_back(static_cast<long>(i), q);
    }
    return CycNumber::from_exponents(normalize_conductor(m), terms);
}

int order_cap_from_env() {
    const char* env = std::getenv("INDEXP_ORDER_CAP");
    if (env == nullptr) return FiniteGroup::kDefaultOrderCap;
    int cap = std::atoi(env);
    check_input(cap >= 1, "INDEXP_ORDER_CAP must be a positive integer");
    return cap;
}

namespace {

std::vector<int> perm_from_json(const Json& j, int degree) {
    check_input(j.is_array() && static_cast<int>(j.size()) == degree,
                "permutation must list all " + std::to_string(degree) + " images");
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) {
        check_input(j[i].is_number_integer(), "permutation images are integers");
        int v = j[i].get<int>();
        check_input(v >= 1 && v <= degree, "permutation images are 1-based points");
        images[i] = v - 1;
    }
    return images;
}

} // namespace

GroupPtr group_from_json(const Json& j, int order_cap) {
    check_input(j.is_object() && j.contains("type"), "group spec needs a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "perm") {
        check_input(j.contains("degree") && j.contains("generators"),
                    "perm group needs degree and generators");
        int degree = j.at("degree").get<int>();
        std::vector<std::vector<int>> gens;
        for (const auto& g : j.at("generators")) gens.push_back(perm_from_json(g, degree));
        check_input(!gens.empty(), "perm group needs at least one generator");
        return FiniteGroup::from_perm_generators(degree, gens, order_cap);
    }
    if (type == "cayley") {
        check_input(j.contains("table"), "cayley group needs a table");
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("table")) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            table.push_back(std::move(r));
        }
        bool validate = !j.contains("validate") || j.at("validate").get<bool>();
        return FiniteGroup::from_cayley_table(table, validate, order_cap);
    }
    throw InputError("unknown group type '" + type + "'");
}

int element_from_json(const GroupPtr& G, const Json& j) {
    if (j.is_number_integer()) {
        int idx = j.get<int>();
        check_input(idx >= 0 && idx < G->order(), "element index out of range");
        return idx;
    }
    check_input(j.is_array(), "element must be an index or a permutation image list");
    check_input(G->has_permutations(), "permutation element given for a non-permutation group");
    int idx = G->element_from_permutation(perm_from_json(j, G->permutation_degree()));
    check_input(idx >= 0, "permutation is not an element of the group");
    return idx;
}

Subgroup subgroup_from_json(const GroupPtr& G, const Json& j) {
    check_input(j.is_object() && j.contains("generators"), "subgroup needs generators");
    std::vector<int> gens;
    for (const auto& g : j.at("generators")) gens.push_back(element_from_json(G, g));
    return subgroup(G, gens);
}

Json chartab_to_json(const CharacterTable& table) {
    Json classes = Json::array();
    for (const auto& cls : table.group->classes().classes)
        classes.push_back(Json{{"representative", cls.representative}, {"size", cls.size()}});
    Json chars = Json::array();
    Json degrees = Json::array();
    for (const auto& chi : table.irreducibles) {
        Json row = Json::array();
        for (const auto& v : chi.values) row.push_back(cyc_to_json(v));
        chars.push_back(std::move(row));
        degrees.push_back(chi.degree_int());
    }
    return Json{{"order", table.group->order()}, {"exponent", table.exponent},
                {"ell", table.ell},             {"num_classes", table.count()},
                {"classes", classes},           {"degrees", degrees},
                {"characters", chars}};
}

Instance instance_from_json(const Json& j, int order_cap) {
    check_input(j.is_object(), "instance must be an object");
    check_input(j.contains("group") && j.contains("subgroup") && j.contains("field_conductor") &&
                    j.contains("eta"),
                "instance needs group, subgroup, field_conductor, eta");
    Instance inst;
    inst.G = group_from_json(j.at("group"), order_cap);
    inst.H = subgroup_from_json(inst.G, j.at("subgroup"));
    std::optional<int> x_hint;
    if (j.contains("x")) x_hint = element_from_json(inst.G, j.at("x"));
    inst.ctx = index_p_context(inst.G, inst.H, x_hint);
    inst.F = FieldSpec(j.at("field_conductor").get<int>());
    inst.h_table = std::make_shared<CharacterTable>(character_table(inst.H.sub));

    const Json& eta = j.at("eta");
    check_input(eta.is_object() && (eta.contains("index") || eta.contains("values")),
                "eta selector needs an index or a value fingerprint");
    int rep = -1;
    if (eta.contains("index")) {
        rep = eta.at("index").get<int>();
        check_input(rep >= 0 && rep < inst.h_table->count(), "eta index out of range");
    }
    if (eta.contains("values")) {
        const Json& vals = eta.at("values");
        check_input(vals.is_array() &&
                        static_cast<int>(vals.size()) == inst.h_table->count(),
                    "eta fingerprint must list one value per class");
        ClassFunction probe;
        probe.group = inst.H.sub;
        for (const auto& v : vals) probe.values.push_back(cyc_from_json(v));
        int found = inst.h_table->index_of(probe);
        check_input(found >= 0, "eta fingerprint does not match any irreducible");
        check_input(rep < 0 || rep == found, "eta index and fingerprint disagree");
        rep = found;
    }

    for (const auto& orb : galois_orbits_over_F(*inst.h_table, inst.F)) {
        if (std::find(orb.members.begin(), orb.members.end(), rep) != orb.members.end()) {
            inst.eta.orbit = orb;
            break;
        }
    }
    check_internal(!inst.eta.orbit.members.empty(), "eta orbit not found");
    inst.eta.table = inst.h_table;
    inst.eta.representative = rep;

    if (j.contains("schur")) {
        const Json& s = j.at("schur");
        if (s.contains("eta")) {
            inst.schur_eta = s.at("eta").get<long>();
            inst.eta.schur_index = static_cast<int>(*inst.schur_eta);
        }
        if (s.contains("constituents"))
            for (const auto& v : s.at("constituents"))
                inst.schur_constituents.push_back(v.get<long>());
    }
    return inst;
}

Json induction_case_to_json(const InductionCase& ic) {
    Json j{{"case", ic.case_id},
           {"p", ic.p},
           {"k", ic.k},
           {"field", ic.F.to_string()},
           {"field_conductor", ic.F.conductor()},
           {"zeta_p_in_F", ic.zeta_p_in_field},
           {"predicted_count", ic.predicted_count},
           {"orbit", ic.orbit_members}};
    j["lambda"] = ic.lambda.has_value() ? cyc_to_json(*ic.lambda) : Json(nullptr);
    j["mu"] = ic.mu.has_value() ? cyc_to_json(*ic.mu) : Json(nullptr);
    if (ic.witness_x.has_value()) j["witness_x"] = *ic.witness_x;
    if (!ic.lambda_by_lift.empty()) {
        Json lifts = Json::array();
        for (const auto& [lift, lam] : ic.lambda_by_lift)
            lifts.push_back(Json{{"x", lift}, {"lambda", cyc_to_json(lam)}});
        j["lambda_by_lift"] = lifts;
    }
    return j;
}

Json report_to_json(const DecompositionReport& r, const Instance* inst) {
    Json cons = Json::array();
    for (std::size_t i = 0; i < r.constituents.size(); ++i) {
        const Constituent& c = r.constituents[i];
        Json jc{{"orbit", c.orbit},
                {"orbit_size", c.orbit_size},
                {"complex_multiplicity", c.complex_multiplicity},
                {"degree", c.degree}};
        // F-multiplicity: complex multiplicity times m(eta) / m(constituent),
        // an integer once Schur indices are known.
        std::string m_eta = "m(eta)";
        std::string m_con = "m(psi" + std::to_string(i) + ")";
        jc["f_multiplicity"] = std::to_string(c.complex_multiplicity) + "*" + m_eta + "/" + m_con;
        if (inst != nullptr && inst->schur_eta.has_value() &&
            i < inst->schur_constituents.size()) {
            long num = c.complex_multiplicity * *inst->schur_eta;
            long den = inst->schur_constituents[i];
            check_input(den >= 1 && num % den == 0,
                        "schur data does not divide the complex multiplicity");
            jc["f_multiplicity_value"] = num / den;
        }
        cons.push_back(std::move(jc));
    }
    return Json{{"case", r.case_id},
                {"p", r.p},
                {"field_conductor", r.F.conductor()},
                {"eta_orbit_degree", r.eta_orbit_degree},
                {"constituents", cons},
                {"predicted_count", r.predicted_count},
                {"actual_count", r.actual_count},
                {"match", r.match},
                {"degree_total", Json{{"lhs", [&] {
                                           long t = 0;
                                           for (const auto& c : r.constituents)
                                               t += c.complex_multiplicity * c.degree;
                                           return t;
                                       }()},
                                      {"rhs", static_cast<long>(r.p) * r.eta_orbit_degree}}}};
}

Json outcome_to_json(const VerificationOutcome& o, const Instance* inst) {
    Json j{{"case", o.case_id},
           {"p", o.p},
           {"k", o.k},
           {"field_conductor", o.F.conductor()},
           {"predicted_count", o.predicted_count},
           {"oracle_count", o.oracle_count},
           {"counts_equal", o.counts_equal},
           {"constituents_equal", o.constituents_equal},
           {"mu_uniform", o.mu_uniform},
           {"case1_consistent", o.case1_consistent},
           {"ok", o.ok()},
           {"classifier", induction_case_to_json(o.induction)},
           {"predicted", report_to_json(o.predicted, inst)},
           {"oracle", report_to_json(o.oracle, inst)}};
    if (o.phi_reading_count >= 0) {
        j["phi_reading_count"] = o.phi_reading_count;
        j["phi_reading_matches"] = o.phi_reading_matches;
    }
    if (!o.detail.empty()) j["detail"] = o.detail;
    return j;
}

CorpusEntry corpus_entry_from_json(const Json& j) {
    check_input(j.is_object() && j.contains("name") && j.contains("instance") &&
                    j.contains("expected"),
                "corpus entry needs name, instance, expected");
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.provenance = j.value("provenance", "");
    e.instance_json = j.at("instance");
    const Json& exp = j.at("expected");
    e.expected_case = exp.at("case").get<int>();
    if (exp.contains("lambda") && !exp.at("lambda").is_null())
        e.expected_lambda = cyc_from_json(exp.at("lambda"));
    if (exp.contains("mu")) {
        if (exp.at("mu").is_string()) {
            check_input(exp.at("mu").get<std::string>() == "none", "mu is a value or \"none\"");
            e.expects_no_mu = true;
        } else if (!exp.at("mu").is_null()) {
            e.expected_mu = cyc_from_json(exp.at("mu"));
        }
    }
    if (exp.contains("constituent_count")) e.expected_count = exp.at("constituent_count").get<int>();
    if (exp.contains("k")) e.expected_k = exp.at("k").get<int>();
    if (exp.contains("constituents")) e.expected_constituents = exp.at("constituents");
    return e;
}

std::vector<std::string> check_against_expectation(const CorpusEntry& entry,
                                                   const Instance& inst,
                                                   const VerificationOutcome& outcome,
                                                   const CharacterTable& g_table) {
    std::vector<std::string> bad;
    if (!outcome.ok()) bad.push_back("classifier/oracle mismatch: " + outcome.detail);
    if (outcome.case_id != entry.expected_case)
        bad.push_back("case " + std::to_string(outcome.case_id) + " != expected " +
                      std::to_string(entry.expected_case));
    if (entry.expected_k.has_value() && outcome.k != *entry.expected_k)
        bad.push_back("k " + std::to_string(outcome.k) + " != expected " +
                      std::to_string(*entry.expected_k));
    if (entry.expected_lambda.has_value()) {
        if (!outcome.induction.lambda.has_value())
            bad.push_back("lambda missing");
        else if (!cyc_eq(*outcome.induction.lambda, *entry.expected_lambda))
            bad.push_back("lambda mismatch");
    }
    if (entry.expects_no_mu && outcome.induction.mu.has_value())
        bad.push_back("unexpected mu present");
    if (entry.expected_mu.has_value()) {
        if (!outcome.induction.mu.has_value())
            bad.push_back("mu missing");
        else if (!cyc_eq(*outcome.induction.mu, *entry.expected_mu))
            bad.push_back("mu mismatch");
    }
    if (entry.expected_count.has_value() && outcome.oracle_count != *entry.expected_count)
        bad.push_back("constituent count " + std::to_string(outcome.oracle_count) +
                      " != expected " + std::to_string(*entry.expected_count));
    if (entry.expected_constituents.is_array()) {
        const auto& cons = outcome.oracle.constituents;
        if (entry.expected_constituents.size() != cons.size()) {
            bad.push_back("constituent fingerprint count mismatch");
        } else {
            for (std::size_t i = 0; i < cons.size(); ++i) {
                const Json& fp = entry.expected_constituents[i];
                if (fp.contains("orbit_size") &&
                    fp.at("orbit_size").get<int>() != cons[i].orbit_size)
                    bad.push_back("constituent " + std::to_string(i) + " orbit size mismatch");
                if (fp.contains("complex_multiplicity") &&
                    fp.at("complex_multiplicity").get<long>() != cons[i].complex_multiplicity)
                    bad.push_back("constituent " + std::to_string(i) + " multiplicity mismatch");
                if (fp.contains("degree") && fp.at("degree").get<long>() != cons[i].degree)
                    bad.push_back("constituent " + std::to_string(i) + " degree mismatch");
                if (fp.contains("values")) {
                    // Orbit-sum values, compared exactly.
                    const Json& vals = fp.at("values");
                    bool ok = vals.is_array() &&
                              vals.size() == g_table.irreducibles[0].values.size();
                    if (ok) {
                        for (std::size_t c = 0; c < vals.size() && ok; ++c) {
                            CycNumber sum;
                            for (int idx : cons[i].orbit)
                                sum = cyc_add(sum, g_table.irreducibles[idx].values[c]);
                            ok = cyc_eq(sum, cyc_from_json(vals[c]));
                        }
                    }
                    if (!ok)
                        bad.push_back("constituent " + std::to_string(i) + " value mismatch");
                }
            }
        }
    }
    (void)inst;
    return bad;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    check_input(in.good(), "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& err) {
        throw InputError("JSON parse error in '" + path + "': " + err.what());
    }
    return j;
}

} // namespace indexp
