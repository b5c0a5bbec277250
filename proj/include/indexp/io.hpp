#ifndef INDEXP_IO_HPP
#define INDEXP_IO_HPP

#include "indexp/oracle.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace indexp {

using Json = nlohmann::json;

// {"conductor": m, "coeffs": ["a/b", ...]}, minimal conductor, phi(m) entries.
Json cyc_to_json(const CycNumber& z);
CycNumber cyc_from_json(const Json& j);

int order_cap_from_env(); // INDEXP_ORDER_CAP, default FiniteGroup::kDefaultOrderCap

// {"type":"perm","degree":d,"generators":[[1-based images],...]} or
// {"type":"cayley","table":[[...]]}.
GroupPtr group_from_json(const Json& j, int order_cap);

// {"generators": [...]} where entries are element indices or 1-based image
// lists; x likewise (index or image list).
Subgroup subgroup_from_json(const GroupPtr& G, const Json& j);
int element_from_json(const GroupPtr& G, const Json& j);

Json chartab_to_json(const CharacterTable& table);

// A fully resolved classification instance.
struct Instance {
    GroupPtr G;
    Subgroup H;
    IndexPContext ctx;
    FieldSpec F;
    std::shared_ptr<const CharacterTable> h_table;
    FIrreducibleSpec eta;
    std::optional<long> schur_eta;
    std::vector<long> schur_constituents; // aligned with the sorted constituent list
};

Instance instance_from_json(const Json& j, int order_cap);

Json induction_case_to_json(const InductionCase& ic);
Json report_to_json(const DecompositionReport& r, const Instance* inst = nullptr);
Json outcome_to_json(const VerificationOutcome& o, const Instance* inst = nullptr);

// A corpus entry: an instance plus exact expectations.
struct CorpusEntry {
    std::string name;
    std::string provenance;
    Json instance_json;
    int expected_case = 0;
    std::optional<CycNumber> expected_lambda;
    bool expects_no_mu = false;
    std::optional<CycNumber> expected_mu;
    std::optional<int> expected_count;
    std::optional<int> expected_k;
    Json expected_constituents; // optional array of fingerprints
};

CorpusEntry corpus_entry_from_json(const Json& j);

// Empty when everything matches; otherwise one line per mismatch.
std::vector<std::string> check_against_expectation(const CorpusEntry& entry,
                                                   const Instance& inst,
                                                   const VerificationOutcome& outcome,
                                                   const CharacterTable& g_table);

Json load_json_file(const std::string& path);

} // namespace indexp

#endif
