#ifndef INDEXP_VERIFY_HPP
#define INDEXP_VERIFY_HPP

#include "indexp/io.hpp"

#include <map>
#include <string>
#include <vector>

namespace indexp {

struct VerifyOptions {
    std::vector<int> conductors{1, 3, 4, 5, 7, 8, 9, 12};
    int max_order = 0; // 0: no bound on swept groups
    int jobs = 1;
    int order_cap = FiniteGroup::kDefaultOrderCap;
    bool sweep = true;
};

struct CorpusResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> mismatches;
    Json outcome;
};

struct SweepResult {
    std::string key;
    bool pass = false;
    Json outcome;
};

struct VerifyReport {
    std::vector<CorpusResult> corpus;
    std::vector<SweepResult> sweep;
    std::map<int, long> case_histogram;
    long phi_reading_disagreements = 0;
    long mismatches = 0;

    bool all_pass() const { return mismatches == 0; }
    Json to_json() const;
};

// Runs every corpus entry against its expectations, then sweeps all index-p
// normal subgroups of the corpus groups over the configured conductors.
VerifyReport run_verify(const std::string& corpus_dir, const VerifyOptions& options);

// Sorted *.json entry files of a corpus directory (corpus/groups excluded).
std::vector<std::string> corpus_entry_files(const std::string& corpus_dir);

} // namespace indexp

#endif
