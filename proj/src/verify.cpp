#include "indexp/verify.hpp"

#include "indexp/errors.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <thread>

namespace indexp {

namespace fs = std::filesystem;

std::vector<std::string> corpus_entry_files(const std::string& corpus_dir) {
    check_input(fs::is_directory(corpus_dir), "corpus directory '" + corpus_dir + "' not found");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".json") continue;
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

namespace {

std::vector<std::string> corpus_group_files(const std::string& corpus_dir) {
    fs::path dir = fs::path(corpus_dir) / "groups";
    std::vector<std::string> files;
    if (!fs::is_directory(dir)) return files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

template <typename Task>
void run_tasks(long count, int jobs, Task&& task) {
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<long>(jobs, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= count) break;
                task(i);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace

Json VerifyReport::to_json() const {
    Json jc = Json::array();
    for (const auto& r : corpus)
        jc.push_back(Json{{"name", r.name},
                          {"pass", r.pass},
                          {"mismatches", r.mismatches},
                          {"outcome", r.outcome}});
    Json js = Json::array();
    for (const auto& r : sweep)
        js.push_back(Json{{"key", r.key}, {"pass", r.pass}, {"outcome", r.outcome}});
    Json hist = Json::object();
    for (const auto& [cid, n] : case_histogram) hist["case_" + std::to_string(cid)] = n;
    return Json{{"corpus", jc},
                {"sweep", js},
                {"case_histogram", hist},
                {"phi_reading_disagreements", phi_reading_disagreements},
                {"mismatches", mismatches},
                {"pass", mismatches == 0}};
}

VerifyReport run_verify(const std::string& corpus_dir, const VerifyOptions& options) {
    VerifyReport report;

    // ---- corpus entries ----
    struct LoadedEntry {
        CorpusEntry entry;
        Instance inst;
        std::shared_ptr<const CharacterTable> g_table;
    };
    std::vector<LoadedEntry> entries;
    for (const std::string& file : corpus_entry_files(corpus_dir)) {
        CorpusEntry entry = corpus_entry_from_json(load_json_file(file));
        Instance inst = instance_from_json(entry.instance_json, options.order_cap);
        entries.push_back(LoadedEntry{std::move(entry), std::move(inst), nullptr});
    }

    report.corpus.resize(entries.size());
    run_tasks(static_cast<long>(entries.size()), options.jobs, [&](long i) {
        LoadedEntry& le = entries[i];
        CorpusResult res;
        res.name = le.entry.name;
        try {
            auto g_table = std::make_shared<CharacterTable>(character_table(le.inst.G));
            VerificationOutcome outcome =
                compare_verify(le.inst.ctx, le.inst.eta, le.inst.F, *g_table);
            res.mismatches =
                check_against_expectation(le.entry, le.inst, outcome, *g_table);
            res.outcome = outcome_to_json(outcome, &le.inst);
        } catch (const std::exception& err) {
            res.mismatches.push_back(std::string("exception: ") + err.what());
        }
        res.pass = res.mismatches.empty();
        report.corpus[i] = std::move(res);
    });

    // ---- sweep over corpus groups ----
    if (options.sweep) {
        struct SweepInstance {
            std::string key;
            GroupPtr G;
            std::shared_ptr<const CharacterTable> g_table;
            IndexPContext ctx;
            std::shared_ptr<const CharacterTable> h_table;
            FIrreducibleSpec eta;
            FieldSpec F;
        };
        std::vector<SweepInstance> instances;

        // Distinct groups: the corpus entries' groups plus corpus/groups/*.json.
        std::vector<std::pair<std::string, Json>> group_specs;
        std::map<std::string, bool> seen_groups;
        for (const auto& le : entries) {
            Json g = le.entry.instance_json.at("group");
            std::string key = g.dump();
            if (seen_groups.emplace(key, true).second)
                group_specs.emplace_back(le.entry.name, g);
        }
        for (const std::string& file : corpus_group_files(corpus_dir)) {
            Json j = load_json_file(file);
            std::string name = fs::path(file).stem().string();
            Json g = j.contains("group") ? j.at("group") : j;
            std::string key = g.dump();
            if (seen_groups.emplace(key, true).second) group_specs.emplace_back(name, g);
        }

        for (const auto& [gname, gspec] : group_specs) {
            GroupPtr G = group_from_json(gspec, options.order_cap);
            if (options.max_order > 0 && G->order() > options.max_order) continue;
            auto g_table = std::make_shared<CharacterTable>(character_table(G));
            for (const Subgroup& H : index_p_normal_subgroups(G)) {
                IndexPContext ctx = index_p_context(G, H);
                auto h_table = std::make_shared<CharacterTable>(character_table(H.sub));
                for (int m : options.conductors) {
                    FieldSpec F(m);
                    for (const auto& orb : galois_orbits_over_F(*h_table, F)) {
                        SweepInstance si;
                        si.key = gname + "|H=" + std::to_string(H.order()) + "@" +
                                 std::to_string(H.members[H.order() > 1 ? 1 : 0]) + "|m=" +
                                 std::to_string(F.conductor()) + "|eta=" +
                                 std::to_string(orb.members.front());
                        si.G = G;
                        si.g_table = g_table;
                        si.ctx = ctx;
                        si.h_table = h_table;
                        si.eta.table = h_table;
                        si.eta.orbit = orb;
                        si.eta.representative = orb.members.front();
                        si.F = F;
                        instances.push_back(std::move(si));
                    }
                }
            }
        }

        report.sweep.resize(instances.size());
        std::vector<int> case_ids(instances.size(), 0);
        std::vector<int> phi_disagreements(instances.size(), 0);
        run_tasks(static_cast<long>(instances.size()), options.jobs, [&](long i) {
            const SweepInstance& si = instances[i];
            SweepResult res;
            res.key = si.key;
            try {
                VerificationOutcome outcome = compare_verify(si.ctx, si.eta, si.F, *si.g_table);
                res.pass = outcome.ok();
                res.outcome = outcome_to_json(outcome);
                case_ids[i] = outcome.case_id;
                if (outcome.phi_reading_count >= 0 && !outcome.phi_reading_matches)
                    phi_disagreements[i] = 1;
            } catch (const std::exception& err) {
                res.pass = false;
                res.outcome = Json{{"exception", err.what()}};
            }
            report.sweep[i] = std::move(res);
        });
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (case_ids[i] > 0) ++report.case_histogram[case_ids[i]];
            report.phi_reading_disagreements += phi_disagreements[i];
        }
    }

    for (const auto& r : report.corpus)
        if (!r.pass) ++report.mismatches;
    for (const auto& r : report.sweep)
        if (!r.pass) ++report.mismatches;
    return report;
}

} // namespace indexp
