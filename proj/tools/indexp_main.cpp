// Command-line front end: character tables, classification, brute-force
// decomposition and corpus verification, all exact and JSON in/out.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include "indexp/errors.hpp"
#include "indexp/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace indexp;

namespace {

int cmd_chartab(const std::string& input, const std::string& output) {
    Json j = load_json_file(input);
    Json gspec = j.contains("group") ? j.at("group") : j;
    GroupPtr G = group_from_json(gspec, order_cap_from_env());
    CharacterTable table = character_table(G);
    Json out = chartab_to_json(table);
    if (output.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream os(output);
        check_input(os.good(), "cannot write '" + output + "'");
        os << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input) {
    Instance inst = instance_from_json(load_json_file(input), order_cap_from_env());
    CharacterTable g_table = character_table(inst.G);
    InductionCase ic = classify(inst.ctx, inst.eta, inst.F);
    DecompositionReport report = predict_decomposition(ic, inst.ctx, inst.eta, g_table);
    Json out{{"classification", induction_case_to_json(ic)},
             {"decomposition", report_to_json(report, &inst)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const std::string& input) {
    Instance inst = instance_from_json(load_json_file(input), order_cap_from_env());
    CharacterTable g_table = character_table(inst.G);
    DecompositionReport report = oracle_decompose(inst.ctx, inst.eta, g_table);
    std::cout << report_to_json(report, &inst).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& corpus_dir, const std::string& conductors, int max_order,
               int jobs, const std::string& report_path, bool no_sweep) {
    VerifyOptions options;
    options.order_cap = order_cap_from_env();
    options.max_order = max_order;
    options.jobs = jobs;
    options.sweep = !no_sweep;
    if (!conductors.empty()) {
        options.conductors.clear();
        std::size_t pos = 0;
        while (pos < conductors.size()) {
            std::size_t comma = conductors.find(',', pos);
            if (comma == std::string::npos) comma = conductors.size();
            options.conductors.push_back(std::stoi(conductors.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    VerifyReport report = run_verify(corpus_dir, options);
    Json out = report.to_json();
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        check_input(os.good(), "cannot write '" + report_path + "'");
        os << out.dump(2) << "\n";
    }
    for (const auto& r : report.corpus)
        std::cout << (r.pass ? "PASS" : "FAIL") << " corpus " << r.name << "\n";
    long sweep_pass = 0;
    for (const auto& r : report.sweep)
        if (r.pass) ++sweep_pass;
    if (!report.sweep.empty()) {
        std::cout << "sweep: " << sweep_pass << "/" << report.sweep.size() << " instances ok\n";
        for (const auto& r : report.sweep)
            if (!r.pass) std::cout << "FAIL sweep " << r.key << "\n";
        std::cout << "case histogram:";
        for (const auto& [cid, count] : report.case_histogram)
            std::cout << " case" << cid << "=" << count;
        std::cout << "\n";
        std::cout << "phi-reading disagreements (case 5 documentation): "
                  << report.phi_reading_disagreements << "\n";
    }
    std::cout << (report.all_pass() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of representations induced from a normal subgroup "
                 "of prime index over cyclotomic fields"};
    app.require_subcommand(1);

    std::string input, output;
    auto* chartab = app.add_subcommand("chartab", "compute a verified character table");
    chartab->add_option("-i,--input", input, "group JSON file")->required();
    chartab->add_option("-o,--output", output, "output path (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "classify an induction instance");
    classify_cmd->add_option("-i,--input", input, "instance JSON file")->required();

    auto* decompose = app.add_subcommand("decompose", "brute-force decomposition only");
    decompose->add_option("-i,--input", input, "instance JSON file")->required();

    std::string corpus_dir, conductors, report_path;
    int max_order = 0, jobs = 1;
    bool no_sweep = false;
    auto* verify = app.add_subcommand("verify", "verify corpus expectations and sweep");
    verify->add_option("--corpus", corpus_dir, "corpus directory")->required();
    verify->add_option("--conductors", conductors, "comma-separated conductor list");
    verify->add_option("--max-order", max_order, "skip swept groups above this order");
    verify->add_option("--jobs", jobs, "parallel instances");
    verify->add_option("--report", report_path, "write the full JSON report here");
    verify->add_flag("--no-sweep", no_sweep, "corpus entries only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chartab->parsed()) return cmd_chartab(input, output);
        if (classify_cmd->parsed()) return cmd_classify(input);
        if (decompose->parsed()) return cmd_decompose(input);
        if (verify->parsed())
            return cmd_verify(corpus_dir, conductors, max_order, jobs, report_path, no_sweep);
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const Json::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const InternalError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    }
    return 2;
}
