// nfsr: analyze, enumerate, search, export for autonomous shift-register
// networks. Exit codes: 0 success, 1 search ran out of generations,
// 2 usage/parse error, 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nfsr/census.hpp"
#include "nfsr/dot.hpp"
#include "nfsr/ga.hpp"
#include "nfsr/state_space.hpp"
#include "nfsr/truth_table.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNoConvergence = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

const char* class_name(nfsr::StateClass c) {
    switch (c) {
        case nfsr::StateClass::Periodic: return "periodic";
        case nfsr::StateClass::Transient: return "transient";
        case nfsr::StateClass::GardenOfEden: return "garden_of_eden";
    }
    return "?";
}

std::string state_entry(int n, std::uint32_t code) {
    return std::to_string(code) + " " +
           nfsr::format_state_tuple(nfsr::StateVector{n, code});
}

std::string text_report(const nfsr::TruthTable& f, const nfsr::StateAnalysis& a) {
    std::string out;
    out += "n: " + std::to_string(a.n) + "\n";
    out += "table: " + nfsr::format_truth_table(f) + "\n";
    out += "hex: " + nfsr::format_truth_table_hex(f) + "\n";
    out += "max_cycle_r: " + std::to_string(a.max_cycle_r) + "\n";
    out += "goe_count_d: " + std::to_string(a.goe_count_d) + "\n";
    out += "cycles (" + std::to_string(a.cycles.size()) + "):\n";
    for (const auto& cycle : a.cycles) {
        out += "  length " + std::to_string(cycle.size()) + ": ";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += " -> ";
            out += state_entry(a.n, cycle[i]);
        }
        out += "\n";
    }
    out += "garden_of_eden (" + std::to_string(a.goe_count_d) + "): ";
    if (a.goe_count_d == 0) {
        out += "none";
    } else {
        bool first = true;
        for (std::uint32_t s = 0; s < a.classes.size(); ++s) {
            if (a.classes[s] != nfsr::StateClass::GardenOfEden) continue;
            if (!first) out += ", ";
            out += state_entry(a.n, s);
            first = false;
        }
    }
    out += "\n";
    return out;
}

std::string json_report(const nfsr::TruthTable& f, const nfsr::StateAnalysis& a) {
    nlohmann::ordered_json j;
    j["n"] = a.n;
    j["table"] = nfsr::format_truth_table(f);
    j["hex"] = nfsr::format_truth_table_hex(f);
    j["max_cycle_r"] = a.max_cycle_r;
    j["goe_count_d"] = a.goe_count_d;
    j["cycles"] = a.cycles;
    auto& goe = j["garden_of_eden"] = nlohmann::ordered_json::array();
    auto& classes = j["classes"] = nlohmann::ordered_json::array();
    for (std::uint32_t s = 0; s < a.classes.size(); ++s) {
        classes.push_back(class_name(a.classes[s]));
        if (a.classes[s] == nfsr::StateClass::GardenOfEden) goe.push_back(s);
    }
    return j.dump(2) + "\n";
}

struct AnalyzeArgs {
    int n = 0;
    std::string table;
    std::string format = "text";
    std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
    const nfsr::TruthTable f = nfsr::parse_truth_table(args.table, args.n);
    const nfsr::StateAnalysis a = nfsr::analyze(f);
    write_output(args.output,
                 args.format == "json" ? json_report(f, a) : text_report(f, a));
    return kExitSuccess;
}

struct EnumerateArgs {
    int n = 0;
    std::uint64_t sample = 0;
    bool sample_given = false;
    bool exhaustive_n5 = false;
    std::string checkpoint;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string format = "csv";
    std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
    nfsr::CensusHistogram h;
    if (args.sample_given) {
        h = nfsr::sample_sweep(args.n, args.sample, args.seed);
    } else if (args.exhaustive_n5) {
        if (args.n != 5) {
            throw std::invalid_argument("--exhaustive-n5 applies to --n 5 only");
        }
        nfsr::SweepCheckpoint cp;
        if (!args.checkpoint.empty() &&
            std::filesystem::exists(args.checkpoint)) {
            std::ifstream in(args.checkpoint, std::ios::binary);
            if (!in) throw IoError("cannot open checkpoint '" + args.checkpoint + "'");
            try {
                cp = nfsr::load_checkpoint(in);
            } catch (const std::exception& e) {
                throw IoError("cannot read checkpoint '" + args.checkpoint +
                              "': " + e.what());
            }
        }
        const auto save = [&](const nfsr::SweepCheckpoint& state) {
            if (args.checkpoint.empty()) return;
            std::ofstream out(args.checkpoint, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cannot write checkpoint '" + args.checkpoint + "'");
            nfsr::save_checkpoint(out, state);
        };
        h = nfsr::resumable_sweep(5, std::uint64_t(1) << 32, std::move(cp),
                                  std::uint64_t(1) << 24, args.threads, save);
    } else if (args.n >= 2 && args.n <= 4) {
        h = nfsr::sweep(args.n, args.threads);
    } else if (args.n == 5) {
        throw std::invalid_argument(
            "exhausting n=5 is 2^32 functions; pass --sample COUNT for a random "
            "census or --exhaustive-n5 to opt in");
    } else {
        throw std::invalid_argument(
            "exhaustive enumeration covers 2 <= n <= 4; pass --sample COUNT for "
            "larger n");
    }
    const auto format = args.format == "json" ? nfsr::HistogramFormat::Json
                                              : nfsr::HistogramFormat::Csv;
    write_output(args.output, nfsr::emit_histogram(h, format));
    return kExitSuccess;
}

struct SearchArgs {
    nfsr::GaConfig cfg;
    std::int64_t m_offset = 0;
    bool m_given = false;
    std::string fitness_mode = "penalize-both";
    std::string output;
};

int run_search(SearchArgs& args) {
    if (args.m_given) args.cfg.fitness_offset = args.m_offset;
    if (args.fitness_mode == "reward-d-gap") {
        args.cfg.fitness_mode = nfsr::FitnessMode::RewardDGap;
    } else if (args.fitness_mode == "ignore-d") {
        args.cfg.fitness_mode = nfsr::FitnessMode::IgnoreD;
    }
    nfsr::validate(args.cfg); // usage errors before any work
    const nfsr::GaResult result = nfsr::evolve(args.cfg);
    write_output(args.output, nfsr::ga_result_to_json(args.cfg, result));
    return result.success ? kExitSuccess : kExitNoConvergence;
}

struct ExportArgs {
    int n = 0;
    std::string table;
    std::string output;
};

int run_export(const ExportArgs& args) {
    const nfsr::TruthTable f = nfsr::parse_truth_table(args.table, args.n);
    write_output(args.output, nfsr::to_dot(f, nfsr::analyze(f)));
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Autonomous shift-register network toolkit: exact state-space "
                 "analysis, exhaustive function censuses, and a genetic search "
                 "for feedback functions with prescribed cycle and "
                 "Garden-of-Eden structure."};
    app.require_subcommand(1);

    AnalyzeArgs az;
    auto* cmd_analyze =
        app.add_subcommand("analyze", "Classify every state of one feedback function");
    cmd_analyze->add_option("--n", az.n, "variable count")->required();
    cmd_analyze
        ->add_option("--table", az.table,
                     "truth table: 2^n chars of {0,1}, or 0x-prefixed hex")
        ->required();
    cmd_analyze->add_option("--format", az.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd_analyze->add_option("-o,--output", az.output, "output file (default stdout)");

    EnumerateArgs en;
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "Census of max-cycle and Garden-of-Eden counts over all "
                     "(or sampled) n-variable functions");
    cmd_enumerate->add_option("--n", en.n, "variable count")->required();
    auto* opt_sample = cmd_enumerate->add_option(
        "--sample", en.sample, "census this many random functions instead of all");
    auto* opt_exhaustive = cmd_enumerate->add_flag(
        "--exhaustive-n5", en.exhaustive_n5,
        "opt into the full 2^32-function sweep at n=5");
    cmd_enumerate
        ->add_option("--checkpoint", en.checkpoint,
                     "checkpoint file for --exhaustive-n5; resumes if present")
        ->needs(opt_exhaustive);
    opt_sample->excludes(opt_exhaustive);
    cmd_enumerate->add_option("--seed", en.seed, "rng seed for --sample")
        ->capture_default_str();
    cmd_enumerate
        ->add_option("--threads", en.threads, "worker threads (0 = all cores)")
        ->capture_default_str();
    cmd_enumerate->add_option("--format", en.format, "histogram format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd_enumerate->add_option("-o,--output", en.output, "output file (default stdout)");

    SearchArgs se;
    auto* cmd_search = app.add_subcommand(
        "search", "Evolve a feedback function toward a target max cycle r' and "
                  "Garden-of-Eden count d'");
    cmd_search->add_option("--n", se.cfg.n, "variable count")->required();
    cmd_search->add_option("--target-r", se.cfg.target_r, "target max cycle r'")
        ->required();
    cmd_search
        ->add_option("--target-d", se.cfg.target_d, "target Garden-of-Eden count d'")
        ->required();
    cmd_search->add_option("--population", se.cfg.population, "genes per generation")
        ->capture_default_str();
    cmd_search->add_option("--elite-count", se.cfg.elite_count, "genes kept unchanged")
        ->capture_default_str();
    cmd_search
        ->add_option("--mutation-rate", se.cfg.mutation_rate,
                     "per-bit flip probability")
        ->capture_default_str();
    cmd_search
        ->add_option("--max-generations", se.cfg.max_generations,
                     "give up after this many generations")
        ->capture_default_str();
    auto* opt_m = cmd_search->add_option(
        "--m-offset", se.m_offset,
        "fitness offset m (default 2^(2n) + 2^(2n-2) + 1)");
    cmd_search->add_option("--seed", se.cfg.seed, "rng seed")->capture_default_str();
    cmd_search
        ->add_option("--threads", se.cfg.threads,
                     "fitness-evaluation threads (0 = all cores); never changes "
                     "the result")
        ->capture_default_str();
    cmd_search->add_option("--fitness-mode", se.fitness_mode, "fitness variant")
        ->check(CLI::IsMember({"penalize-both", "reward-d-gap", "ignore-d"}))
        ->capture_default_str();
    cmd_search
        ->add_option("--trace-stride", se.cfg.trace_stride,
                     "record every k-th generation in the fitness trace")
        ->capture_default_str();
    cmd_search->add_option("-o,--output", se.output, "output file (default stdout)");

    ExportArgs ex;
    auto* cmd_export = app.add_subcommand(
        "export", "Emit the state-transition graph as Graphviz DOT");
    cmd_export->add_option("--n", ex.n, "variable count")->required();
    cmd_export
        ->add_option("--table", ex.table,
                     "truth table: 2^n chars of {0,1}, or 0x-prefixed hex")
        ->required();
    cmd_export->add_option("-o,--output", ex.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse message
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        en.sample_given = opt_sample->count() > 0;
        se.m_given = opt_m->count() > 0;
        if (cmd_analyze->parsed()) return run_analyze(az);
        if (cmd_enumerate->parsed()) return run_enumerate(en);
        if (cmd_search->parsed()) return run_search(se);
        return run_export(ex);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nfsr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
