#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qspectra/explorer.hpp"
#include "qspectra/io.hpp"
#include "qspectra/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int resolve_threads(const std::optional<int>& flag) {
    if (flag) {
        if (*flag < 1) throw UsageError("--threads must be at least 1");
        return *flag;
    }
    if (const char* env = std::getenv("QSPECTRA_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 4096) throw UsageError(std::string("bad QSPECTRA_THREADS value '") + env + "'");
        return static_cast<int>(v);
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

qspectra::ValueKind kind_from_flag(const std::string& token) {
    if (token == "two") return qspectra::ValueKind::two_valued_pm1;
    if (token == "three") return qspectra::ValueKind::three_valued_omega;
    if (token == "bool") return qspectra::ValueKind::boolean01;
    return qspectra::parse_kind(token);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad list entry '" + item + "'");
        }
        if (used != item.size()) throw UsageError("bad list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

struct AnalyzeArgs {
    std::string input;
    std::string output;
};

struct VerifyArgs {
    std::vector<std::string> laws;
    int q = 0;
    int n = 0;
    std::string kind;
    bool exhaustive = false;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    std::size_t top = 10;
    std::string output;
};

struct GenArgs {
    std::string family;
    std::optional<int> q;
    std::optional<int> n;
    int m = 1;
    int index = 1;
    std::int64_t value = 1;
    std::string kind = "pm1";
    std::string z;
    std::uint64_t seed = 0;
    std::string output;
};

struct SpectrumArgs {
    std::string input;
    std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
    const qspectra::DiscreteFunction f = qspectra::read_truth_table(args.input);
    const qspectra::AnalysisReport report = qspectra::analyze(f);
    emit(qspectra::dump_json(report.document), args.output);
    return report.violation ? kExitViolations : kExitOk;
}

int run_verify(const VerifyArgs& args, int threads) {
    if (args.exhaustive == args.samples.has_value()) {
        throw UsageError("give exactly one of --exhaustive or --samples");
    }
    qspectra::Corpus corpus;
    corpus.spec = qspectra::DomainSpec(args.q, args.n);
    corpus.kind = kind_from_flag(args.kind);
    corpus.exhaustive = args.exhaustive;
    corpus.count = args.samples.value_or(0);
    corpus.seed = args.seed;

    qspectra::SweepOptions options;
    options.threads = threads;
    options.top_k = args.top;
    const bool all = args.laws.empty() || (args.laws.size() == 1 && args.laws[0] == "all");
    if (all) {
        for (qspectra::Law law : qspectra::all_laws()) {
            if (qspectra::law_applicable(law, corpus.kind, args.q)) options.laws.push_back(law);
        }
    } else {
        for (const auto& token : args.laws) options.laws.push_back(qspectra::parse_law(token));
    }
    const qspectra::SweepSummary summary = qspectra::sweep(corpus, options);
    emit(qspectra::dump_json(qspectra::sweep_report(summary)), args.output);
    return summary.total_violations() == 0 ? kExitOk : kExitViolations;
}

int run_gen(const GenArgs& args) {
    using qspectra::DomainSpec;
    std::optional<qspectra::DiscreteFunction> f;
    const auto need = [](const std::optional<int>& v, const char* flag) {
        if (!v) throw UsageError(std::string("family needs ") + flag);
        return *v;
    };
    if (args.family == "fm" || args.family == "fm_pm1") {
        if (args.q && *args.q != 4) throw UsageError("family fm is defined for q = 4 only");
        const int n = args.n.value_or(args.m);
        f = args.family == "fm" ? qspectra::gen_fm(args.m, n) : qspectra::gen_fm_pm1(args.m, n);
    } else if (args.family == "character") {
        const std::vector<int> z = parse_list(args.z);
        qspectra::FamilyParams params;
        params.z = z;
        const DomainSpec spec(need(args.q, "--q"), static_cast<int>(z.size()));
        if (args.n && *args.n != spec.n()) throw UsageError("--n disagrees with the length of --z");
        f = qspectra::gen_named("character", spec, params);
    } else if (args.family == "random") {
        qspectra::Corpus corpus;
        corpus.spec = DomainSpec(need(args.q, "--q"), need(args.n, "--n"));
        corpus.kind = kind_from_flag(args.kind);
        corpus.exhaustive = false;
        corpus.count = 1;
        corpus.seed = args.seed;
        f = qspectra::random_function(corpus, 0);
    } else {
        qspectra::FamilyParams params;
        params.index = args.index - 1;
        params.value = args.value;
        params.kind = kind_from_flag(args.kind);
        const DomainSpec spec(args.q.value_or(2), need(args.n, "--n"));
        f = qspectra::gen_named(args.family, spec, params);
    }
    emit(qspectra::format_truth_table(*f), args.output);
    return kExitOk;
}

int run_spectrum(const SpectrumArgs& args) {
    const qspectra::DiscreteFunction f = qspectra::read_truth_table(args.input);
    emit(qspectra::spectrum_listing(f), args.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of functions on Z_q^n: transforms, degrees, sensitivity and bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<int> threads_flag;
    app.add_option("--threads", threads_flag, "Worker threads (default: $QSPECTRA_THREADS, else all cores)");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Full analysis report of a truth-table file (JSON)");
    analyze->add_option("input", analyze_args.input, "Truth-table file")->required();
    analyze->add_option("-o,--output", analyze_args.output, "Write the report here instead of stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check laws over an exhaustive or random corpus");
    verify->add_option("--law", verify_args.laws, "Law to check (repeatable; default: all applicable)");
    verify->add_option("--q", verify_args.q, "Alphabet size")->required();
    verify->add_option("--n", verify_args.n, "Number of variables")->required();
    verify->add_option("--kind", verify_args.kind, "two|three|bool or pm1|omega3|bool01|int|complex")->required();
    auto* exhaustive = verify->add_flag("--exhaustive", verify_args.exhaustive, "Every function of the kind");
    auto* samples = verify->add_option("--samples", verify_args.samples, "Number of seeded random functions");
    exhaustive->excludes(samples);
    verify->add_option("--seed", verify_args.seed, "Seed of the random corpus");
    verify->add_option("--top", verify_args.top, "Extremal records to keep");
    verify->add_option("-o,--output", verify_args.output, "Write the summary here instead of stdout");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write the truth table of a named family");
    gen->add_option("--family", gen_args.family,
                    "fm|fm_pm1|xor_all|jmath|dictator|majority|constant|character|random")
        ->required();
    gen->add_option("--q", gen_args.q, "Alphabet size");
    gen->add_option("--n", gen_args.n, "Number of variables");
    gen->add_option("--m", gen_args.m, "fm: number of factors");
    gen->add_option("--index", gen_args.index, "dictator: variable (1-based)");
    gen->add_option("--value", gen_args.value, "constant: value");
    gen->add_option("--kind", gen_args.kind, "constant/random: value kind");
    gen->add_option("--z", gen_args.z, "character: comma-separated residues");
    gen->add_option("--seed", gen_args.seed, "random: seed");
    gen->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "List the nonzero Fourier-Hadamard coefficients");
    spectrum->add_option("input", spectrum_args.input, "Truth-table file")->required();
    spectrum->add_option("-o,--output", spectrum_args.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*spectrum) return run_spectrum(spectrum_args);
        if (*gen) return run_gen(gen_args);
        if (*verify) return run_verify(verify_args, resolve_threads(threads_flag));
    } catch (const qspectra::ParseError& e) {
        std::cerr << "qspectra: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qspectra: error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
