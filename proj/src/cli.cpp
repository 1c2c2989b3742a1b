#include "waring/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "waring/census.hpp"
#include "waring/json_io.hpp"
#include "waring/rank.hpp"
#include "waring/version.hpp"
#include "waring/witnesses.hpp"

namespace waring {

namespace {

// Internal consistency failure: exit code 2.
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    // shared
    std::string form;
    int trials = kDefaultSearchTrials;
    std::uint64_t seed = 0;
    bool verbose = false;
    // witness
    std::string kind;
    int degree = 0;
    std::string w, s;
    std::string out_path;
    // census
    long samples = 100;
    std::string format = "json";
    int jobs = 1;
    std::string distribution = "uniform_normalized";
    int probes = 0;
    bool resample = false;
    bool timing = false;
    // decompose
    std::string witness;
    int precision = 128;
};

void log_config(std::ostream& err, const std::string& command, const Json& config) {
    err << "waring " << kVersion << " " << command << " " << config.dump() << "\n";
}

void emit(std::ostream& out, const Json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) throw std::invalid_argument("cannot write " + path);
}

int cmd_rank(const Options& o, std::ostream& out, std::ostream& err) {
    log_config(err, "rank", {{"form", o.form}, {"trials", o.trials}, {"seed", o.seed}});
    BinaryForm f = load_form(o.form);
    if (f.is_zero()) throw std::invalid_argument("form is zero");
    if (f.degree() < 1) throw std::invalid_argument("form degree must be at least 1");
    if (!is_squarefree(f)) throw std::invalid_argument("form is not squarefree");
    RankCertificate cert = classify(f, o.trials, o.seed);
    if (auto bad = verify_certificate(f, cert)) throw CheckFailure("certificate self-check failed: " + *bad);
    emit(out, certificate_to_json(cert), o.out_path);
    return kExitOk;
}

std::optional<BinaryForm> optional_form_arg(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return load_form(text);
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    log_config(err, "witness", {{"kind", o.kind}, {"degree", o.degree}, {"seed", o.seed}, {"w", o.w}, {"s", o.s}});
    WitnessForm w;
    if (o.kind == "hyperbolic") {
        w = witness_hyperbolic(o.degree, o.seed);
    } else if (o.kind == "generic-span") {
        w = witness_generic_span(o.degree, o.seed, optional_form_arg(o.s));
    } else if (o.kind == "intersection") {
        w = witness_intersection(o.degree, optional_form_arg(o.w), optional_form_arg(o.s));
    } else if (o.kind == "dminus1") {
        w = witness_dminus1(o.degree, o.seed);
    } else {
        throw std::invalid_argument("unknown witness kind: " + o.kind);
    }
    if (auto bad = verify_witness(w)) throw CheckFailure("witness self-check failed: " + *bad);
    emit(out, witness_to_json(w), o.out_path);
    return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
    CensusConfig cfg;
    cfg.degree = o.degree;
    cfg.samples = o.samples;
    cfg.master_seed = o.seed;
    cfg.distribution = parse_distribution(o.distribution);
    cfg.trials = o.trials;
    cfg.stability_probes = o.probes;
    cfg.resample_on_reject = o.resample;
    cfg.record_timing = o.timing;
    if (o.format != "json" && o.format != "csv") throw std::invalid_argument("format must be json or csv");
    if (o.out_path.empty()) throw std::invalid_argument("--out is required");
    Json logged = config_to_json(cfg);
    logged["jobs"] = o.jobs;
    logged["format"] = o.format;
    logged["out"] = o.out_path;
    log_config(err, "census", logged);

    // Fail on an unwritable path before spending the run.
    {
        std::ofstream probe(o.out_path, std::ios::binary | std::ios::app);
        if (!probe) throw std::invalid_argument("cannot write " + o.out_path);
    }
    const auto start = std::chrono::steady_clock::now();
    CensusReport report = run_census(cfg, o.jobs);
    if (o.verbose)
        err << "elapsed "
            << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            << " ms\n";
    try {
        write_report(report, o.out_path, o.format == "json" ? ReportFormat::json : ReportFormat::csv);
    } catch (const ReportError& e) {
        throw std::invalid_argument(e.what());
    }
    out << std::left << std::setw(24) << "outcome" << "count\n";
    for (const auto& [label, n] : report.counts) out << std::setw(24) << label << n << "\n";
    out << std::setw(24) << "total" << report.total() << "\n";
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
    log_config(err, "decompose",
               {{"form", o.form}, {"witness", o.witness}, {"precision", o.precision}, {"seed", o.seed}});
    BinaryForm f = load_form(o.form);
    if (f.is_zero() || !is_squarefree(f)) throw std::invalid_argument("form must be nonzero and squarefree");
    BinaryForm h;
    if (!o.witness.empty()) {
        h = load_form(o.witness);
    } else {
        RankCertificate cert = classify(f, o.trials, o.seed);
        const RankEvidence* best = nullptr;
        for (const auto& e : cert.evidence)
            if (e.kind == RankEvidence::Kind::hyperbolic_apolar && (!best || e.degree < best->degree)) best = &e;
        if (best) {
            h = *best->witness;
        } else {
            // Ranks certified without a witness: search at the upper bound.
            HypDecision dec = search_witness(apolar_kernel(f, cert.real_hi), o.trials, o.seed);
            if (!dec.exists()) throw std::invalid_argument("no hyperbolic apolar form found; pass --witness");
            h = *dec.witness;
        }
    }
    Decomposition d;
    try {
        d = decompose(f, h, o.precision);
    } catch (const std::runtime_error& e) {
        throw CheckFailure(e.what());
    }
    Json j = decomposition_to_json(d);
    j["witness"] = form_to_json(h);
    emit(out, j, o.out_path);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    log_config(err, "verify", {{"witness", o.witness}});
    WitnessForm w = witness_from_json(parse_json(read_text_file(o.witness)));
    if (auto bad = verify_witness(w)) {
        err << "verification failed: " << *bad << "\n";
        out << Json({{"verified", false}, {"failed_check", *bad}}).dump() << "\n";
        return kExitCheckFailure;
    }
    out << Json({{"verified", true}, {"kind", to_string(w.provenance)}, {"checks", w.checks.size()}}).dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact real and complex Waring ranks of binary forms", "waring"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto* rank = app.add_subcommand("rank", "Certify the real and complex rank of a form");
    rank->add_option("--form", o.form, "Form JSON file or inline JSON")->required();
    rank->add_option("--trials", o.trials, "Search trials for kernels of dimension >= 3");
    rank->add_option("--seed", o.seed, "Search seed");
    rank->add_option("--out", o.out_path, "Write the certificate here instead of stdout");

    auto* witness = app.add_subcommand("witness", "Construct a certified witness form");
    witness->add_option("--kind", o.kind, "hyperbolic | generic-span | intersection | dminus1")
        ->required()
        ->check(CLI::IsMember({"hyperbolic", "generic-span", "intersection", "dminus1"}));
    witness->add_option("--degree", o.degree, "Degree d")->required();
    witness->add_option("--seed", o.seed, "Construction seed");
    witness->add_option("--w", o.w, "intersection: form of degree m+1 with a quadratic factor");
    witness->add_option("--s", o.s, "generic-span, intersection: hyperbolic support form");
    witness->add_option("--out", o.out_path, "Write the witness here instead of stdout");

    auto* census = app.add_subcommand("census", "Seeded rank census over random forms");
    census->add_option("--degree", o.degree, "Degree d")->required();
    census->add_option("--samples", o.samples, "Number of samples");
    census->add_option("--seed", o.seed, "Master seed");
    census->add_option("--out", o.out_path, "Report path")->required();
    census->add_option("--format", o.format, "json | csv");
    census->add_option("--jobs", o.jobs, "Worker threads");
    census->add_option("--distribution", o.distribution, "uniform_normalized | uniform_rational | gauss_approx");
    census->add_option("--trials", o.trials, "Search trials per kernel");
    census->add_option("--stability-probes", o.probes, "Perturbation probes per sample");
    census->add_flag("--resample", o.resample, "Redraw non-squarefree samples");
    census->add_flag("--timing", o.timing, "Record elapsed_ms in the report");
    census->add_flag("--verbose", o.verbose, "Log wall time to stderr");

    auto* decomp = app.add_subcommand("decompose", "Numerical decomposition along a hyperbolic apolar form");
    decomp->add_option("--form", o.form, "Form JSON file or inline JSON")->required();
    decomp->add_option("--witness", o.witness, "Hyperbolic apolar form (default: from the rank certificate)");
    decomp->add_option("--precision", o.precision, "Precision in bits");
    decomp->add_option("--trials", o.trials, "Search trials when no witness is given");
    decomp->add_option("--seed", o.seed, "Search seed when no witness is given");
    decomp->add_option("--out", o.out_path, "Write here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Re-verify a serialized witness from scratch");
    verify->add_option("--witness", o.witness, "Witness JSON file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    }

    try {
        if (*rank) return cmd_rank(o, out, err);
        if (*witness) return cmd_witness(o, out, err);
        if (*census) return cmd_census(o, out, err);
        if (*decomp) return cmd_decompose(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
    } catch (const HypothesisFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const CheckFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUserError;
}

}  // namespace waring
