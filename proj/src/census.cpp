#include "waring/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "waring/json_io.hpp"
#include "waring/rng.hpp"
#include "waring/version.hpp"

namespace waring {

long CensusReport::total() const {
    long n = 0;
    for (const auto& [label, count] : counts) n += count;
    return n;
}

namespace {

// Stream tags so that per-sample sub-streams never collide.
constexpr std::uint64_t kClassifyStream = 0xC1A55;
constexpr std::uint64_t kProbeStream = 0x57AB;
constexpr std::uint64_t kResampleStream = 0x5E5A;
constexpr int kMaxResamples = 100;

struct SampleResult {
    std::uint64_t seed = 0;
    std::string label;
    long rejections = 0;
    std::vector<std::string> telemetry;
    bool probed = false;
    bool stable = false;
};

SampleResult run_sample(const CensusConfig& cfg, std::uint64_t index) {
    SampleResult out;
    out.seed = derive_seed(cfg.master_seed, index);
    std::uint64_t draw_seed = out.seed;
    BinaryForm f = random_form(cfg.degree, cfg.distribution, draw_seed, cfg.bits);
    int attempt = 0;
    while (f.is_zero() || discriminant(f) == 0) {
        ++out.rejections;
        if (!cfg.resample_on_reject || ++attempt > kMaxResamples) {
            out.label = kRejectedLabel;
            return out;
        }
        draw_seed = derive_seed(out.seed ^ kResampleStream, static_cast<std::uint64_t>(attempt));
        f = random_form(cfg.degree, cfg.distribution, draw_seed, cfg.bits);
    }
    try {
        RankCertificate cert = classify(f, cfg.trials, derive_seed(out.seed, kClassifyStream));
        out.label = cert.nongeneric_stratum ? kNongenericLabel : cert.label();
        out.telemetry.push_back("route:" + cert.route);
        if (cert.route == "classify_d5") {
            bool cubic = false;
            for (const auto& e : cert.evidence)
                cubic = cubic || (e.kind == RankEvidence::Kind::hyperbolic_apolar && e.degree == 3);
            if (cubic) out.telemetry.push_back("d5_kernel_cubic_hyperbolic");
        }
        if (cfg.stability_probes > 0 && !cert.nongeneric_stratum) {
            out.probed = true;
            out.stable = stability_probe(f, cert, cfg.stability_eps, cfg.stability_probes,
                                         derive_seed(out.seed, kProbeStream), cfg.trials);
        }
    } catch (const std::exception&) {
        out.label = "internal_error";
    }
    return out;
}

}  // namespace

CensusReport run_census(const CensusConfig& config, int jobs) {
    if (config.samples < 1) throw std::invalid_argument("census: samples must be at least 1");
    if (config.degree < 1) throw std::invalid_argument("census: degree must be at least 1");
    const auto start = std::chrono::steady_clock::now();

    const std::size_t n = static_cast<std::size_t>(config.samples);
    std::vector<SampleResult> results(n);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = run_sample(config, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) results[i] = run_sample(config, i);
            });
        for (auto& t : pool) t.join();
    }

    // Merge strictly in sample order.
    CensusReport report;
    report.schema = kSchemaVersion;
    report.version = kVersion;
    report.config = config;
    for (const auto& r : results) {
        if (r.rejections > 0) report.counts[kRejectedLabel] += r.rejections;
        if (r.label != kRejectedLabel) ++report.counts[r.label];
        auto& ex = report.examples[r.label];
        if (ex.size() < kExamplesPerLabel) ex.push_back(r.seed);
        for (const auto& t : r.telemetry) ++report.telemetry[t];
        if (r.probed) {
            ++report.stability_checked;
            if (r.stable) ++report.stability_passed;
        }
    }
    if (config.record_timing)
        report.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool stability_probe(const BinaryForm& f, const RankCertificate& cert, const Rational& eps, int probes,
                     std::uint64_t seed, int trials) {
    const int d = f.degree();
    const Rational scale = eps / Rational(1 << 20);
    for (int k = 0; k < probes; ++k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        std::vector<Rational> p = f.monomial();
        for (auto& c : p) c += scale * Rational(rng.uniform_int(-(1 << 20), 1 << 20));
        BinaryForm g = BinaryForm::from_monomial(std::move(p));
        if (g.is_zero() || discriminant(g) == 0) return false;
        RankCertificate c = classify(g, trials, derive_seed(seed ^ kProbeStream, static_cast<std::uint64_t>(k)));
        if (cert.exact && d != 7) {
            if (!c.exact || c.real_lo != cert.real_lo) return false;
        } else if (cert.exact) {
            if (cert.real_lo < c.real_lo || cert.real_lo > c.real_hi) return false;
        } else if (c.real_hi < cert.real_lo || c.real_lo > cert.real_hi) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- persistence

std::string render_report(const CensusReport& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        Json j;
        j["schema"] = r.schema;
        j["version"] = r.version;
        j["config"] = config_to_json(r.config);
        j["counts"] = Json::object();
        for (const auto& [label, n] : r.counts) j["counts"][label] = n;
        j["examples"] = Json::object();
        for (const auto& [label, seeds] : r.examples) j["examples"][label] = seeds;
        j["telemetry"] = Json::object();
        for (const auto& [key, n] : r.telemetry) j["telemetry"][key] = n;
        j["stability"] = {{"checked", r.stability_checked}, {"passed", r.stability_passed}};
        j["elapsed_ms"] = r.elapsed_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# schema=" << r.schema << "\n";
    out << "# version=" << r.version << "\n";
    out << "# config=" << config_to_json(r.config).dump() << "\n";
    out << "# elapsed_ms=" << r.elapsed_ms << "\n";
    out << "outcome,count\n";
    for (const auto& [label, n] : r.counts) {
        // Bracket labels contain a comma.
        if (label.find(',') != std::string::npos) out << '"' << label << '"';
        else out << label;
        out << ',' << n << "\n";
    }
    return out.str();
}

void write_report(const CensusReport& report, const std::string& path, ReportFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ReportError("cannot write report to " + path);
    out << render_report(report, format);
    if (!out) throw ReportError("write failed for " + path);
}

namespace {

CensusReport parse_json_report(const std::string& text) {
    Json j;
    try {
        j = parse_json(text);
        CensusReport r;
        r.schema = j.at("schema").get<int>();
        if (r.schema != kSchemaVersion) throw ReportError("unsupported report schema " + std::to_string(r.schema));
        r.version = j.value("version", "");
        r.config = config_from_json(j.at("config"));
        for (const auto& [label, n] : j.at("counts").items()) r.counts[label] = n.get<long>();
        for (const auto& [label, seeds] : j.at("examples").items())
            r.examples[label] = seeds.get<std::vector<std::uint64_t>>();
        if (j.contains("telemetry"))
            for (const auto& [key, n] : j.at("telemetry").items()) r.telemetry[key] = n.get<long>();
        if (j.contains("stability")) {
            r.stability_checked = j.at("stability").at("checked").get<long>();
            r.stability_passed = j.at("stability").at("passed").get<long>();
        }
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const ReportError&) {
        throw;
    } catch (const std::exception& e) {
        throw ReportError(std::string("malformed report: ") + e.what());
    }
}

CensusReport parse_csv_report(const std::string& text) {
    CensusReport r;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false, schema_seen = false, config_seen = false;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') {
                const auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
                if (key == "schema") {
                    r.schema = std::stoi(value);
                    schema_seen = true;
                    if (r.schema != kSchemaVersion)
                        throw ReportError("unsupported report schema " + std::to_string(r.schema));
                } else if (key == "version") {
                    r.version = value;
                } else if (key == "config") {
                    r.config = config_from_json(parse_json(value));
                    config_seen = true;
                } else if (key == "elapsed_ms") {
                    r.elapsed_ms = std::stoll(value);
                }
                continue;
            }
            if (!header_seen) {
                if (line != "outcome,count") throw ReportError("missing outcome,count header");
                header_seen = true;
                continue;
            }
            const auto comma = line.rfind(',');
            if (comma == std::string::npos) throw ReportError("bad row: " + line);
            std::string label = line.substr(0, comma);
            if (label.size() >= 2 && label.front() == '"' && label.back() == '"') label = label.substr(1, label.size() - 2);
            r.counts[label] = std::stol(line.substr(comma + 1));
        }
    } catch (const ReportError&) {
        throw;
    } catch (const std::exception& e) {
        throw ReportError(std::string("malformed report: ") + e.what());
    }
    if (!schema_seen || !config_seen || !header_seen) throw ReportError("malformed report: missing header lines");
    return r;
}

}  // namespace

CensusReport parse_report(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_report(text);
    return parse_csv_report(text);
}

CensusReport read_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ReportError("cannot read report " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_report(ss.str());
}

}  // namespace waring
