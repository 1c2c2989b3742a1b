#ifndef WARING_CENSUS_HPP
#define WARING_CENSUS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/forms.hpp"
#include "waring/hypdecide.hpp"
#include "waring/rank.hpp"

namespace waring {

struct CensusConfig {
    int degree = 5;
    long samples = 100;
    std::uint64_t master_seed = 0;
    Distribution distribution = Distribution::uniform_normalized;
    unsigned bits = 20;
    int trials = kDefaultSearchTrials;
    Rational stability_eps = Rational(1, 65536);
    int stability_probes = 0;
    // Draw again (seed chain) after a non-squarefree sample instead of
    // only counting it; frequencies become conditional on squarefreeness.
    bool resample_on_reject = false;
    // Off by default so reports are byte-identical across runs.
    bool record_timing = false;

    friend bool operator==(const CensusConfig&, const CensusConfig&) = default;
};

inline constexpr const char* kRejectedLabel = "rejected_nonsquarefree";
inline constexpr const char* kNongenericLabel = "nongeneric_stratum";
inline constexpr std::size_t kExamplesPerLabel = 3;

struct CensusReport {
    int schema = 1;
    std::string version;
    CensusConfig config;
    std::map<std::string, long> counts;
    std::map<std::string, std::vector<std::uint64_t>> examples;  // sample seeds
    // Branch counters from the classifiers, e.g. "d5_kernel_cubic_hyperbolic".
    std::map<std::string, long> telemetry;
    long stability_checked = 0;
    long stability_passed = 0;
    std::int64_t elapsed_ms = 0;

    long total() const;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Classifies config.samples seeded forms; sample i uses
/// derive_seed(master_seed, i). The result does not depend on `jobs`.
CensusReport run_census(const CensusConfig& config, int jobs = 1);

/// Perturbs the monomial coefficients of f by seeded rationals of magnitude
/// at most eps and re-classifies `probes` times. True iff every probe keeps
/// the certified rank: equal exact rank at d != 7, containment at d = 7.
bool stability_probe(const BinaryForm& f, const RankCertificate& cert, const Rational& eps, int probes,
                     std::uint64_t seed, int trials = kDefaultSearchTrials);

enum class ReportFormat { json, csv };

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV holds the config as a comment header plus outcome,count rows; JSON
/// holds everything. Throws ReportError on I/O failure.
void write_report(const CensusReport& report, const std::string& path, ReportFormat format);
std::string render_report(const CensusReport& report, ReportFormat format);
/// Format detected from content. Throws ReportError on I/O failure,
/// malformed content or a schema mismatch.
CensusReport read_report(const std::string& path);
CensusReport parse_report(const std::string& text);

}  // namespace waring

#endif  // WARING_CENSUS_HPP
