#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "waring/census.hpp"
#include "waring/rng.hpp"
#include "waring/version.hpp"

using namespace waring;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("waring_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CensusConfig small(int degree, long n, std::uint64_t seed) {
    CensusConfig c;
    c.degree = degree;
    c.samples = n;
    c.master_seed = seed;
    c.trials = 40;
    return c;
}

}  // namespace

TEST_CASE("seed derivation") {
    CHECK(derive_seed(7, 3) == mix64(7 ^ mix64(3)));
    CHECK(derive_seed(7, 3) != derive_seed(7, 4));
    Rng a(5), b(5);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        auto v = c.uniform_int(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        CHECK(c.nonzero_dyadic(4) != 0);
    }
}

TEST_CASE("d = 5 census: all typical ranks appear, every sample exact") {
    CensusReport r = run_census(small(5, 150, 1));
    CHECK(r.total() == 150);
    CHECK(r.counts["3"] > 0);
    CHECK(r.counts["4"] > 0);
    CHECK(r.counts["5"] > 0);
    for (const auto& [label, n] : r.counts) CHECK_MESSAGE(label.find('[') == std::string::npos, label);
    // branch telemetry matches the tally
    CHECK(r.telemetry["d5_kernel_cubic_hyperbolic"] == r.counts["3"]);
    CHECK(r.examples["3"].size() <= kExamplesPerLabel);
}

TEST_CASE("census is independent of worker count") {
    CensusConfig cfg = small(6, 40, 9);
    CensusReport one = run_census(cfg, 1);
    CensusReport three = run_census(cfg, 3);
    CHECK(one == three);
    CHECK(render_report(one, ReportFormat::json) == render_report(three, ReportFormat::json));
    CHECK(one.total() == 40);
}

TEST_CASE("rejections and resampling") {
    CensusConfig cfg = small(4, 60, 3);
    cfg.bits = 1;  // coarse coefficients hit the discriminant often
    CensusReport plain = run_census(cfg);
    const long rejected = plain.counts.count(kRejectedLabel) ? plain.counts.at(kRejectedLabel) : 0;
    CHECK(rejected > 0);
    CHECK(plain.total() == 60);

    cfg.resample_on_reject = true;
    CensusReport again = run_census(cfg);
    long classified = 0;
    for (const auto& [label, n] : again.counts)
        if (label != kRejectedLabel) classified += n;
    CHECK(classified == 60);
}

TEST_CASE("stability_probe") {
    BinaryForm h = th::from_roots({1, 2, 3, 4, 5});
    CHECK(stability_probe(h, classify(h), Rational(1, 65536), 20, 4));

    // A large eps may fail; the answer only has to be reproducible.
    BinaryForm near = th::from_roots({1, 2, 3, 4}) * th::circle();
    RankCertificate c = classify(near);
    CHECK(stability_probe(near, c, Rational(1), 10, 4) == stability_probe(near, c, Rational(1), 10, 4));
}

TEST_CASE("report round trip in both formats") {
    CensusConfig cfg = small(5, 30, 2);
    cfg.stability_probes = 1;
    CensusReport r = run_census(cfg);
    CHECK(r.stability_checked > 0);

    auto json_path = temp_file("report.json");
    write_report(r, json_path.string(), ReportFormat::json);
    CHECK(read_report(json_path.string()) == r);

    auto csv_path = temp_file("report.csv");
    write_report(r, csv_path.string(), ReportFormat::csv);
    CensusReport back = read_report(csv_path.string());
    CHECK(back.counts == r.counts);
    CHECK(back.config == r.config);
    CHECK(back.version == kVersion);

    // one data row per outcome label
    std::istringstream lines(slurp(csv_path));
    std::string line;
    int rows = 0;
    bool past_header = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!past_header) {
            past_header = true;
            continue;
        }
        ++rows;
    }
    CHECK(rows == static_cast<int>(r.counts.size()));
    std::filesystem::remove(json_path);
    std::filesystem::remove(csv_path);
}

TEST_CASE("bracket labels survive CSV") {
    CensusReport r;
    r.version = kVersion;
    r.counts["[5,6]"] = 3;
    r.counts["4"] = 1;
    CHECK(parse_report(render_report(r, ReportFormat::csv)).counts == r.counts);
}

TEST_CASE("schema mismatch is an explicit error") {
    CensusReport r = run_census(small(5, 3, 0));
    std::string json = render_report(r, ReportFormat::json);
    const std::string key = "\"schema\": " + std::to_string(kSchemaVersion);
    REQUIRE(json.find(key) != std::string::npos);
    json.replace(json.find(key), key.size(), "\"schema\": " + std::to_string(kSchemaVersion + 1));
    CHECK_THROWS_AS(parse_report(json), ReportError);

    std::string csv = render_report(r, ReportFormat::csv);
    csv.replace(csv.find("# schema=1"), 10, "# schema=2");
    CHECK_THROWS_AS(parse_report(csv), ReportError);

    CHECK_THROWS_AS(parse_report("{not json"), ReportError);
    CHECK_THROWS_AS(read_report("/nonexistent/dir/report.json"), ReportError);
    CHECK_THROWS_AS(write_report(r, "/nonexistent/dir/report.json", ReportFormat::json), ReportError);
}

TEST_CASE("bad configs are rejected") {
    CHECK_THROWS_AS(run_census(small(5, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(run_census(small(0, 5, 0)), std::invalid_argument);
}
