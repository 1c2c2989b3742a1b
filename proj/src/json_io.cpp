#include "waring/json_io.hpp"

#include <fstream>
#include <sstream>

#include "waring/version.hpp"

namespace waring {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError(std::string("bad type for field \"") + key + "\"");
    }
}

Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw FormatError("rational must be a \"p/q\" string");
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::vector<Rational> rationals_from(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from(e));
    return out;
}

void put_optional_form(Json& j, const char* key, const std::optional<BinaryForm>& f) {
    if (f) j[key] = form_to_json(*f);
}

std::optional<BinaryForm> optional_form(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return form_from_json(j.at(key));
}

void check_schema(const Json& j) {
    if (get<int>(j, "schema") != kSchemaVersion)
        throw FormatError("unsupported schema version " + std::to_string(get<int>(j, "schema")));
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- forms

Json form_to_json(const BinaryForm& f, Basis basis) {
    Json j;
    j["degree"] = f.degree();
    j["basis"] = basis == Basis::monomial ? "monomial" : "normalized";
    j["coeffs"] = rationals_to_json(basis == Basis::monomial ? f.monomial() : f.normalized());
    return j;
}

BinaryForm form_from_json(const Json& j) {
    const int degree = get<int>(j, "degree");
    const std::string basis = get<std::string>(j, "basis");
    if (!j.contains("coeffs")) throw FormatError("missing field \"coeffs\"");
    std::vector<Rational> coeffs;
    try {
        coeffs = rationals_from(j.at("coeffs"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad coefficient: ") + e.what());
    }
    Basis b;
    if (basis == "monomial") b = Basis::monomial;
    else if (basis == "normalized") b = Basis::normalized;
    else throw FormatError("basis must be \"monomial\" or \"normalized\"");
    try {
        return BinaryForm::make(degree, std::move(coeffs), b);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

BinaryForm load_form(const std::string& path_or_inline) {
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    const bool is_inline = first != std::string::npos && path_or_inline[first] == '{';
    return form_from_json(parse_json(is_inline ? path_or_inline : read_text_file(path_or_inline)));
}

// ---------------------------------------------------------------- certificates

Json certificate_to_json(const RankCertificate& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["degree"] = c.degree;
    j["complex_rank"] = c.complex_rank;
    j["real_lo"] = c.real_lo;
    j["real_hi"] = c.real_hi;
    j["exact"] = c.exact;
    j["label"] = c.label();
    j["route"] = c.route;
    j["nongeneric_stratum"] = c.nongeneric_stratum;
    Json ce;
    ce["first_kernel_degree"] = c.complex_evidence.first_kernel_degree;
    ce["kernel_dim"] = c.complex_evidence.kernel_dim;
    ce["squarefree_witness"] =
        c.complex_evidence.squarefree_witness ? form_to_json(*c.complex_evidence.squarefree_witness) : Json(nullptr);
    j["complex_evidence"] = ce;
    Json ev = Json::array();
    for (const auto& e : c.evidence) {
        Json item;
        item["kind"] = to_string(e.kind);
        item["degree"] = e.degree;
        if (e.kind == RankEvidence::Kind::not_exists) item["kernel_dim"] = e.kernel_dim;
        item["basis"] = e.theorem_backed() ? "theorem" : "exact";
        put_optional_form(item, "witness", e.witness);
        put_optional_form(item, "linear", e.linear);
        put_optional_form(item, "image", e.image);
        ev.push_back(item);
    }
    j["evidence"] = ev;
    return j;
}

RankCertificate certificate_from_json(const Json& j) {
    check_schema(j);
    RankCertificate c;
    c.degree = get<int>(j, "degree");
    c.complex_rank = get<int>(j, "complex_rank");
    c.real_lo = get<int>(j, "real_lo");
    c.real_hi = get<int>(j, "real_hi");
    c.exact = get<bool>(j, "exact");
    c.route = j.value("route", "");
    c.nongeneric_stratum = j.value("nongeneric_stratum", false);
    const Json& ce = j.at("complex_evidence");
    c.complex_evidence.first_kernel_degree = get<int>(ce, "first_kernel_degree");
    c.complex_evidence.kernel_dim = get<int>(ce, "kernel_dim");
    c.complex_evidence.squarefree_witness = optional_form(ce, "squarefree_witness");
    if (!j.contains("evidence") || !j.at("evidence").is_array()) throw FormatError("missing evidence list");
    for (const auto& item : j.at("evidence")) {
        RankEvidence e;
        try {
            e.kind = parse_evidence_kind(get<std::string>(item, "kind"));
        } catch (const FormatError&) {
            throw;
        } catch (const std::invalid_argument& ex) {
            throw FormatError(ex.what());
        }
        e.degree = get<int>(item, "degree");
        e.kernel_dim = item.value("kernel_dim", 0);
        e.witness = optional_form(item, "witness");
        e.linear = optional_form(item, "linear");
        e.image = optional_form(item, "image");
        c.evidence.push_back(std::move(e));
    }
    return c;
}

// ---------------------------------------------------------------- witnesses

Json witness_to_json(const WitnessForm& w) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = to_string(w.provenance);
    j["degree"] = w.form.degree();
    j["form"] = form_to_json(w.form);
    j["certified"] = {{"complex_rank", w.certified_complex_rank}, {"real_rank", w.certified_real_rank}};
    Json checks = Json::array();
    for (const auto& c : w.checks) checks.push_back({{"name", c.name}, {"value", c.value}});
    j["checks"] = checks;

    const WitnessParams& p = w.params;
    Json params;
    params["seed"] = p.seed;
    if (!p.roots.empty()) params["roots"] = rationals_to_json(p.roots);
    put_optional_form(params, "w", p.w);
    put_optional_form(params, "s", p.s);
    if (!p.combination.empty()) params["combination"] = rationals_to_json(p.combination);
    put_optional_form(params, "f", p.f);
    if (!p.points.empty()) params["points"] = rationals_to_json(p.points);
    if (!p.coefficients.empty()) params["coefficients"] = rationals_to_json(p.coefficients);
    if (p.c) params["c"] = to_string(*p.c);
    if (p.T) params["T"] = to_string(*p.T);
    if (p.eta_hat) params["eta_hat"] = to_string(*p.eta_hat);
    j["params"] = params;
    j["certificate"] = certificate_to_json(w.certificate);
    return j;
}

WitnessForm witness_from_json(const Json& j) {
    check_schema(j);
    WitnessForm w;
    try {
        w.provenance = parse_provenance(get<std::string>(j, "kind"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    w.form = form_from_json(j.at("form"));
    if (get<int>(j, "degree") != w.form.degree()) throw FormatError("degree does not match form");
    const Json& certified = j.at("certified");
    w.certified_complex_rank = get<int>(certified, "complex_rank");
    w.certified_real_rank = get<int>(certified, "real_rank");
    for (const auto& c : j.at("checks")) w.checks.push_back({get<std::string>(c, "name"), get<bool>(c, "value")});

    const Json& p = j.at("params");
    w.params.seed = get<std::uint64_t>(p, "seed");
    if (p.contains("roots")) w.params.roots = rationals_from(p.at("roots"));
    w.params.w = optional_form(p, "w");
    w.params.s = optional_form(p, "s");
    if (p.contains("combination")) w.params.combination = rationals_from(p.at("combination"));
    w.params.f = optional_form(p, "f");
    if (p.contains("points")) w.params.points = rationals_from(p.at("points"));
    if (p.contains("coefficients")) w.params.coefficients = rationals_from(p.at("coefficients"));
    if (p.contains("c")) w.params.c = rational_from(p.at("c"));
    if (p.contains("T")) w.params.T = rational_from(p.at("T"));
    if (p.contains("eta_hat")) w.params.eta_hat = rational_from(p.at("eta_hat"));
    w.certificate = certificate_from_json(j.at("certificate"));
    return w;
}

Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["precision_bits"] = d.precision_bits;
    j["refinements"] = d.refinements;
    j["residual"] = d.residual.to_string();
    Json terms = Json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"coefficient", t.coefficient.to_string()}, {"alpha", t.alpha.to_string()}, {"beta", t.beta.to_string()}});
    j["terms"] = terms;
    return j;
}

// ---------------------------------------------------------------- census config

Json config_to_json(const CensusConfig& c) {
    Json j;
    j["degree"] = c.degree;
    j["samples"] = c.samples;
    j["master_seed"] = c.master_seed;
    j["distribution"] = to_string(c.distribution);
    j["bits"] = c.bits;
    j["trials"] = c.trials;
    j["stability_eps"] = to_string(c.stability_eps);
    j["stability_probes"] = c.stability_probes;
    j["resample_on_reject"] = c.resample_on_reject;
    j["record_timing"] = c.record_timing;
    return j;
}

CensusConfig config_from_json(const Json& j) {
    CensusConfig c;
    c.degree = get<int>(j, "degree");
    c.samples = get<long>(j, "samples");
    c.master_seed = get<std::uint64_t>(j, "master_seed");
    try {
        c.distribution = parse_distribution(get<std::string>(j, "distribution"));
        c.stability_eps = parse_rational(get<std::string>(j, "stability_eps"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    c.bits = get<unsigned>(j, "bits");
    c.trials = get<int>(j, "trials");
    c.stability_probes = get<int>(j, "stability_probes");
    c.resample_on_reject = get<bool>(j, "resample_on_reject");
    c.record_timing = get<bool>(j, "record_timing");
    return c;
}

}  // namespace waring
