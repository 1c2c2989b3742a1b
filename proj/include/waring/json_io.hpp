#ifndef WARING_JSON_IO_HPP
#define WARING_JSON_IO_HPP

#include "json.hpp"

#include "waring/census.hpp"
#include "waring/forms.hpp"
#include "waring/rank.hpp"
#include "waring/witnesses.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"degree": d, "basis": "monomial"|"normalized", "coeffs": ["p/q", ...]}
Json form_to_json(const BinaryForm& f, Basis basis = Basis::monomial);
BinaryForm form_from_json(const Json& j);
/// Parses inline JSON text, or reads the file when `text` does not start
/// with '{'.
BinaryForm load_form(const std::string& path_or_inline);

Json certificate_to_json(const RankCertificate& c);
RankCertificate certificate_from_json(const Json& j);

Json witness_to_json(const WitnessForm& w);
WitnessForm witness_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);

Json config_to_json(const CensusConfig& c);
CensusConfig config_from_json(const Json& j);

/// Parses JSON text, wrapping library errors in FormatError.
Json parse_json(const std::string& text);
/// Reads a whole file; throws FormatError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace waring

#endif  // WARING_JSON_IO_HPP
