#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eislat/gamma_group.hpp"

namespace eislat::io {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinates are sums of signed terms: an integer, an optional integer
/// times w (ω) or wb (ω̄), with an optional '*': "3", "-1+2w", "2-wb", "1+2*w".
EisInt parse_eis(std::string_view s);
/// Either one argument per coordinate or a single comma-separated list.
EVec parse_vector(const std::vector<std::string>& args);

/// Eisenstein integers as [a, b] for a + bω; entries beyond 64 bits are
/// written as decimal strings.
nlohmann::json to_json(const EisInt& x);
nlohmann::json to_json(const EVec& v);
nlohmann::json to_json(const EMat& m);
nlohmann::json to_json(const gamma::Word& w);
nlohmann::json to_json(const gamma::ReductionCertificate& c);

EisInt eis_from_json(const nlohmann::json& j);
EVec vec_from_json(const nlohmann::json& j);

}  // namespace eislat::io
