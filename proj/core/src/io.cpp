#include "eislat/io.hpp"

#include <cctype>

namespace eislat::io {

namespace {

nlohmann::json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer");
}

}  // namespace

EisInt parse_eis(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty coordinate");

  Int a = 0, b = 0;
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in \"" + t + "\"");
    }
    first = false;
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    const bool has_digits = j > i;
    Int coeff = has_digits ? Int(t.substr(i, j - i)) : Int(1);
    i = j;
    bool star = false;
    if (i < t.size() && t[i] == '*') {
      if (!has_digits) throw ParseError("'*' without a coefficient in \"" + t + "\"");
      star = true;
      ++i;
    }
    coeff *= sign;
    if (t.compare(i, 2, "wb") == 0) {
      // ω̄ = −1 − ω.
      a -= coeff;
      b -= coeff;
      i += 2;
    } else if (i < t.size() && t[i] == 'w') {
      b += coeff;
      ++i;
    } else {
      if (!has_digits || star) throw ParseError("malformed term in \"" + t + "\"");
      a += coeff;
    }
  }
  return {a, b};
}

EVec parse_vector(const std::vector<std::string>& args) {
  std::vector<std::string> parts;
  if (args.size() == 1) {
    std::string cur;
    for (char c : args.front()) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  } else {
    parts = args;
  }
  EVec v;
  for (const auto& p : parts) v.push_back(parse_eis(p));
  return v;
}

nlohmann::json to_json(const EisInt& x) { return nlohmann::json::array({int_json(x.a()), int_json(x.b())}); }

nlohmann::json to_json(const EVec& v) {
  auto j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

nlohmann::json to_json(const EMat& m) {
  auto j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

nlohmann::json to_json(const gamma::Word& w) {
  auto tokens = nlohmann::json::array();
  for (const auto& t : w.tokens()) tokens.push_back({gamma::gen_name(t.gen), t.exp});
  return {{"text", w.str()}, {"tokens", tokens}};
}

nlohmann::json to_json(const gamma::ReductionCertificate& c) {
  auto steps = nlohmann::json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"kind", gamma::step_name(s.kind)}, {"word", s.word.str()}, {"height_norm", int_json(s.height_norm)}});
  auto heights = nlohmann::json::array();
  for (const auto& h : c.heights()) heights.push_back(int_json(h));
  return {{"input", to_json(c.input)},       {"word", to_json(c.word)},  {"steps", steps},
          {"height_norms", heights},         {"final", to_json(c.final_vector)},
          {"unit", to_json(c.unit)},         {"escapes", c.escapes()}};
}

EisInt eis_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [a, b]");
  return {int_from_json(j[0]), int_from_json(j[1])};
}

EVec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [a, b] pairs");
  EVec v;
  for (const auto& x : j) v.push_back(eis_from_json(x));
  return v;
}

}  // namespace eislat::io
