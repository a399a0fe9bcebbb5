#include "extremal_cli/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace extremal::cli {

namespace {

int parse_index_key(const std::string& key) {
  int value = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (ec != std::errc() || ptr != end || key.empty()) {
    throw std::invalid_argument("coordinate key \"" + key + "\" is not an integer");
  }
  if (value < 1) throw std::invalid_argument("coordinate index " + key + " is not >= 1 (indices are 1-based)");
  return value;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Rational& value) { return to_string(value); }

json to_json(const SparseVec& x) {
  json coords = json::object();
  for (const auto& [i, v] : x) coords[std::to_string(i)] = to_string(v);
  return json{{"coords", std::move(coords)}};
}

json to_json(const IndexSet& set) { return json(std::vector<int>(set.begin(), set.end())); }

json to_json(const lorentz::WeightSeq& w) {
  json out;
  switch (w.generator()) {
    case lorentz::WeightSeq::Generator::Harmonic:
      out["generator"] = "harmonic";
      break;
    case lorentz::WeightSeq::Generator::Power:
      out["generator"] = "power";
      out["q"] = to_string(w.exponent());
      break;
    case lorentz::WeightSeq::Generator::Explicit: {
      out["generator"] = "explicit";
      json values = json::array();
      for (const auto& v : w.values()) values.push_back(to_string(v));
      out["values"] = std::move(values);
      break;
    }
  }
  if (w.scale() != 1) out["scale"] = to_string(w.scale());
  return out;
}

json to_json(const SignedPermutation& t) { return json{{"pi", t.pi()}, {"eps", t.eps()}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

SparseVec sparse_vec_from_json(const json& j) {
  const json& coords = require(j, "coords");
  if (!coords.is_object()) throw std::invalid_argument("\"coords\" must be an object");
  SparseVec x;
  for (const auto& [key, value] : coords.items()) x.set(parse_index_key(key), rational_from_json(value));
  return x;
}

IndexSet index_set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("index set must be a JSON array of integers");
  std::vector<int> elems;
  for (const auto& e : j) elems.push_back(int_from_json(e, "index set entry"));
  return IndexSet(std::move(elems));
}

lorentz::WeightSeq weights_from_json(const json& j) {
  const json& gen = require(j, "generator");
  if (!gen.is_string()) throw std::invalid_argument("\"generator\" must be a string");
  const auto name = gen.get<std::string>();
  lorentz::WeightSeq w;
  if (name == "harmonic") {
    w = lorentz::WeightSeq::harmonic();
  } else if (name == "power") {
    w = lorentz::WeightSeq::power(rational_from_json(require(j, "q")));
  } else if (name == "explicit") {
    const json& values = require(j, "values");
    if (!values.is_array()) throw std::invalid_argument("\"values\" must be an array");
    std::vector<Rational> list;
    for (const auto& v : values) list.push_back(rational_from_json(v));
    w = lorentz::WeightSeq::explicit_values(std::move(list));
  } else {
    throw std::invalid_argument("unknown weight generator \"" + name + "\"");
  }
  if (j.contains("scale")) w = w.scaled(rational_from_json(j.at("scale")));
  return w;
}

SignedPermutation signed_permutation_from_json(const json& j) {
  const json& pi = require(j, "pi");
  const json& eps = require(j, "eps");
  if (!pi.is_array() || !eps.is_array()) throw std::invalid_argument("\"pi\" and \"eps\" must be arrays");
  std::vector<int> p, e;
  for (const auto& v : pi) p.push_back(int_from_json(v, "pi entry"));
  for (const auto& v : eps) e.push_back(int_from_json(v, "eps entry"));
  return SignedPermutation(std::move(p), std::move(e));
}

json load_json_argument(const std::string& text) {
  std::string body = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot read JSON file \"" + text + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    body = buffer.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

lorentz::WeightSeq weights_argument(const std::string& text) {
  if (text == "harmonic") return lorentz::WeightSeq::harmonic();
  return weights_from_json(load_json_argument(text));
}

}  // namespace extremal::cli
