#include "fanorat/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fanorat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("fixture is not valid JSON");
  if (!j.is_object()) throw std::invalid_argument("fixture must be a JSON object");
  return j;
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument(std::string("fixture needs a string field \"") + key + "\"");
  return j[key].get<std::string>();
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string())
      throw std::invalid_argument(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> expect_map(const json& j) {
  std::map<std::string, std::string> out;
  if (!j.contains("expect")) return out;
  if (!j["expect"].is_object())
    throw std::invalid_argument("\"expect\" must be an object of strings");
  for (const auto& [k, v] : j["expect"].items()) {
    if (!v.is_string()) throw std::invalid_argument("\"expect\" must be an object of strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

NetFixture parse_net_fixture(const std::string& json_text) {
  json j = parse_json(json_text);
  NetFixture fx;
  fx.field = require_string(j, "field");
  if (!j.contains("forms") || !j["forms"].is_array())
    throw std::invalid_argument("fixture needs a \"forms\" array");
  for (const auto& form : j["forms"]) {
    if (!form.is_array()) throw std::invalid_argument("each form must be an array of rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : form) rows.push_back(string_array(row, "form row"));
    fx.forms.push_back(std::move(rows));
  }
  if (!j.contains("base") || !j["base"].is_array())
    throw std::invalid_argument("fixture needs a \"base\" array");
  for (const auto& vec : j["base"]) fx.base.push_back(string_array(vec, "base vector"));
  fx.expect = expect_map(j);
  return fx;
}

QuadrilinearFixture parse_quadrilinear_fixture(const std::string& json_text) {
  json j = parse_json(json_text);
  QuadrilinearFixture fx;
  fx.field = require_string(j, "field");
  if (!j.contains("coeff"))
    throw std::invalid_argument("fixture needs a \"coeff\" array");
  auto coeff = string_array(j["coeff"], "\"coeff\"");
  if (coeff.size() != 16)
    throw std::invalid_argument("\"coeff\" must have exactly 16 entries");
  for (std::size_t m = 0; m < 16; ++m) fx.coeff[m] = coeff[m];
  fx.expect = expect_map(j);
  return fx;
}

std::string render_net_fixture(const NetFixture& fx) {
  json j;
  j["field"] = fx.field;
  j["forms"] = fx.forms;
  j["base"] = fx.base;
  if (!fx.expect.empty()) j["expect"] = fx.expect;
  return j.dump(2) + "\n";
}

std::string render_quadrilinear_fixture(const QuadrilinearFixture& fx) {
  json j;
  j["field"] = fx.field;
  j["coeff"] = fx.coeff;
  if (!fx.expect.empty()) j["expect"] = fx.expect;
  return j.dump(2) + "\n";
}

NetFixture load_net_fixture(const std::string& path) {
  return parse_net_fixture(slurp(path));
}

QuadrilinearFixture load_quadrilinear_fixture(const std::string& path) {
  return parse_quadrilinear_fixture(slurp(path));
}

}  // namespace fanorat
