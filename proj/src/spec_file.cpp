#include "iex/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace iex {

namespace {

char single_letter(const nlohmann::json& j, const char* where) {
  if (!j.is_string() || j.get<std::string>().size() != 1)
    throw ParseError(std::string(where) + " entries must be single-character strings");
  return j.get<std::string>()[0];
}

}  // namespace

Iet parse_iet_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
  for (const char* key : {"d", "alphabet", "order2", "origin", "lengths"})
    if (!j.contains(key)) throw ParseError(std::string("spec is missing key '") + key + "'");
  if (!j["d"].is_number_integer()) throw ParseError("'d' must be an integer");
  long d = j["d"].get<long>();
  if (d < 1) throw NegativeRadicand("'d' must be >= 1, got " + std::to_string(d));
  if (!is_square_free(d))
    throw NonSquareFreeRadicand("'d' must be square-free, got " + std::to_string(d));

  if (!j["alphabet"].is_array() || j["alphabet"].empty())
    throw ParseError("'alphabet' must be a nonempty array");
  std::vector<char> alphabet, order2;
  for (const auto& a : j["alphabet"]) alphabet.push_back(single_letter(a, "alphabet"));
  if (!j["order2"].is_array()) throw ParseError("'order2' must be an array");
  for (const auto& a : j["order2"]) order2.push_back(single_letter(a, "order2"));

  if (!j["origin"].is_string()) throw ParseError("'origin' must be an expression string");
  QuadNum origin = QuadNum::parse(j["origin"].get<std::string>());

  if (!j["lengths"].is_object()) throw ParseError("'lengths' must be an object");
  std::vector<QuadNum> lengths;
  for (char a : alphabet) {
    std::string key(1, a);
    if (!j["lengths"].contains(key))
      throw ParseError("'lengths' is missing letter '" + key + "'");
    if (!j["lengths"][key].is_string())
      throw ParseError("length of '" + key + "' must be an expression string");
    lengths.push_back(QuadNum::parse(j["lengths"][key].get<std::string>()));
  }
  for (const QuadNum& l : lengths)
    if (l.radicand() != 1 && l.radicand() != d)
      throw RadicandMismatch("length " + l.str() + " is not in Q[sqrt(" + std::to_string(d) +
                             ")]");
  if (origin.radicand() != 1 && origin.radicand() != d)
    throw RadicandMismatch("origin " + origin.str() + " is not in Q[sqrt(" + std::to_string(d) +
                           ")]");
  return Iet(std::move(alphabet), std::move(order2), std::move(lengths), std::move(origin));
}

Iet load_iet_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_iet_spec(buf.str());
}

std::string serialize_iet_spec(const Iet& T) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"d\": " << T.radicand() << ",\n";
  auto letter_list = [&](const std::vector<char>& letters) {
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ", ";
      s += '"';
      s += letters[i];
      s += '"';
    }
    return s + "]";
  };
  out << "  \"alphabet\": " << letter_list(T.order1()) << ",\n";
  out << "  \"order2\": " << letter_list(T.order2()) << ",\n";
  out << "  \"origin\": \"" << T.left().str() << "\",\n";
  out << "  \"lengths\": {\n";
  for (size_t i = 0; i < T.size(); ++i) {
    out << "    \"" << T.letter(i) << "\": \"" << T.length(i).str() << "\"";
    out << (i + 1 < T.size() ? ",\n" : "\n");
  }
  out << "  }\n}\n";
  return out.str();
}

}  // namespace iex
