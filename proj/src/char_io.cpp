#include "demdesc/char_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace demdesc {

namespace {

using nlohmann::json;

json weight_to_json(const Weight& w, int rank) {
  json arr = json::array();
  for (int i = 0; i < rank; ++i) arr.push_back(w[i]);
  return arr;
}

Weight weight_from_json(const json& arr, int rank) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != rank)
    throw ParseError("weight must be an array of length " + std::to_string(rank));
  Weight w;
  for (int i = 0; i < rank; ++i) {
    const json& c = arr[static_cast<std::size_t>(i)];
    if (!c.is_number_integer()) throw ParseError("weight coordinates must be integers");
    const std::int64_t value = c.get<std::int64_t>();
    if (value < -kMaxInputCoord || value > kMaxInputCoord)
      throw ParseError("weight coordinate " + std::to_string(value) + " exceeds the bound " +
                       std::to_string(kMaxInputCoord));
    w[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(value);
  }
  return w;
}

json int_to_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return json(c.convert_to<std::int64_t>());
  }
  return json(c.str());
}

Int int_from_json(const json& c, const char* what) {
  if (c.is_number_integer()) return Int(c.get<std::int64_t>());
  if (c.is_string()) {
    const std::string s = c.get<std::string>();
    if (s.empty()) throw ParseError(std::string(what) + " must not be an empty string");
    std::size_t at = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (at == s.size()) throw ParseError(std::string(what) + " \"" + s + "\" is not an integer");
    for (; at < s.size(); ++at) {
      if (s[at] < '0' || s[at] > '9')
        throw ParseError(std::string(what) + " \"" + s + "\" is not an integer");
    }
    return Int(s);
  }
  throw ParseError(std::string(what) + " must be an integer or a decimal string");
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
  return doc;
}

RootDatumPtr datum_from_document(const json& doc) {
  if (!doc.contains("root_datum") || !doc["root_datum"].is_string())
    throw ParseError("missing string field \"root_datum\"");
  return RootDatum::from_tag(doc["root_datum"].get<std::string>());
}

}  // namespace

std::string character_to_json(const Character& f) {
  json doc;
  doc["root_datum"] = f.datum()->tag();
  json terms = json::array();
  for (const auto& [lambda, c] : sorted_terms(f)) {
    json term;
    term["weight"] = weight_to_json(lambda, f.datum()->rank());
    term["coeff"] = int_to_json(c);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

Character character_from_json(const std::string& text) {
  const json doc = parse_document(text);
  RootDatumPtr rd = datum_from_document(doc);
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw ParseError("missing array field \"terms\"");
  Character f(rd);
  for (const json& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("weight") || !term.contains("coeff"))
      throw ParseError("each term needs \"weight\" and \"coeff\" fields");
    f.add_term(weight_from_json(term["weight"], rd->rank()),
               int_from_json(term["coeff"], "coeff"));
  }
  return f;
}

std::string decomposition_to_json(const GDecomposition& d) {
  json doc;
  doc["root_datum"] = d.datum()->tag();
  json entries = json::array();
  for (const auto& [highest, mult] : sorted_entries(d)) {
    json entry;
    entry["highest_weight"] = weight_to_json(highest, d.datum()->rank());
    entry["mult"] = int_to_json(mult);
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

GDecomposition decomposition_from_json(const std::string& text) {
  const json doc = parse_document(text);
  RootDatumPtr rd = datum_from_document(doc);
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("missing array field \"entries\"");
  GDecomposition d(rd);
  for (const json& entry : doc["entries"]) {
    if (!entry.is_object() || !entry.contains("highest_weight") || !entry.contains("mult"))
      throw ParseError("each entry needs \"highest_weight\" and \"mult\" fields");
    d.add_entry(weight_from_json(entry["highest_weight"], rd->rank()),
                int_from_json(entry["mult"], "mult"));
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on \"" + path + "\"");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on \"" + path + "\"");
}

}  // namespace demdesc
