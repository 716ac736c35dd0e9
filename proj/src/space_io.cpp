#include "finsub/space_io.hpp"

#include "finsub/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace finsub {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& as_array(const json& v, const std::string& where, std::size_t expected) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if (v.size() != expected) {
    throw ParseError(where + ": expected " + std::to_string(expected) + " entries, found " + std::to_string(v.size()));
  }
  return v;
}

std::vector<Index> index_table(const json& v, const std::string& where, std::size_t count, std::size_t bound) {
  as_array(v, where, count);
  std::vector<Index> out;
  out.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    const std::string here = where + "[" + std::to_string(x) + "]";
    const std::size_t idx = as_count(v[x], here);
    if (idx >= bound) {
      throw ParseError(here + ": index " + std::to_string(idx) + " out of range (level size " + std::to_string(bound) +
                       ")");
    }
    out.push_back(static_cast<Index>(idx));
  }
  return out;
}

}  // namespace

std::string space_to_json(const BasedSimplicialSet& x) {
  const auto& t = x.space.tables();
  json j;
  j["trunc"] = x.trunc();
  j["levels"] = t.sizes;
  j["faces"] = t.faces;
  j["degeneracies"] = t.degeneracies;
  j["basepoint"] = x.basepoint;
  if (!t.labels.empty()) j["labels"] = t.labels;
  return j.dump() + "\n";
}

BasedSimplicialSet space_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("space file must be a JSON object");

  SimplicialSet::Tables t;
  const std::size_t trunc = as_count(field(j, "trunc"), "trunc");
  const json& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) throw ParseError("levels: expected a non-empty array");
  as_array(levels, "levels", trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    const std::size_t n = as_count(levels[k], "levels[" + std::to_string(k) + "]");
    if (n == 0) throw ParseError("levels[" + std::to_string(k) + "]: level tables must be non-empty");
    t.sizes.push_back(n);
  }

  const json& faces = as_array(field(j, "faces"), "faces", trunc + 1);
  t.faces.resize(trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    const std::string where = "faces[" + std::to_string(k) + "]";
    const std::size_t maps = k == 0 ? 0 : k + 1;
    as_array(faces[k], where, maps);
    for (std::size_t i = 0; i < maps; ++i) {
      t.faces[k].push_back(
          index_table(faces[k][i], where + "[" + std::to_string(i) + "]", t.sizes[k], t.sizes[k - 1]));
    }
  }

  const json& degens = as_array(field(j, "degeneracies"), "degeneracies", trunc);
  t.degeneracies.resize(trunc);
  for (std::size_t k = 0; k < trunc; ++k) {
    const std::string where = "degeneracies[" + std::to_string(k) + "]";
    as_array(degens[k], where, k + 1);
    for (std::size_t s = 0; s <= k; ++s) {
      t.degeneracies[k].push_back(
          index_table(degens[k][s], where + "[" + std::to_string(s) + "]", t.sizes[k], t.sizes[k + 1]));
    }
  }

  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    as_array(*it, "labels", trunc + 1);
    t.labels.resize(trunc + 1);
    for (std::size_t k = 0; k <= trunc; ++k) {
      const std::string where = "labels[" + std::to_string(k) + "]";
      as_array((*it)[k], where, t.sizes[k]);
      for (const auto& lab : (*it)[k]) {
        if (!lab.is_string()) throw ParseError(where + ": labels must be strings");
        t.labels[k].push_back(lab.get<std::string>());
      }
    }
  }

  Index basepoint = 0;
  if (auto it = j.find("basepoint"); it != j.end()) {
    const std::size_t b = as_count(*it, "basepoint");
    if (b >= t.sizes[0]) throw ParseError("basepoint: index out of range for level 0");
    basepoint = static_cast<Index>(b);
  }

  BasedSimplicialSet x{SimplicialSet(std::move(t)), basepoint};
  if (auto v = validate(x.space); !v.empty()) {
    throw ValidationError("space violates " + v.front().identity + " at level " + std::to_string(v.front().level) +
                          ", simplex " + std::to_string(v.front().index) + " (" + std::to_string(v.size()) +
                          " violations)");
  }
  return x;
}

void save_space(const BasedSimplicialSet& x, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << space_to_json(x);
}

BasedSimplicialSet load_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return space_from_json(ss.str());
}

}  // namespace finsub
