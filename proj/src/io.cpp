#include "cubiq/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cubiq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string id_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError(where + ": identifiers must be strings or integers");
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) throw ValidationError(where + ": \"" + key + "\" must be a list");
  return a;
}

bool numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Integer ids sort numerically, everything else by string.
bool id_less(const std::string& a, const std::string& b) {
  if (numeric(a) && numeric(b) && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Quiver parse_quiver(const json& doc) {
  std::vector<std::string> vertices;
  for (const json& v : array_field(doc, "vertices", "quiver")) vertices.push_back(id_of(v, "quiver vertex"));
  std::vector<ArrowSpec> arrows;
  for (const json& a : array_field(doc, "arrows", "quiver")) {
    const std::string id = id_of(field(a, "id", "quiver arrow"), "quiver arrow");
    const std::string where = "arrow '" + id + "'";
    arrows.push_back({id, id_of(field(a, "src", where), where), id_of(field(a, "tgt", where), where)});
  }
  return Quiver::build(std::move(vertices), arrows);
}

CubicalSet parse_cubical(const json& doc) {
  std::vector<GeneratorSpec> specs;
  for (const json& c : array_field(doc, "cubes", "cubical_set")) {
    GeneratorSpec s;
    s.id = id_of(field(c, "id", "cube"), "cube");
    const std::string where = "cube '" + s.id + "'";
    const json& dim = field(c, "dim", where);
    if (!dim.is_number_integer()) throw ValidationError(where + ": \"dim\" must be an integer");
    s.dim = dim.get<int>();
    if (s.dim < 0) throw ValidationError(where + ": negative dimension");
    const json faces = c.contains("faces") ? c.at("faces") : json::object();
    if (!faces.is_object()) throw ValidationError(where + ": \"faces\" must be an object");
    std::size_t used = 0;
    for (int i = 1; i <= s.dim; ++i)
      for (const char* sign : {"-", "+"}) {
        const std::string key = std::to_string(i) + sign;
        if (!faces.contains(key)) throw ValidationError(where + ": missing face \"" + key + "\"");
        ++used;
        const json& f = faces.at(key);
        FaceSpec fs;
        fs.gen = id_of(field(f, "gen", where + " face " + key), where);
        if (f.contains("degens")) {
          if (!f.at("degens").is_array())
            throw ValidationError(where + " face " + key + ": \"degens\" must be a list");
          for (const json& d : f.at("degens")) {
            if (!d.is_number_integer())
              throw ValidationError(where + " face " + key + ": degeneracy indices are integers");
            fs.degens.push_back(d.get<int>());
          }
        }
        s.faces.push_back(std::move(fs));
      }
    if (used != faces.size()) throw ValidationError(where + ": unexpected face keys");
    specs.push_back(std::move(s));
  }
  std::optional<int> trunc;
  if (doc.contains("truncated_at")) {
    if (!doc.at("truncated_at").is_number_integer())
      throw ValidationError("\"truncated_at\" must be an integer");
    trunc = doc.at("truncated_at").get<int>();
  }
  CubicalSet k = CubicalSet::build(std::move(specs), trunc);
  const ValidationReport report = validate_cubical(k);
  if (!report.ok()) {
    std::string msg = "cubical identities violated:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  return k;
}

SimplicialComplexInput parse_simplicial(const json& doc) {
  SimplicialComplexInput s;
  for (const json& f : array_field(doc, "facets", "simplicial")) {
    if (!f.is_array() || f.empty()) throw ValidationError("facets must be nonempty lists");
    std::vector<std::string> facet;
    for (const json& v : f) facet.push_back(id_of(v, "facet vertex"));
    std::set<std::string> distinct(facet.begin(), facet.end());
    if (distinct.size() != facet.size()) throw ValidationError("facet repeats a vertex");
    s.facets.push_back(std::move(facet));
  }
  return s;
}

}  // namespace

Digraph simplicial_to_digraph(const SimplicialComplexInput& s) {
  std::set<std::vector<std::string>, bool (*)(const std::vector<std::string>&,
                                              const std::vector<std::string>&)>
      faces([](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), id_less);
      });
  for (std::vector<std::string> facet : s.facets) {
    std::sort(facet.begin(), facet.end(), id_less);
    const std::size_t n = facet.size();
    if (n > 20) throw ValidationError("facet too large");
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(facet[i]);
      faces.insert(std::move(f));
    }
  }
  auto label = [](const std::vector<std::string>& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
    return out + ")";
  };
  std::vector<std::string> vertices;
  std::map<std::vector<std::string>, std::size_t> index;
  for (const auto& f : faces) {
    index[f] = vertices.size();
    vertices.push_back(label(f));
  }
  std::vector<Arrow> arrows;
  for (const auto& f : faces) {
    if (f.size() < 2) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<std::string> g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      arrows.push_back({label(f) + "->" + label(g), index[f], index[g]});
    }
  }
  return to_digraph(Quiver(std::move(vertices), std::move(arrows)));
}

Artifact parse_artifact(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ValidationError("parse error at line " + std::to_string(line) + ": " + e.what());
  }
  const std::string type = id_of(field(doc, "type", "document"), "document type");
  if (type == "quiver") return parse_quiver(doc);
  if (type == "cubical_set") return parse_cubical(doc);
  if (type == "simplicial") return parse_simplicial(doc);
  throw ValidationError("unknown document type \"" + type + "\"");
}

Artifact load_artifact(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_artifact(buf.str());
}

ordered_json to_json(const Quiver& q) {
  ordered_json doc;
  doc["type"] = "quiver";
  doc["vertices"] = q.vertices();
  doc["arrows"] = ordered_json::array();
  for (const Arrow& a : q.arrows())
    doc["arrows"].push_back({{"id", a.id}, {"src", q.vertex_id(a.src)}, {"tgt", q.vertex_id(a.tgt)}});
  return doc;
}

ordered_json to_json(const CubicalSet& k) {
  ordered_json doc;
  doc["type"] = "cubical_set";
  if (k.truncated_at()) doc["truncated_at"] = *k.truncated_at();
  doc["cubes"] = ordered_json::array();
  for (const GeneratorSpec& s : k.specs()) {
    ordered_json c;
    c["id"] = s.id;
    c["dim"] = s.dim;
    ordered_json faces = ordered_json::object();
    for (std::size_t f = 0; f < s.faces.size(); ++f)
      faces[std::to_string(f / 2 + 1) + (f % 2 ? "+" : "-")] = {{"gen", s.faces[f].gen},
                                                                 {"degens", s.faces[f].degens}};
    c["faces"] = faces;
    doc["cubes"].push_back(std::move(c));
  }
  return doc;
}

ordered_json to_json(const SimplicialComplexInput& s) {
  ordered_json doc;
  doc["type"] = "simplicial";
  doc["facets"] = s.facets;
  return doc;
}

ordered_json to_json(const Artifact& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

void write_json(const std::string& path, const ordered_json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace cubiq
