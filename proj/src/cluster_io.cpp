#include "honeycomb/cluster_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

namespace honeycomb {

namespace {

using nlohmann::json;

int line_of(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line of each element of the top-level arrays, keyed by (array name, index).
// A light scanner over the already-validated text: tracks nesting and the last
// key seen at the top level.
std::map<std::pair<std::string, std::size_t>, int> entity_lines(std::string_view text) {
  std::map<std::pair<std::string, std::size_t>, int> lines;
  int depth = 0;
  int line = 1;
  std::string last_key;
  std::string current_array;
  std::size_t index = 0;
  bool element_open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      continue;
    }
    if (ch == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        if (i < text.size()) s += text[i];
      }
      if (depth == 1) last_key = s;
      continue;
    }
    if (ch == '{' || ch == '[') {
      ++depth;
      if (depth == 2 && ch == '[') {
        current_array = last_key;
        index = 0;
        element_open = false;
      } else if (depth == 3 && !current_array.empty() && !element_open) {
        lines[{current_array, index}] = line;
        element_open = true;
      }
    } else if (ch == '}' || ch == ']') {
      if (depth == 3) element_open = false;
      if (depth == 2) current_array.clear();
      --depth;
    } else if (ch == ',' && depth == 2 && !current_array.empty()) {
      ++index;
      element_open = false;
    } else if (depth == 2 && !current_array.empty() && !element_open && ch != ' ' && ch != '\t' &&
               ch != '\r') {
      // Scalar element: record its line too.
      lines[{current_array, index}] = line;
      element_open = true;
    }
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(entity_lines(text)) {}

  [[noreturn]] void fail(const std::string& what, const std::string& array, std::size_t index) const {
    auto it = lines_.find({array, index});
    throw ParseError(what, it == lines_.end() ? 0 : it->second);
  }

  const json& field(const json& obj, const char* key, const std::string& array, std::size_t index) const {
    if (!obj.is_object()) fail(array + "[" + std::to_string(index) + "] must be an object", array, index);
    auto it = obj.find(key);
    if (it == obj.end()) fail(array + "[" + std::to_string(index) + "]: missing \"" + key + "\"", array, index);
    return *it;
  }

  double number(const json& obj, const char* key, const std::string& array, std::size_t index) const {
    const json& v = field(obj, key, array, index);
    if (!v.is_number()) fail(array + "[" + std::to_string(index) + "]: \"" + key + "\" must be a number", array, index);
    return v.get<double>();
  }

  int integer(const json& obj, const char* key, const std::string& array, std::size_t index) const {
    const json& v = field(obj, key, array, index);
    if (!v.is_number_integer())
      fail(array + "[" + std::to_string(index) + "]: \"" + key + "\" must be an integer", array, index);
    return v.get<int>();
  }

  Wrap pair_of_ints(const json& v, const std::string& what, const std::string& array, std::size_t index) const {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      fail(what + " must be a pair of integers", array, index);
    return {v[0].get<int>(), v[1].get<int>()};
  }

  Vec2 pair_of_reals(const json& v, const std::string& what) const {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ParseError(what + " must be a pair of numbers", 0);
    return {v[0].get<double>(), v[1].get<double>()};
  }

 private:
  std::map<std::pair<std::string, std::size_t>, int> lines_;
};

const json& top_array(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing top-level \"") + key + "\"", 0);
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array", 0);
  return *it;
}

}  // namespace

Cluster parse_cluster(std::string_view text, Validation mode) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw ParseError("cluster file must hold one JSON object", 1);
  const Reader rd(text);

  auto dit = doc.find("domain");
  if (dit == doc.end() || !dit->is_object()) throw ParseError("missing \"domain\" object", 0);
  auto tit = dit->find("type");
  if (tit == dit->end() || !tit->is_string()) throw ParseError("domain: missing \"type\"", 0);
  Domain domain;
  const std::string type = tit->get<std::string>();
  if (type == "plane") {
    domain = Domain::plane();
  } else if (type == "torus") {
    if (!dit->contains("v1") || !dit->contains("v2")) throw ParseError("torus domain needs v1 and v2", 0);
    domain = Domain::torus(rd.pair_of_reals((*dit)["v1"], "domain.v1"), rd.pair_of_reals((*dit)["v2"], "domain.v2"));
  } else {
    throw ParseError("domain type must be \"plane\" or \"torus\", got \"" + type + "\"", 0);
  }

  std::vector<Vertex> vertices;
  const json& vs = top_array(doc, "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back({rd.integer(vs[i], "id", "vertices", i),
                        {rd.number(vs[i], "x", "vertices", i), rd.number(vs[i], "y", "vertices", i)}});

  std::vector<HalfEdge> edges;
  const json& es = top_array(doc, "half_edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    HalfEdge e;
    e.id = rd.integer(es[i], "id", "half_edges", i);
    e.origin = rd.integer(es[i], "origin", "half_edges", i);
    e.target = rd.integer(es[i], "target", "half_edges", i);
    e.bulge = rd.number(es[i], "bulge", "half_edges", i);
    e.twin = rd.integer(es[i], "twin", "half_edges", i);
    if (es[i].contains("wrap")) e.wrap = rd.pair_of_ints(es[i]["wrap"], "wrap", "half_edges", i);
    edges.push_back(e);
  }

  std::vector<Face> faces;
  const json& fs = top_array(doc, "faces");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Face f;
    f.id = rd.integer(fs[i], "id", "faces", i);
    const json& cyc = rd.field(fs[i], "cycle", "faces", i);
    if (!cyc.is_array()) rd.fail("faces[" + std::to_string(i) + "]: \"cycle\" must be an array", "faces", i);
    for (const auto& v : cyc) {
      if (!v.is_number_integer()) rd.fail("faces[" + std::to_string(i) + "]: cycle ids must be integers", "faces", i);
      f.cycle.push_back(v.get<int>());
    }
    if (fs[i].contains("outer")) {
      if (!fs[i]["outer"].is_boolean()) rd.fail("faces[" + std::to_string(i) + "]: \"outer\" must be a boolean", "faces", i);
      f.outer = fs[i]["outer"].get<bool>();
    }
    faces.push_back(std::move(f));
  }
  return Cluster::build(domain, std::move(vertices), std::move(edges), std::move(faces), mode);
}

Cluster load_cluster(const std::string& path, Validation mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cluster(ss.str(), mode);
}

std::string format_cluster(const Cluster& c) {
  std::ostringstream os;
  auto r = [](double v) { return format_real(v); };
  os << "{\n\"domain\": {\"type\": ";
  if (c.domain().kind == DomainKind::Torus)
    os << "\"torus\", \"v1\": [" << r(c.domain().v1.x) << ", " << r(c.domain().v1.y) << "], \"v2\": ["
       << r(c.domain().v2.x) << ", " << r(c.domain().v2.y) << "]},\n";
  else
    os << "\"plane\"},\n";
  os << "\"vertices\": [\n";
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    const Vertex& v = c.vertices()[i];
    os << "{\"id\": " << v.id << ", \"x\": " << r(v.pos.x) << ", \"y\": " << r(v.pos.y) << "}"
       << (i + 1 < c.vertices().size() ? ",\n" : "\n");
  }
  os << "],\n\"half_edges\": [\n";
  for (std::size_t i = 0; i < c.half_edges().size(); ++i) {
    const HalfEdge& e = c.half_edges()[i];
    os << "{\"id\": " << e.id << ", \"origin\": " << e.origin << ", \"target\": " << e.target
       << ", \"bulge\": " << r(e.bulge) << ", \"twin\": " << e.twin << ", \"wrap\": [" << e.wrap[0] << ", "
       << e.wrap[1] << "]}" << (i + 1 < c.half_edges().size() ? ",\n" : "\n");
  }
  os << "],\n\"faces\": [\n";
  for (std::size_t i = 0; i < c.faces().size(); ++i) {
    const Face& f = c.faces()[i];
    os << "{\"id\": " << f.id << ", \"cycle\": [";
    for (std::size_t k = 0; k < f.cycle.size(); ++k) os << (k ? ", " : "") << f.cycle[k];
    os << "], \"outer\": " << (f.outer ? "true" : "false") << "}" << (i + 1 < c.faces().size() ? ",\n" : "\n");
  }
  os << "]\n}\n";
  return os.str();
}

void save_cluster(const std::string& path, const Cluster& cluster) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path, 0);
  out << format_cluster(cluster);
}

}  // namespace honeycomb
