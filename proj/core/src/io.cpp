#include "topoadv/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "topoadv/errors.hpp"

namespace topoadv {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw InvalidInput("malformed input: " + what);
}

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing ") + key);
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json v = require(j, key);
  if (!v.is_number_integer()) malformed(std::string(key) + " must be an integer");
  return v.get<int>();
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) malformed("simplex must be an array");
  Simplex s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed("vertex ids must be integers");
    s.push_back(v.get<VertexId>());
  }
  return normalized(s);
}

Json simplex_to_json(const Simplex& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(v);
  return out;
}

}  // namespace

Json complex_to_json(const Complex& c) {
  Json out;
  Json vertices = Json::array();
  for (VertexId v : c.vertices()) {
    Json jv;
    jv["id"] = v;
    if (c.color(v)) jv["color"] = *c.color(v);
    if (c.value(v)) jv["value"] = *c.value(v);
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(simplex_to_json(f));
  out["facets"] = std::move(facets);
  return out;
}

Complex complex_from_json(const Json& j) {
  std::map<VertexId, VertexData> vd;
  for (const auto& jv : require(j, "vertices")) {
    VertexData d;
    if (jv.contains("color")) d.color = jv.at("color").get<int>();
    if (jv.contains("value")) {
      if (!jv.at("value").is_string()) malformed("vertex value must be a string");
      d.value = jv.at("value").get<std::string>();
    }
    if (!vd.emplace(require_int(jv, "id"), std::move(d)).second)
      malformed("duplicate vertex id");
  }
  std::vector<Simplex> facets;
  for (const auto& jf : require(j, "facets")) facets.push_back(simplex_from_json(jf));
  try {
    return Complex(std::move(vd), std::move(facets));
  } catch (const InvalidInput& e) {
    malformed(e.what());
  }
}

Json graph_to_json(const InstantGraph& g) {
  Json out;
  Json parts = Json::array();
  for (int p : g.participants) parts.push_back(p);
  out["participants"] = std::move(parts);
  Json in = Json::object();
  for (const auto& [p, s] : g.in_sets) {
    Json arr = Json::array();
    for (int q : s) arr.push_back(q);
    in[std::to_string(p)] = std::move(arr);
  }
  out["in"] = std::move(in);
  return out;
}

InstantGraph graph_from_json(const Json& j) {
  InstantGraph g;
  for (const auto& p : require(j, "participants")) {
    if (!p.is_number_integer()) malformed("participants must be integers");
    g.participants.push_back(p.get<int>());
  }
  const Json in = require(j, "in");
  if (!in.is_object()) malformed("in must be an object");
  for (const auto& [key, arr] : in.items()) {
    int p = 0;
    try {
      p = std::stoi(key);
    } catch (const std::exception&) {
      malformed("in keys must be process ids");
    }
    std::set<int> s;
    for (const auto& q : arr) {
      if (!q.is_number_integer()) malformed("in sets must hold integers");
      s.insert(q.get<int>());
    }
    g.in_sets.emplace(p, std::move(s));
  }
  try {
    validate(g);
  } catch (const InvalidInput& e) {
    malformed(e.what());
  }
  return g;
}

Json word_to_json(const UPWord& w) {
  Json out;
  Json head = Json::array();
  for (const auto& g : w.head) head.push_back(graph_to_json(g));
  out["head"] = std::move(head);
  Json cycle = Json::array();
  for (const auto& g : w.cycle) cycle.push_back(graph_to_json(g));
  out["cycle"] = std::move(cycle);
  return out;
}

UPWord word_from_json(const Json& j) {
  UPWord w;
  for (const auto& g : require(j, "head")) w.head.push_back(graph_from_json(g));
  for (const auto& g : require(j, "cycle")) w.cycle.push_back(graph_from_json(g));
  try {
    validate(w);
  } catch (const InvalidInput& e) {
    malformed(e.what());
  }
  return w;
}

Json point_to_json(const BaryPoint& p) {
  Json coords = Json::object();
  for (const auto& [v, w] : p.weights()) coords[std::to_string(v)] = rat_to_string(w);
  Json out;
  out["coords"] = std::move(coords);
  return out;
}

BaryPoint point_from_json(const Json& j) {
  const Json coords = require(j, "coords");
  if (!coords.is_object()) malformed("coords must be an object");
  std::map<VertexId, Rat> w;
  for (const auto& [key, val] : coords.items()) {
    if (!val.is_string()) malformed("coordinates must be rational strings");
    try {
      w.emplace(std::stoi(key), rat_from_string(val.get<std::string>()));
    } catch (const std::exception&) {
      malformed("bad coordinate entry");
    }
  }
  try {
    return BaryPoint(std::move(w));
  } catch (const InvalidInput& e) {
    malformed(e.what());
  }
}

Json subdivision_to_json(const Subdivision& s) {
  Json out = complex_to_json(s.cpx);
  Json coords = Json::object();
  for (VertexId v : s.cpx.vertices()) coords[std::to_string(v)] = point_to_json(s.coords.at(v));
  out["coords"] = std::move(coords);
  return out;
}

Json condition_to_json(const Condition& c) {
  Json ambient;
  ambient["n"] = c.n;
  ambient["t"] = c.t;
  Json values = Json::array();
  for (const auto& v : c.values) values.push_back(v);
  ambient["values"] = std::move(values);
  Json members = Json::array();
  for (const auto& m : c.members) {
    Json jm = Json::array();
    for (const auto& [p, v] : m) {
      Json pv;
      pv["proc"] = p;
      pv["value"] = c.values[v];
      jm.push_back(std::move(pv));
    }
    members.push_back(std::move(jm));
  }
  Json out;
  out["ambient"] = std::move(ambient);
  out["members"] = std::move(members);
  return out;
}

Condition condition_from_json(const Json& j) {
  const Json ambient = require(j, "ambient");
  Condition c;
  c.n = require_int(ambient, "n");
  c.t = require_int(ambient, "t");
  for (const auto& v : require(ambient, "values")) {
    if (!v.is_string()) malformed("values must be strings");
    c.values.push_back(v.get<std::string>());
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    index.emplace(c.values[i], static_cast<int>(i));
  if (index.size() != c.values.size()) malformed("values must be distinct");
  for (const auto& jm : require(j, "members")) {
    CSimplex m;
    for (const auto& pv : jm) {
      const Json value = require(pv, "value");
      if (!value.is_string()) malformed("member values must be strings");
      auto it = index.find(value.get<std::string>());
      if (it == index.end()) malformed("member value not in the table");
      m.emplace_back(require_int(pv, "proc"), it->second);
    }
    std::sort(m.begin(), m.end());
    c.members.insert(std::move(m));
  }
  try {
    validate(c);
  } catch (const InvalidInput& e) {
    malformed(e.what());
  }
  return c;
}

Json task_to_json_kset(const std::vector<std::string>& values, int k) {
  Json out;
  out["kind"] = "kset";
  Json jv = Json::array();
  for (const auto& v : values) jv.push_back(v);
  out["values"] = std::move(jv);
  out["k"] = k;
  return out;
}

ColorlessTask task_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    if (j.at("kind") != "kset") malformed("unknown task kind");
    std::vector<std::string> values;
    for (const auto& v : require(j, "values")) {
      if (!v.is_string()) malformed("values must be strings");
      values.push_back(v.get<std::string>());
    }
    try {
      return make_kset(values, require_int(j, "k"));
    } catch (const InvalidInput& e) {
      malformed(e.what());
    }
  }
  ColorlessTask task;
  task.input = complex_from_json(require(j, "input"));
  task.output = complex_from_json(require(j, "output"));
  auto table = std::make_shared<std::map<Simplex, std::vector<Simplex>>>();
  for (const auto& entry : require(j, "delta")) {
    std::vector<Simplex> allowed;
    for (const auto& g : require(entry, "allowed")) allowed.push_back(simplex_from_json(g));
    (*table)[simplex_from_json(require(entry, "simplex"))] = std::move(allowed);
  }
  task.delta = [table](const Simplex& s) -> std::vector<Simplex> {
    if (s.empty()) return {Simplex{}};
    auto it = table->find(s);
    if (it == table->end()) throw InvalidInput("delta is not defined on a simplex");
    return it->second;
  };
  return task;
}

Json ucomplex_to_json(const UComplex& u) {
  Json out = complex_to_json(u.cpx);
  Json tags = Json::array();
  for (std::size_t i = 0; i < u.giv_of.size(); ++i) {
    Json tag;
    tag["vertex"] = static_cast<VertexId>(i);
    if (u.colored) {
      Json member = Json::array();
      for (const auto& [p, v] : u.member_of[i]) {
        Json pv;
        pv["proc"] = p;
        pv["value"] = u.values[v];
        member.push_back(std::move(pv));
      }
      tag["member"] = std::move(member);
    }
    tag["giv"] = simplex_to_json(u.giv_of[i]);
    tags.push_back(std::move(tag));
  }
  out["tags"] = std::move(tags);
  return out;
}

Json decide_to_json(const DecideResult& r) {
  Json out;
  switch (r.status) {
    case DecideStatus::Solvable:
      out["result"] = "solvable";
      break;
    case DecideStatus::Unsolvable:
      out["result"] = "unsolvable";
      break;
    case DecideStatus::Budget:
      out["result"] = "budget";
      break;
  }
  if (r.status == DecideStatus::Solvable) {
    Json witness = Json::object();
    for (const auto& [v, o] : r.witness) witness[std::to_string(v)] = o;
    out["witness"] = std::move(witness);
  }
  out["nodes"] = r.nodes;
  return out;
}

std::string subdivision_to_obj(const Subdivision& s) {
  // Vertices are embedded by their first three barycentric coordinates over
  // the sorted base vertex set; higher-dimensional bases are flattened.
  std::vector<VertexId> base;
  for (const auto& [v, pt] : s.coords)
    for (const auto& [b, w] : pt.weights()) {
      (void)w;
      base.push_back(b);
    }
  base = normalized(base);

  std::ostringstream out;
  std::map<VertexId, std::size_t> index;
  for (VertexId v : s.cpx.vertices()) {
    const auto& pt = s.coords.at(v);
    double xyz[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < base.size() && i < 3; ++i)
      xyz[i] = pt.weight(base[i]).convert_to<double>();
    out << "v " << xyz[0] << " " << xyz[1] << " " << xyz[2] << "\n";
    index.emplace(v, index.size() + 1);
  }
  for (const auto& f : s.cpx.facets()) {
    if (f.size() >= 3) {
      for (const auto& tri : subsets_of_size(f, 3))
        out << "f " << index.at(tri[0]) << " " << index.at(tri[1]) << " "
            << index.at(tri[2]) << "\n";
    } else if (f.size() == 2) {
      out << "l " << index.at(f[0]) << " " << index.at(f[1]) << "\n";
    }
  }
  return out.str();
}

std::string to_pretty_string(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out << text;
}

}  // namespace topoadv
