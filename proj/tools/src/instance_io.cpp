#include "bex/cli/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace bex::cli {

Json element_set_to_json(ElementSet s) {
  Json arr = Json::array();
  for (int e : s) arr.push_back(e);
  return arr;
}

ElementSet element_set_from_json(const Json& j, int universe, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  ElementSet out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must contain integers");
    const int e = v.get<int>();
    if (e < 0 || e >= universe) {
      throw InputError(std::string(what) + " references element " + std::to_string(e) +
                       " outside 0.." + std::to_string(universe - 1));
    }
    if (out.contains(e)) {
      throw InputError(std::string(what) + " lists element " + std::to_string(e) + " twice");
    }
    out = out.with(e);
  }
  return out;
}

Json instance_to_json(const InstanceFile& inst) {
  Json j;
  j["name"] = inst.name;
  if (!inst.comment.empty()) j["comment"] = inst.comment;
  j["ground_set_size"] = inst.rep.ground.universe;
  j["rank"] = inst.rep.rank;
  Json edges = Json::array();
  for (const HyperedgeConstraint& c : inst.rep.constraints) {
    Json e;
    e["elements"] = element_set_to_json(c.elements);
    e["bound"] = c.bound;
    edges.push_back(std::move(e));
  }
  j["hyperedges"] = std::move(edges);
  Json pairs = Json::array();
  for (const BasisPairInstance& p : inst.pairs) {
    Json e;
    e["A1"] = element_set_to_json(p.a1);
    e["A2"] = element_set_to_json(p.a2);
    e["B1"] = element_set_to_json(p.b1);
    e["B2"] = element_set_to_json(p.b2);
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  InstanceFile inst;
  if (!j.is_object()) throw InputError("instance file must be a JSON object");
  if (!j.contains("name") || !j.at("name").is_string()) {
    throw InputError("instance file needs a string field \"name\"");
  }
  inst.name = j.at("name").get<std::string>();
  if (j.contains("comment")) inst.comment = j.at("comment").get<std::string>();
  if (!j.contains("ground_set_size") || !j.at("ground_set_size").is_number_integer()) {
    throw InputError("instance file needs an integer field \"ground_set_size\"");
  }
  const int n = j.at("ground_set_size").get<int>();
  if (n < 0 || n > ElementSet::kMaxElements) {
    throw InputError("ground_set_size must be in 0.." + std::to_string(ElementSet::kMaxElements));
  }
  inst.rep.ground = GroundSet::dense(n);
  if (!j.contains("rank") || !j.at("rank").is_number_integer()) {
    throw InputError("instance file needs an integer field \"rank\"");
  }
  inst.rep.rank = j.at("rank").get<int>();
  if (j.contains("hyperedges")) {
    if (!j.at("hyperedges").is_array()) throw InputError("\"hyperedges\" must be an array");
    for (const Json& e : j.at("hyperedges")) {
      if (!e.contains("elements") || !e.contains("bound") || !e.at("bound").is_number_integer()) {
        throw InputError("each hyperedge needs \"elements\" and an integer \"bound\"");
      }
      inst.rep.constraints.push_back(
          {element_set_from_json(e.at("elements"), n, "hyperedge elements"), e.at("bound").get<int>()});
    }
  }
  if (j.contains("pairs")) {
    if (!j.at("pairs").is_array()) throw InputError("\"pairs\" must be an array");
    for (const Json& e : j.at("pairs")) {
      for (const char* key : {"A1", "A2", "B1", "B2"}) {
        if (!e.contains(key)) throw InputError(std::string("each pair needs \"") + key + "\"");
      }
      inst.pairs.push_back({element_set_from_json(e.at("A1"), n, "A1"),
                            element_set_from_json(e.at("A2"), n, "A2"),
                            element_set_from_json(e.at("B1"), n, "B1"),
                            element_set_from_json(e.at("B2"), n, "B2")});
    }
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) { return instance_to_json(inst).dump(2) + "\n"; }

InstanceFile parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  out << text;
  if (!out) throw InputError("failed writing output file: " + path);
}

Json sequence_to_json(const ExchangeSequence& seq) {
  Json arr = Json::array();
  for (const ExchangeStep& s : seq) {
    Json e;
    e["x"] = s.x;
    e["y"] = s.y;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json certificate_to_json(const BlockingCertificate& cert) {
  Json j;
  j["hyperedges"] = Json::array({cert.hyperedges[0], cert.hyperedges[1], cert.hyperedges[2], cert.hyperedges[3]});
  j["d"] = cert.d;
  j["pivot"] = cert.pivot;
  j["case"] = cert.pivot_case == PivotCase::z1 ? "Z1" : "Z2";
  j["pivot_odd_membership"] = cert.pivot_odd_membership;
  j["relabeling"] = cert.relabeling.tag();
  Json classes;
  classes["e"] = element_set_to_json(cert.class_e);
  classes["f"] = element_set_to_json(cert.class_f);
  classes["g"] = element_set_to_json(cert.class_g);
  classes["h"] = element_set_to_json(cert.class_h);
  j["classes"] = std::move(classes);
  return j;
}

Json solve_result_to_json(const SolveResult& result) {
  Json j;
  j["distance"] = result.distance;
  j["lower_bound"] = result.lower_bound;
  j["monotone_length"] = result.monotone_length;
  j["sequence"] = sequence_to_json(result.sequence);
  j["certificate"] = result.certificate.has_value() ? certificate_to_json(*result.certificate) : Json(nullptr);
  j["constraint_checks"] = result.stats.constraint_checks;
  return j;
}

}  // namespace bex::cli
