#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bex/matroid.hpp"
#include "bex/solver.hpp"
#include "bex/split_matroid.hpp"

namespace bex::cli {

using Json = nlohmann::ordered_json;

// On-disk instance: a split-matroid representation plus optional basis-pair
// queries. Serialization is canonical (stable key order, sorted element
// lists, two-space indent), so identical values round-trip byte-exactly.
struct InstanceFile {
  std::string name;
  std::string comment;  // empty = omitted from the file
  SplitRepresentation rep;
  std::vector<BasisPairInstance> pairs;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

Json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const Json& j);

std::string serialize_instance(const InstanceFile& inst);
InstanceFile parse_instance(const std::string& text);

InstanceFile load_instance(const std::string& path);
void save_text(const std::string& path, const std::string& text);

Json element_set_to_json(ElementSet s);
ElementSet element_set_from_json(const Json& j, int universe, const char* what);
Json sequence_to_json(const ExchangeSequence& seq);
Json certificate_to_json(const BlockingCertificate& cert);
Json solve_result_to_json(const SolveResult& result);

}  // namespace bex::cli
