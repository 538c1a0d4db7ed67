#include "coalrank/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coalrank {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("json parse error at byte " + std::to_string(e.byte) +
                      ": " + e.what());
  }
}

std::int64_t require_positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    throw parse_error(std::string(what) + " must be a positive integer");
  }
  return j.get<std::int64_t>();
}

Individual individual_from(const json& j) {
  if (!j.is_string()) throw parse_error("individual ids must be strings");
  try {
    return Individual(j.get<std::string>());
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Coalition coalition_from(const json& j) {
  if (!j.is_array()) throw parse_error("a coalition must be an array of ids");
  std::vector<Individual> members;
  members.reserve(j.size());
  for (const auto& item : j) members.push_back(individual_from(item));
  try {
    return Coalition(std::move(members));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

json coalition_to(const Coalition& c) {
  json out = json::array();
  for (const auto& x : c.members()) out.push_back(x.id());
  return out;
}

CoalitionMultiset multiset_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw parse_error(std::string(what) + " must be a nonempty array");
  }
  CoalitionMultiset m;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("members")) {
      throw parse_error(std::string(what) +
                        " entries must be objects with a 'members' list");
    }
    std::int64_t multiplicity = 1;
    if (entry.contains("multiplicity")) {
      multiplicity = require_positive_int(entry.at("multiplicity"), "multiplicity");
    }
    if (multiplicity > kMaxMultiplicity) {
      throw parse_error("multiplicity above cap");
    }
    m.add(coalition_from(entry.at("members")), multiplicity);
  }
  return m;
}

json multiset_to(const CoalitionMultiset& m) {
  json out = json::array();
  for (const auto& [c, n] : m.entries()) {
    out.push_back(json{{"members", coalition_to(c)}, {"multiplicity", n}});
  }
  return out;
}

CoalitionalRanking ranking_from(const json& j) {
  if (!j.is_object()) throw parse_error("ranking document must be an object");
  if (!j.contains("format_version") ||
      j.at("format_version") != json(1)) {
    throw parse_error("ranking document needs \"format_version\": 1");
  }
  if (!j.contains("classes_best_to_worst")) {
    throw parse_error("ranking document needs 'classes_best_to_worst'");
  }
  const json& classes_json = j.at("classes_best_to_worst");
  if (!classes_json.is_array() || classes_json.empty()) {
    throw parse_error("'classes_best_to_worst' must be a nonempty array");
  }
  std::vector<CoalitionMultiset> worst_first;
  worst_first.reserve(classes_json.size());
  for (auto it = classes_json.rbegin(); it != classes_json.rend(); ++it) {
    worst_first.push_back(multiset_from(*it, "a class"));
  }
  std::set<Individual> declared;
  if (j.contains("individuals")) {
    const json& ids = j.at("individuals");
    if (!ids.is_array()) throw parse_error("'individuals' must be an array");
    for (const auto& id : ids) declared.insert(individual_from(id));
  }
  try {
    return CoalitionalRanking(std::move(worst_first), std::move(declared));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

json ranking_to(const CoalitionalRanking& r) {
  json classes = json::array();
  for (int k = r.num_classes(); k >= 1; --k) {
    classes.push_back(multiset_to(r.class_at(k)));
  }
  json individuals = json::array();
  for (const auto& x : r.universe()) individuals.push_back(x.id());
  return json{{"format_version", 1},
              {"individuals", individuals},
              {"classes_best_to_worst", classes}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

CoalitionalRanking ranking_from_json_text(const std::string& text) {
  return ranking_from(parse_text(text));
}

std::string ranking_to_json_text(const CoalitionalRanking& r) {
  return ranking_to(r).dump(2) + "\n";
}

CoalitionalRanking load_ranking_file(const std::string& path) {
  return ranking_from_json_text(read_file(path));
}

void save_ranking_file(const CoalitionalRanking& r, const std::string& path) {
  write_file(path, ranking_to_json_text(r));
}

AxiomInstance witness_from_json_text(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || j.value("kind", "") != "axiom-witness") {
    throw parse_error("witness document needs \"kind\": \"axiom-witness\"");
  }
  if (!j.contains("format_version") || j.at("format_version") != json(1)) {
    throw parse_error("witness document needs \"format_version\": 1");
  }
  AxiomInstance inst;
  try {
    inst.solution = SolutionId::parse(j.at("solution").get<std::string>());
    inst.axiom = parse_axiom(j.at("axiom").get<std::string>());
  } catch (const json::exception&) {
    throw parse_error("witness document needs 'solution' and 'axiom' strings");
  }
  if (!j.contains("x") || !j.contains("y")) {
    throw parse_error("witness document needs the pair 'x', 'y'");
  }
  inst.x = individual_from(j.at("x"));
  inst.y = individual_from(j.at("y"));
  if (!j.contains("ranking")) throw parse_error("witness needs a 'ranking'");
  inst.ranking = ranking_from(j.at("ranking"));
  if (j.contains("ranking_prime")) {
    inst.ranking_prime = ranking_from(j.at("ranking_prime"));
  }
  if (j.contains("sigma")) {
    const json& sig = j.at("sigma");
    if (!sig.is_object()) throw parse_error("'sigma' must be an object");
    std::map<Individual, Individual> mapping;
    for (const auto& [from, to] : sig.items()) {
      mapping.emplace(Individual(from), individual_from(to));
    }
    try {
      inst.sigma = Permutation(std::move(mapping));
    } catch (const domain_error& e) {
      throw parse_error(e.what());
    }
  }
  if (j.contains("s")) inst.s = coalition_from(j.at("s"));
  if (j.contains("t")) inst.t = coalition_from(j.at("t"));
  if (j.contains("gamma")) {
    CoalitionMultiset gamma;
    const json& g = j.at("gamma");
    if (!g.is_array()) throw parse_error("'gamma' must be an array");
    for (const auto& entry : g) {
      if (!entry.is_object() || !entry.contains("members")) {
        throw parse_error("'gamma' entries must be objects with 'members'");
      }
      std::int64_t n = 1;
      if (entry.contains("multiplicity")) {
        n = require_positive_int(entry.at("multiplicity"), "multiplicity");
      }
      gamma.add(coalition_from(entry.at("members")), n);
    }
    inst.gamma = std::move(gamma);
  }
  const auto read_index = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    return static_cast<int>(require_positive_int(j.at(key), key));
  };
  inst.k1 = read_index("k1");
  inst.k2 = read_index("k2");
  inst.k_hat = read_index("k_hat");
  return inst;
}

std::string witness_to_json_text(const AxiomInstance& inst) {
  json j{{"format_version", 1},
         {"kind", "axiom-witness"},
         {"solution", inst.solution.str()},
         {"axiom", std::string(axiom_name(inst.axiom))},
         {"x", inst.x.id()},
         {"y", inst.y.id()},
         {"ranking", ranking_to(inst.ranking)}};
  if (inst.ranking_prime.has_value()) {
    j["ranking_prime"] = ranking_to(*inst.ranking_prime);
  }
  if (inst.sigma.has_value()) {
    json sig = json::object();
    for (const auto& [from, to] : inst.sigma->mapping()) {
      sig[from.id()] = to.id();
    }
    j["sigma"] = std::move(sig);
  }
  if (inst.s.has_value()) j["s"] = coalition_to(*inst.s);
  if (inst.t.has_value()) j["t"] = coalition_to(*inst.t);
  if (inst.gamma.has_value()) j["gamma"] = multiset_to(*inst.gamma);
  if (inst.k1.has_value()) j["k1"] = *inst.k1;
  if (inst.k2.has_value()) j["k2"] = *inst.k2;
  if (inst.k_hat.has_value()) j["k_hat"] = *inst.k_hat;
  return j.dump(2) + "\n";
}

AxiomInstance load_witness_file(const std::string& path) {
  return witness_from_json_text(read_file(path));
}

void save_witness_file(const AxiomInstance& inst, const std::string& path) {
  write_file(path, witness_to_json_text(inst));
}

}  // namespace coalrank
