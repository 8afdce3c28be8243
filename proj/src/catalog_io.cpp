#include "semidecay/catalog_io.hpp"

#include "semidecay/error.hpp"

#include <fstream>

namespace semidecay {

using nlohmann::json;

namespace {

json weight_to_json(const WeightVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

WeightVector weight_from_json(const json& j) {
  WeightVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_rational(j[i].get<std::string>());
  return v;
}

json weights_to_json(const RepWeights& w) {
  json entries = json::array();
  for (const auto& e : w.entries) entries.push_back({{"weight", weight_to_json(e.weight)}, {"dim", e.dim}});
  return {{"entries", entries}, {"highest", w.highest}, {"lowest", w.lowest}};
}

RepWeights weights_from_json(const json& j) {
  RepWeights w;
  for (const auto& e : j.at("entries")) w.entries.push_back({weight_from_json(e.at("weight")), e.at("dim").get<int>()});
  w.highest = j.at("highest").get<std::size_t>();
  w.lowest = j.at("lowest").get<std::size_t>();
  if (w.highest >= w.entries.size() || w.lowest >= w.entries.size())
    throw Error(Errc::invalid_input, "extreme weight index out of range");
  return w;
}

}  // namespace

json group_to_json(const GroupSpec& g) {
  json j = {{"family", family_id(g.family)}, {"n", g.n}, {"field", field_id(g.field.kind)}, {"rank", g.rank}};
  if (g.m) j["m"] = *g.m;
  return j;
}

GroupSpec group_from_json(const json& j) {
  std::optional<int> m;
  if (j.contains("m")) m = j.at("m").get<int>();
  return make_group(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>(), m,
                    parse_field(j.at("field").get<std::string>()));
}

json catalog_to_json(const Catalog& cat) {
  json groups = json::array(), reps = json::array(), imps = json::array();
  for (const auto& g : cat.groups) {
    json roots = json::array();
    for (const auto& r : g.roots) roots.push_back({{"root", weight_to_json(r.root)}, {"multiplicity", r.multiplicity}});
    groups.push_back({{"group", group_to_json(g.group)}, {"name", group_name(g.group)}, {"roots", roots},
                      {"source", g.source}});
  }
  for (const auto& r : cat.reps)
    reps.push_back({{"group", group_to_json(r.group)}, {"rep", rep_id(r.kind)}, {"weights", weights_to_json(r.weights)},
                    {"source", r.source}});
  for (const auto& i : cat.improvements)
    imps.push_back({{"group", group_to_json(i.group)}, {"rep", rep_id(i.rep)}, {"gamma", to_string(i.gamma)},
                    {"mechanism", mechanism_id(i.mechanism)}, {"log_correction", i.log_correction},
                    {"source", i.source}});
  return {{"groups", groups}, {"reps", reps}, {"improvements", imps}};
}

Catalog catalog_from_json(const json& j) {
  try {
    Catalog cat;
    for (const auto& g : j.at("groups")) {
      CatalogGroup cg{group_from_json(g.at("group")), {}, g.value("source", "")};
      for (const auto& r : g.at("roots"))
        cg.roots.push_back({weight_from_json(r.at("root")), r.at("multiplicity").get<int>()});
      cat.groups.push_back(std::move(cg));
    }
    for (const auto& r : j.at("reps"))
      cat.reps.push_back({group_from_json(r.at("group")), parse_rep(r.at("rep").get<std::string>()),
                          weights_from_json(r.at("weights")), r.value("source", "")});
    for (const auto& i : j.at("improvements")) {
      ImprovementRecord rec;
      rec.group = group_from_json(i.at("group"));
      rec.rep = parse_rep(i.at("rep").get<std::string>());
      rec.gamma = parse_rational(i.at("gamma").get<std::string>());
      rec.mechanism = parse_mechanism(i.at("mechanism").get<std::string>());
      rec.log_correction = i.value("log_correction", false);
      rec.source = i.value("source", "");
      cat.improvements.push_back(std::move(rec));
    }
    return cat;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("malformed catalog: ") + e.what());
  }
}

void save_catalog(const Catalog& cat, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_input, "cannot write " + path.string());
  out << catalog_to_json(cat).dump(2) << '\n';
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_input, "cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("malformed catalog: ") + e.what());
  }
  return catalog_from_json(j);
}

}  // namespace semidecay
