#include "semidecay/report.hpp"

#include "semidecay/error.hpp"

#include <algorithm>
#include <sstream>

namespace semidecay {

using nlohmann::json;

json to_json(const Rational& v) {
  return {{"num", boost::multiprecision::numerator(v).str()},
          {"den", boost::multiprecision::denominator(v).str()},
          {"decimal", to_decimal(v)}};
}

json to_json(const WeightVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Rational rational_from_json(const json& j) {
  try {
    return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, e.what());
  }
}

json to_json(const ExponentReport& r) {
  json j = {{"q", to_json(r.q)},
            {"p", to_json(r.p)},
            {"m", r.m.str()},
            {"decay", {{"vector", to_json(r.decay.vector)}, {"provenance", provenance_id(r.decay.provenance)}}},
            {"delta_b", to_json(r.delta_b)},
            {"dim_one_reduction", r.dim_one_reduction},
            {"log_correction", r.log_correction}};
  json ratios = json::array();
  for (const auto& x : r.per_simple_root_ratios) ratios.push_back(to_json(x));
  j["per_simple_root_ratios"] = ratios;
  j["gamma"] = r.gamma ? to_json(*r.gamma) : json(nullptr);
  return j;
}

json to_json(const HCEstimate& e) {
  return {{"value", e.value}, {"std_error", e.std_error}, {"n_samples", e.n_samples}, {"seed", e.seed}};
}

json to_json(const HCBoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"t", row.t}, {"xi", to_json(row.xi)}, {"log_delta", row.log_delta}, {"r", row.r},
                    {"r_std", row.r_std}, {"damped", row.damped}, {"damped_std", row.damped_std}});
  return {{"epsilon", r.epsilon}, {"rows", rows}, {"min_r", r.min_r}, {"positive", r.positive},
          {"eventually_nonincreasing", r.eventually_nonincreasing}, {"passed", r.passed}};
}

json to_json(const KazhdanReport& r) {
  return {{"p", to_json(r.p)}, {"m", r.m.str()}, {"mechanism", r.mechanism},
          {"xi", to_json(r.xi)}, {"xi_pow", r.xi_pow}, {"kappa", r.kappa}};
}

json to_json(const PackingResult& r) {
  return {{"example", example_id(r.example)}, {"c0", r.c0}, {"count", r.count}, {"violations", r.violations},
          {"samples_per_pair", r.samples_per_pair}, {"seed", r.seed}, {"params", r.params}};
}

json to_json(const VerifyReport& r) {
  json results = json::array();
  for (const auto& x : r.results)
    results.push_back({{"suite", x.suite}, {"name", x.name}, {"subject", x.subject}, {"passed", x.passed},
                       {"detail", x.detail}});
  json j = {{"passed", r.passed()}, {"checked", r.results.size()}, {"results", results}};
  if (const auto* f = r.first_failure()) j["first_failure"] = f->name;
  return j;
}

json table_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = {{"group", r.label}, {"family", family_id(r.group.family)}, {"n", r.group.n},
                {"field", field_id(r.group.field.kind)}, {"rep", rep_id(r.rep)}, {"p", to_json(r.p)},
                {"m", r.m.str()}, {"mechanism", r.mechanism}};
    row["m_param"] = r.group.m ? json(*r.group.m) : json(nullptr);
    out.push_back(row);
  }
  return {{"rows", out}};
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      line += f;
    } else {
      line += '"';
      for (char c : f) line += c == '"' ? std::string("\"\"") : std::string(1, c);
      line += '"';
    }
  }
  return line + "\n";
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = csv_line({"group", "family", "n", "m_param", "field", "rep", "p", "p_decimal", "m", "mechanism"});
  for (const auto& r : rows)
    out += csv_line({r.label, std::string(family_id(r.group.family)), std::to_string(r.group.n),
                     r.group.m ? std::to_string(*r.group.m) : "", std::string(field_id(r.group.field.kind)),
                     std::string(rep_id(r.rep)), to_string(r.p), to_decimal(r.p), r.m.str(), r.mechanism});
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"group", "p", "decimal", "m", "mechanism"}};
  for (const auto& r : rows) cells.push_back({r.label, to_string(r.p), to_decimal(r.p, 6), r.m.str(), r.mechanism});
  return aligned(cells);
}

}  // namespace semidecay
