#include "segrereg/json_io.hpp"

#include <stdexcept>

namespace segrereg {

namespace {

json extended_to_json(const ExtendedInt& e) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_pos_inf()) return "+inf";
  return e.value();
}

ExtendedInt extended_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return ExtendedInt::neg_inf();
    if (s == "+inf" || s == "inf") return ExtendedInt::pos_inf();
    throw std::invalid_argument("expected an integer or \"-inf\", got \"" + s + "\"");
  }
  if (!j.is_number_integer())
    throw std::invalid_argument("expected an integer or \"-inf\"");
  return ExtendedInt(j.get<long long>());
}

} // namespace

json complex_to_json(const SimplicialComplex& delta) {
  json facets = json::array();
  for (Face f : delta.facets()) facets.push_back(face_vertices(f));
  return json{{"n", delta.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw std::invalid_argument("complex JSON needs \"n\" and \"facets\"");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> faces;
  for (const auto& face : j.at("facets")) faces.push_back(face.get<std::vector<int>>());
  return build_complex(n, faces);
}

json profile_to_json(const ModuleProfile& p) {
  json ends = json::object(), no_gaps = json::object(), unbounded = json::object();
  for (const auto& [i, e] : p.ends) ends[std::to_string(i)] = extended_to_json(e);
  for (const auto& [i, b] : p.no_gaps) no_gaps[std::to_string(i)] = b;
  for (const auto& [i, b] : p.unbounded_below) unbounded[std::to_string(i)] = b;
  json out{{"dim", p.dim},   {"depth", p.depth},          {"sigma", p.sigma},
           {"ends", ends},   {"no_gaps", no_gaps},        {"unbounded_below", unbounded}};
  if (p.transform_heuristic) out["transform_heuristic"] = true;
  return out;
}

ModuleProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile JSON must be an object");

  if (j.contains("cm")) {
    const auto& cm = j.at("cm");
    return cm_profile(cm.at("dim").get<int>(), cm.at("reg").get<long long>(),
                      cm.value("sigma", 0LL));
  }

  ModuleProfile p;
  p.dim = j.at("dim").get<int>();
  if (p.dim < 1) throw std::invalid_argument("profile dimension must be ≥ 1");
  p.depth = j.at("depth").get<int>();
  p.sigma = j.value("sigma", 0LL);
  if (!j.contains("ends") || !j.at("ends").is_object())
    throw std::invalid_argument("profile JSON needs an \"ends\" object");
  for (const auto& [key, value] : j.at("ends").items()) {
    const int i = std::stoi(key);
    if (i < 0 || i > p.dim)
      throw std::invalid_argument("profile end index " + key + " outside 0..dim");
    ExtendedInt e = extended_from_json(value);
    if (e.is_finite()) p.ends[i] = e;
  }
  if (j.contains("no_gaps"))
    for (const auto& [key, value] : j.at("no_gaps").items())
      p.no_gaps[std::stoi(key)] = value.get<bool>();
  if (j.contains("unbounded_below"))
    for (const auto& [key, value] : j.at("unbounded_below").items())
      p.unbounded_below[std::stoi(key)] = value.get<bool>();
  return p;
}

json betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries())
    entries.push_back(json{
        {"i", key.first}, {"sigma", face_vertices(key.second)}, {"rank", rank}});
  json coarse = json::array();
  for (const auto& [key, rank] : table.coarse())
    coarse.push_back(json{{"i", key.first}, {"j", key.second}, {"rank", rank}});
  return json{{"entries", entries}, {"coarse", coarse}};
}

json summary_to_json(const CohomologySummary& summary, const AssumptionReport& assumption,
                     long long dims_window) {
  json indices = json::array();
  for (int i = 0; i <= summary.dim; ++i) {
    const auto& set = summary.by_index[static_cast<std::size_t>(i)];
    json row{{"i", i}};
    if (!set) {
      row["end"] = "-inf";
      row["zero_degree"] = false;
      row["tail_from"] = nullptr;
      row["dims"] = json::object();
    } else {
      row["end"] = extended_to_json(set->end());
      row["zero_degree"] = set->zero_degree_present();
      auto m = set->tail_threshold();
      row["tail_from"] = m ? json(-*m) : json(nullptr);
      json dims = json::object();
      for (long long t = 0; t >= -dims_window; --t)
        dims[std::to_string(t)] = set->dim_at(t);
      row["dims"] = dims;
    }
    indices.push_back(row);
  }
  return json{{"indices", indices},
              {"depth", summary.depth},
              {"dim", summary.dim},
              {"reg", summary.reg},
              {"assumption", assumption_to_json(assumption)}};
}

json assumption_to_json(const AssumptionReport& report) {
  json indices = json::array();
  for (const auto& status : report.indices)
    indices.push_back(json{{"i", status.index},
                           {"no_gaps", status.no_gaps},
                           {"infinitely_many_degrees", status.infinitely_many_degrees}});
  return json{{"satisfied", report.satisfied},
              {"depth_hypothesis_ok", report.depth_hypothesis_ok},
              {"indices", indices},
              {"violations", report.violations}};
}

json segre_report_to_json(const SegreReport& report) {
  json cohomology = json::array();
  for (const auto& [j, terms] : report.cohomology) {
    json term_list = json::array();
    for (const auto& term : terms)
      term_list.push_back(json{{"u", term.u}, {"end", term.end}});
    cohomology.push_back(json{{"j", j}, {"terms", term_list}});
  }
  json gamma = json::array();
  for (const auto& info : report.candidates)
    gamma.push_back(json{{"u", info.u}, {"value", info.gamma}});
  json out{{"reg", report.reg},
           {"exact", report.exact},
           {"violations", report.violations},
           {"cohomology", cohomology},
           {"witnesses", report.witnesses},
           {"gamma", gamma}};
  if (report.folded_dim1_factors > 0)
    out["folded_dim1_factors"] = report.folded_dim1_factors;
  return out;
}

json crosscheck_to_json(const CrosscheckReport& report) {
  return json{{"pass", report.pass},
              {"reg_from_betti", report.reg_from_betti},
              {"reg_from_cohomology", report.reg_from_cohomology},
              {"depth_from_cohomology", report.depth_from_cohomology},
              {"depth_auslander_buchsbaum", report.depth_auslander_buchsbaum},
              {"mismatches", report.mismatches}};
}

json diagnostics_to_json(const std::vector<CoarseDiagnostic>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back(json{{"i", row.i},
                       {"j", row.j},
                       {"multigraded", row.multigraded_value},
                       {"dual_betti", row.dual_betti_value},
                       {"agree", row.agree}});
  return out;
}

std::variant<SimplicialComplex, ModuleProfile> input_from_json(const json& j) {
  if (j.is_object() && j.contains("n") && j.contains("facets"))
    return complex_from_json(j);
  if (j.is_object() && (j.contains("cm") || j.contains("dim")))
    return profile_from_json(j);
  throw std::invalid_argument(
      "input JSON is neither a complex ({\"n\",\"facets\"}) nor a profile "
      "({\"dim\",...} or {\"cm\":...})");
}

} // namespace segrereg
