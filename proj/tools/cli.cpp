#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "segrereg/errors.hpp"
#include "segrereg/json_io.hpp"
#include "segrereg/oracle.hpp"

namespace segrereg::cli {

namespace {

int default_max_vertices() {
  if (const char* env = std::getenv("SEGREREG_MAX_VERTICES")) {
    try {
      int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
      // malformed values fall back to the default
    }
  }
  return 16;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

FieldSpec field_of(const JobSpec& job) {
  return job.characteristic == 0 ? FieldSpec::rationals()
                                 : FieldSpec::prime(job.characteristic);
}

std::string render_u(const std::vector<int>& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(u[i]);
  }
  return s + ")";
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- complex --

void render_betti_table(std::ostream& out, const BettiTable& table) {
  out << "multigraded Betti numbers (i, sigma, rank):\n";
  for (const auto& [key, rank] : table.entries()) {
    out << "  i=" << key.first << "  sigma={";
    const auto vertices = face_vertices(key.second);
    for (std::size_t v = 0; v < vertices.size(); ++v)
      out << (v ? "," : "") << vertices[v];
    out << "}  rank=" << rank << "\n";
  }
  out << "coarse (i, j, rank):\n";
  for (const auto& [key, rank] : table.coarse())
    out << "  i=" << key.first << "  j=" << key.second << "  rank=" << rank << "\n";
  out << "regularity " << regularity_from_betti(table) << "\n";
}

int run_complex_betti(const JobSpec& job, std::ostream& out) {
  auto delta = complex_from_json(load_json_file(job.input_paths[0]));
  auto table = graded_betti(delta, field_of(job), job.max_vertices);
  switch (job.format) {
    case OutputFormat::Json: {
      json j = betti_to_json(table);
      j["reg"] = regularity_from_betti(table);
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "i,sigma,rank\n";
      for (const auto& [key, rank] : table.entries()) {
        out << key.first << ",";
        const auto vertices = face_vertices(key.second);
        for (std::size_t v = 0; v < vertices.size(); ++v)
          out << (v ? " " : "") << vertices[v];
        out << "," << rank << "\n";
      }
      break;
    case OutputFormat::Table:
      render_betti_table(out, table);
      break;
  }
  return kOk;
}

int run_complex_localcoh(const JobSpec& job, std::ostream& out) {
  auto delta = complex_from_json(load_json_file(job.input_paths[0]));
  const auto field = field_of(job);
  auto summary = summarize(delta, field);
  auto assumption = check_assumption(delta, field);
  const long long window = 6;

  std::vector<CoarseDiagnostic> diagnostics;
  if (job.mode == Mode::Diagnose)
    diagnostics = lc_diagnose(delta, field, 4, job.max_vertices);

  switch (job.format) {
    case OutputFormat::Json: {
      json j = summary_to_json(summary, assumption, window);
      if (job.mode == Mode::Diagnose) j["diagnostics"] = diagnostics_to_json(diagnostics);
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "i,degree,dim\n";
      for (int i = 0; i <= summary.dim; ++i) {
        const auto& set = summary.by_index[static_cast<std::size_t>(i)];
        for (long long t = 0; t >= -window; --t)
          out << i << "," << t << "," << (set ? set->dim_at(t) : 0) << "\n";
      }
      break;
    case OutputFormat::Table: {
      out << "local cohomology of K[Delta], " << summary.vertex_count
          << " vertices, char " << field.characteristic << "\n";
      out << "dim " << summary.dim << "  depth " << summary.depth << "  reg "
          << summary.reg << "\n";
      for (int i = 0; i <= summary.dim; ++i) {
        const auto& set = summary.by_index[static_cast<std::size_t>(i)];
        out << "H^" << i << ": ";
        if (!set) {
          out << "zero\n";
          continue;
        }
        out << "end " << set->end();
        if (auto m = set->tail_threshold()) out << ", tail from " << -*m;
        out << ", dims at 0..-" << window << ":";
        for (long long t = 0; t >= -window; --t) out << " " << set->dim_at(t);
        out << "\n";
      }
      out << "assumption: " << (assumption.satisfied ? "satisfied" : "violated") << "\n";
      for (const auto& v : assumption.violations) out << "  - " << v << "\n";
      break;
    }
  }
  if (job.mode == Mode::Diagnose && job.format != OutputFormat::Json) {
    out << "coarse formula diagnostic (i, j, multigraded, dual-betti formula):\n";
    for (const auto& row : diagnostics)
      out << "  i=" << row.i << " j=" << row.j << "  " << row.multigraded_value << "  "
          << row.dual_betti_value << (row.agree ? "" : "  DISAGREE") << "\n";
  }
  return kOk;
}

int run_complex_profile(const JobSpec& job, std::ostream& out) {
  auto delta = complex_from_json(load_json_file(job.input_paths[0]));
  auto profile = profile_from_complex(delta, field_of(job));
  if (job.format == OutputFormat::Table) {
    out << "dim " << profile.dim << "  depth " << profile.depth << "  sigma "
        << profile.sigma << "  reg " << profile.reg() << "\n";
    for (const auto& [j, e] : profile.ends)
      out << "H^" << j << ": end " << e << (profile.no_gaps.at(j) ? ", no gaps" : ", gapped")
          << (profile.unbounded_below.at(j) ? ", unbounded below" : "") << "\n";
  } else {
    emit_json(out, profile_to_json(profile));
  }
  return kOk;
}

int run_complex_check(const JobSpec& job, std::ostream& out) {
  auto delta = complex_from_json(load_json_file(job.input_paths[0]));
  auto report = check_assumption(delta, field_of(job));
  if (job.format == OutputFormat::Json) {
    emit_json(out, assumption_to_json(report));
  } else {
    out << "Assumption " << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (const auto& status : report.indices)
      out << "  H^" << status.index << ": " << (status.no_gaps ? "no gaps" : "gapped")
          << ", " << (status.infinitely_many_degrees ? "infinite tail" : "finite support")
          << "\n";
    for (const auto& v : report.violations) out << "  - " << v << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ segre --

std::vector<ModuleProfile> load_factors(const JobSpec& job, const FieldSpec& field) {
  std::vector<ModuleProfile> profiles;
  for (const auto& path : job.input_paths) {
    auto input = input_from_json(load_json_file(path));
    if (std::holds_alternative<SimplicialComplex>(input))
      profiles.push_back(profile_from_complex(std::get<SimplicialComplex>(input), field));
    else
      profiles.push_back(std::get<ModuleProfile>(input));
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    long long n = job.veronese.empty() ? 1 : job.veronese[i];
    long long tau = job.shift.empty() ? 0 : job.shift[i];
    if (n != 1 || tau != 0) profiles[i] = veronese_transform(profiles[i], n, tau);
  }
  return profiles;
}

void render_segre_table(std::ostream& out, const SegreReport& report, Mode mode) {
  if (mode == Mode::Bound)
    out << "reg <= " << report.reg << " (upper bound)\n";
  else
    out << "reg " << report.reg << (report.exact ? " (exact)" : " (upper bound)") << "\n";
  for (const auto& v : report.violations) out << "  - " << v << "\n";
  if (report.folded_dim1_factors > 0)
    out << "folded " << report.folded_dim1_factors << " dimension-1 factor(s)\n";
  out << "witnesses:";
  for (const auto& u : report.witnesses) out << " " << render_u(u);
  out << "\n";
  for (const auto& [j, terms] : report.cohomology) {
    if (terms.empty()) continue;
    out << "H^" << j << ":";
    for (const auto& term : terms)
      out << "  u=" << render_u(term.u) << " end=" << term.end;
    out << "\n";
  }
  if (mode == Mode::Diagnose) {
    out << "gamma:\n";
    for (const auto& info : report.candidates)
      out << "  " << render_u(info.u) << " -> " << info.gamma << "\n";
  }
}

int run_segre(const JobSpec& job, std::ostream& out) {
  const auto field = field_of(job);
  auto profiles = load_factors(job, field);
  auto report = regularity_segre(profiles);

  std::optional<long long> oracle;
  if (job.mode == Mode::Oracle || job.mode == Mode::Diagnose) {
    bool have_exact = true;
    for (const auto& p : profiles) have_exact = have_exact && p.exact.has_value();
    if (have_exact) {
      auto [folded, count] = normalize_factors(profiles);
      (void)count;
      oracle = regularity_oracle(exact_factors(folded));
    }
  }

  switch (job.format) {
    case OutputFormat::Json: {
      json j = segre_report_to_json(report);
      if (job.mode == Mode::Bound) j["exact"] = false;
      if (oracle) {
        j["oracle"] = *oracle;
        j["oracle_matches"] = (*oracle == report.reg);
      }
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "u,gamma\n";
      for (const auto& info : report.candidates)
        out << render_u(info.u) << "," << info.gamma << "\n";
      out << "reg," << report.reg << "\n";
      break;
    case OutputFormat::Table:
      render_segre_table(out, report, job.mode);
      if (oracle)
        out << "oracle reg " << *oracle
            << (*oracle == report.reg ? " (matches)" : " (MISMATCH)") << "\n";
      break;
  }
  if (oracle && job.mode == Mode::Oracle && *oracle != report.reg && report.exact)
    return kCrosscheckFailure;
  return kOk;
}

// ----------------------------------------------------------- closed forms --

int run_scalar(const JobSpec& job, std::ostream& out, long long value) {
  switch (job.format) {
    case OutputFormat::Json:
      emit_json(out, json{{"reg", value}});
      break;
    case OutputFormat::Csv:
      out << "reg\n" << value << "\n";
      break;
    case OutputFormat::Table:
      out << value << "\n";
      break;
  }
  return kOk;
}

// ----------------------------------------------------------------- verify --

struct VerificationCase {
  std::string name;
  long long engine = 0;
  long long oracle = 0;
  bool match = false;
};

void verify_complex_corpus(const FieldSpec& field, std::vector<VerificationCase>& cases) {
  // every complex on up to 3 vertices, by facet antichains
  for (int n = 2; n <= 3; ++n) {
    const Face full = (Face{1} << n) - 1;
    std::vector<Face> current;
    auto comparable = [](Face a, Face b) { return (a & b) == a || (a & b) == b; };
    auto dfs = [&](auto&& self, Face next) -> void {
      if (!current.empty()) {
        auto delta = build_complex_masks(n, current);
        if (!delta.is_empty_complex()) {
          auto report = crosscheck(delta, field);
          VerificationCase c;
          c.name = "crosscheck n=" + std::to_string(n) + " #" +
                   std::to_string(cases.size());
          c.engine = report.reg_from_cohomology;
          c.oracle = report.reg_from_betti;
          c.match = report.pass;
          cases.push_back(c);
        }
      }
      for (Face f = next; f <= full; ++f) {
        bool ok = true;
        for (Face g : current)
          if (comparable(f, g)) { ok = false; break; }
        if (!ok) continue;
        current.push_back(f);
        self(self, f + 1);
        current.pop_back();
      }
    };
    dfs(dfs, 0);
  }

  // named complexes on 4..5 vertices
  const std::vector<std::pair<std::string, SimplicialComplex>> named = {
      {"two points", build_complex(2, {{1}, {2}})},
      {"hollow triangle", build_complex(3, {{1, 2}, {2, 3}, {1, 3}})},
      {"disjoint edges", build_complex(4, {{1, 2}, {3, 4}})},
      {"tetrahedron boundary",
       build_complex(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})},
      {"cone over square", build_complex(5, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}})},
      {"two triangles sharing a vertex", build_complex(5, {{1, 2, 3}, {3, 4, 5}})},
  };
  for (const auto& [name, delta] : named) {
    auto report = crosscheck(delta, field);
    cases.push_back({"crosscheck " + name, report.reg_from_cohomology,
                     report.reg_from_betti, report.pass});
  }
}

void verify_segre_corpus(const FieldSpec& field, std::vector<VerificationCase>& cases) {
  auto push = [&](const std::string& name, std::vector<ModuleProfile> profiles) {
    auto report = regularity_segre(profiles);
    auto [folded, count] = normalize_factors(std::move(profiles));
    (void)count;
    long long oracle = regularity_oracle(exact_factors(folded));
    cases.push_back({name, report.reg, oracle, report.reg == oracle && report.exact});
  };

  push("P1 x P1", {polynomial_ring_profile(2), polynomial_ring_profile(2)});
  push("P2 x P1", {polynomial_ring_profile(3), polynomial_ring_profile(2)});

  auto pts = profile_from_complex(build_complex(2, {{1}, {2}}), field);
  auto tri = profile_from_complex(build_complex(3, {{1, 2}, {2, 3}, {1, 3}}), field);
  push("two points x hollow triangle", {pts, tri});

  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = d1 == 1 ? 2 : 1; d2 <= 3; ++d2)
      for (long long r1 = 0; r1 <= 2; ++r1)
        for (long long r2 = 0; r2 <= 2; ++r2) {
          std::vector<ModuleProfile> profiles = {cm_profile(d1, r1, 0),
                                                 cm_profile(d2, r2, 0)};
          auto report = regularity_segre(profiles);
          long long closed = regularity_segre_cm({{d1, r1}, {d2, r2}});
          long long oracle = regularity_oracle(exact_factors(profiles));
          std::ostringstream name;
          name << "cm d=(" << d1 << "," << d2 << ") reg=(" << r1 << "," << r2 << ")";
          cases.push_back({name.str(), report.reg, oracle,
                           report.reg == oracle && closed == report.reg});
        }

  for (int d1 : {2, 3})
    for (int d2 : {2, 3})
      for (long long m1 = -1; m1 <= 2; ++m1)
        for (long long m2 = -1; m2 <= 2; ++m2)
          for (long long n1 = 1; n1 <= 3; ++n1)
            for (long long n2 = 1; n2 <= 3; ++n2) {
              long long closed = cox_materov({{d1, m1, n1}, {d2, m2, n2}});
              std::vector<ModuleProfile> profiles = {
                  veronese_transform(polynomial_ring_profile(d1), n1, m1),
                  veronese_transform(polynomial_ring_profile(d2), n2, m2)};
              long long oracle = regularity_oracle(exact_factors(profiles));
              std::ostringstream name;
              name << "cox d=(" << d1 << "," << d2 << ") m=(" << m1 << "," << m2
                   << ") n=(" << n1 << "," << n2 << ")";
              cases.push_back({name.str(), closed, oracle, closed == oracle});
            }
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const auto field = field_of(job);
  std::vector<VerificationCase> cases;
  verify_complex_corpus(field, cases);
  verify_segre_corpus(field, cases);

  bool all_match = true;
  for (const auto& c : cases) all_match = all_match && c.match;

  switch (job.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& c : cases)
        arr.push_back(json{{"case", c.name},
                           {"engine", c.engine},
                           {"oracle", c.oracle},
                           {"match", c.match}});
      emit_json(out, json{{"cases", arr}, {"pass", all_match}});
      break;
    }
    case OutputFormat::Csv:
      out << "case,engine,oracle,match\n";
      for (const auto& c : cases)
        out << "\"" << c.name << "\"," << c.engine << "," << c.oracle << ","
            << (c.match ? "true" : "false") << "\n";
      break;
    case OutputFormat::Table:
      for (const auto& c : cases)
        out << (c.match ? "ok   " : "FAIL ") << c.name << ": engine " << c.engine
            << ", oracle " << c.oracle << "\n";
      out << (all_match ? "all " : "FAILURES among ") << cases.size() << " cases\n";
      break;
  }
  return all_match ? kOk : kCrosscheckFailure;
}

} // namespace

void JobSpec::validate(std::size_t factor_count) const {
  if (!veronese.empty() && veronese.size() != factor_count)
    throw std::invalid_argument("--veronese needs one entry per factor");
  if (!shift.empty() && shift.size() != factor_count)
    throw std::invalid_argument("--shift needs one entry per factor");
  for (long long n : veronese)
    if (n < 1) throw std::invalid_argument("Veronese indices must be ≥ 1");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Castelnuovo-Mumford regularity of Segre-Veronese products"};
  app.require_subcommand(1);

  JobSpec job;
  job.max_vertices = default_max_vertices();

  std::string format_name = "table";
  std::string mode_name = "exact";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--char", job.characteristic, "field characteristic: 0 or a prime");
    cmd->add_option("--format", format_name, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--mode", mode_name, "exact | bound | oracle | diagnose")
        ->check(CLI::IsMember({"exact", "bound", "oracle", "diagnose"}));
    cmd->add_option("--max-vertices", job.max_vertices,
                    "cap on vertex counts for 2^n enumerations");
  };

  auto* complex_cmd = app.add_subcommand("complex", "Stanley-Reisner computations");
  complex_cmd->require_subcommand(1);
  std::string complex_file;
  for (const char* name : {"betti", "localcoh", "profile", "check"}) {
    auto* sub = complex_cmd->add_subcommand(
        name, std::string("compute ") + name + " of a complex");
    sub->add_option("file", complex_file, "complex JSON file")->required();
    add_common(sub);
  }

  auto* segre_cmd =
      app.add_subcommand("segre", "regularity of a Segre product of factors");
  segre_cmd->add_option("--inputs", job.input_paths, "complex or profile JSON files")
      ->required()
      ->expected(-1);
  segre_cmd->add_option("--veronese", job.veronese, "per-factor Veronese index n_i")
      ->delimiter(',');
  segre_cmd->add_option("--shift", job.shift, "per-factor shift τ_i")->delimiter(',');
  add_common(segre_cmd);

  std::vector<long long> dims, regs, twists;
  auto* cm_cmd = app.add_subcommand("cm-reg", "closed form for Cohen-Macaulay factors");
  cm_cmd->add_option("--dims", dims, "factor dimensions")->required()->delimiter(',');
  cm_cmd->add_option("--regs", regs, "factor regularities")->required()->delimiter(',');
  add_common(cm_cmd);

  auto* ver_cmd = app.add_subcommand(
      "veronese-reg", "closed form for shifted Veronese transforms of CM factors");
  ver_cmd->add_option("--dims", dims, "factor dimensions")->required()->delimiter(',');
  ver_cmd->add_option("--regs", regs, "factor regularities")->required()->delimiter(',');
  ver_cmd->add_option("--veronese", job.veronese, "Veronese indices n_i")
      ->required()
      ->delimiter(',');
  ver_cmd->add_option("--shift", job.shift, "shifts τ_i")->delimiter(',');
  add_common(ver_cmd);

  auto* cox_cmd = app.add_subcommand(
      "cox-materov", "twisted Veronese products of polynomial rings");
  cox_cmd->add_option("--dims", dims, "polynomial ring dimensions")
      ->required()
      ->delimiter(',');
  cox_cmd->add_option("--twists", twists, "twists m_i")->required()->delimiter(',');
  cox_cmd->add_option("--veronese", job.veronese, "Veronese indices n_i")
      ->required()
      ->delimiter(',');
  add_common(cox_cmd);

  auto* verify_cmd =
      app.add_subcommand("verify", "run the bundled engine-vs-oracle corpus");
  add_common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    job.format = format_name == "json"  ? OutputFormat::Json
                 : format_name == "csv" ? OutputFormat::Csv
                                        : OutputFormat::Table;
    job.mode = mode_name == "bound"    ? Mode::Bound
               : mode_name == "oracle" ? Mode::Oracle
               : mode_name == "diagnose" ? Mode::Diagnose
                                         : Mode::Exact;
    if (job.characteristic != 0 && !is_prime(job.characteristic))
      throw std::invalid_argument("--char must be 0 or a prime");

    if (complex_cmd->parsed()) {
      job.input_paths = {complex_file};
      for (const char* name : {"betti", "localcoh", "profile", "check"})
        if (complex_cmd->get_subcommand(name)->parsed()) job.subcommand = name;
      if (job.subcommand == "betti") return run_complex_betti(job, out);
      if (job.subcommand == "localcoh") return run_complex_localcoh(job, out);
      if (job.subcommand == "profile") return run_complex_profile(job, out);
      return run_complex_check(job, out);
    }
    if (segre_cmd->parsed()) {
      job.subcommand = "segre";
      job.validate(job.input_paths.size());
      return run_segre(job, out);
    }
    if (cm_cmd->parsed()) {
      if (dims.size() != regs.size())
        throw std::invalid_argument("--dims and --regs must have the same length");
      std::vector<CmFactor> factors;
      for (std::size_t i = 0; i < dims.size(); ++i)
        factors.push_back({static_cast<int>(dims[i]), regs[i]});
      return run_scalar(job, out, regularity_segre_cm(factors));
    }
    if (ver_cmd->parsed()) {
      if (dims.size() != regs.size() || dims.size() != job.veronese.size() ||
          (!job.shift.empty() && job.shift.size() != dims.size()))
        throw std::invalid_argument("--dims, --regs, --veronese, --shift lengths differ");
      job.validate(dims.size());
      std::vector<VeroneseCmFactor> factors;
      for (std::size_t i = 0; i < dims.size(); ++i)
        factors.push_back({static_cast<int>(dims[i]), regs[i],
                           job.shift.empty() ? 0 : job.shift[i], job.veronese[i]});
      return run_scalar(job, out, regularity_segre_veronese_cm(factors));
    }
    if (cox_cmd->parsed()) {
      if (dims.size() != twists.size() || dims.size() != job.veronese.size())
        throw std::invalid_argument("--dims, --twists, --veronese lengths differ");
      job.validate(dims.size());
      std::vector<CoxMaterovFactor> factors;
      for (std::size_t i = 0; i < dims.size(); ++i)
        factors.push_back({static_cast<int>(dims[i]), twists[i], job.veronese[i]});
      return run_scalar(job, out, cox_materov(factors));
    }
    if (verify_cmd->parsed()) {
      job.subcommand = "verify";
      return run_verify(job, out);
    }
    err << "no subcommand selected\n";
    return kInvalidInput;
  } catch (const hypothesis_error& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kHypothesisViolation;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}

} // namespace segrereg::cli
