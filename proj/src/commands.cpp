#include "ddm/commands.hpp"

#include <future>
#include <sstream>

#include "ddm/cover_engine.hpp"
#include "ddm/suites.hpp"

namespace ddm {

namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

void add_value(Json& j, Row& row, const Rational& v, const OutputOptions& out) {
  j["value"] = to_string(v);
  row.push_back(to_string(v));
  if (out.decimal) {
    j["decimal_display_only"] = to_decimal(v, *out.decimal);
    row.push_back(to_decimal(v, *out.decimal));
  }
}

void add_missing(Json& j, Row& row, const char* what, const OutputOptions& out) {
  j["value"] = what;
  row.push_back(what);
  if (out.decimal) row.emplace_back();
}

Row value_header(Row head, const OutputOptions& out) {
  head.push_back("value");
  if (out.decimal) head.push_back("decimal_display_only");
  if (out.witness) head.push_back("witness");
  return head;
}

std::string witness_cell(const ValueCertificate& cert) {
  std::string s;
  for (const CoverEntry& e : cert.witness.entries)
    s += (s.empty() ? "" : " ") + std::string("m=") + std::to_string(e.m) + ":" + to_literal(e.set);
  return s;
}

void add_witness(Json& j, Row& row, const std::optional<ValueCertificate>& cert, const OutputOptions& out) {
  if (!out.witness) return;
  if (cert) {
    j["witness"] = certificate_witness_json(*cert);
    row.push_back(witness_cell(*cert));
  } else {
    j["witness"] = nullptr;
    row.emplace_back();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void report_rows(const Report& r, std::vector<Row>& table) {
  for (const Check& c : r.checks)
    table.push_back({r.name, c.name, to_string(c.verdict), std::to_string(c.cases)});
}

}  // namespace

Json certificate_witness_json(const ValueCertificate& cert) {
  Json entries = Json::array();
  for (const CoverEntry& e : cert.witness.entries) entries.push_back(Json{{"m", e.m}, {"set", to_literal(e.set)}});
  return Json{{"base_shift", cert.witness.base_shift}, {"cost_shift", cert.cost_shift}, {"entries", entries}};
}

std::string CommandOutput::render_json() const { return json.dump(2) + "\n"; }

std::string CommandOutput::render_csv() const {
  std::ostringstream out;
  for (const Row& row : table) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k]);
    out << "\n";
  }
  return out.str();
}

CommandOutput cmd_eval(const ProblemSpec& spec, const OutputOptions& out) {
  if (spec.eval.empty()) fail(ErrorKind::InvalidInput, "spec has no eval entries");
  CommandOutput o;
  o.json = Json{{"command", "eval"}, {"results", Json::array()}};
  OutputOptions no_witness = out;
  no_witness.witness = false;
  o.table.push_back(value_header({"measure", "set", "shift"}, no_witness));
  for (const EvalQuery& q : spec.eval) {
    const Rational v = eval_shifted(spec.measure(q.measure), q.shift, spec.set(q.set));
    Json j{{"measure", q.measure}, {"set", q.set}, {"shift", q.shift}};
    Row row{q.measure, q.set, std::to_string(q.shift)};
    add_value(j, row, v, out);
    o.json["results"].push_back(std::move(j));
    o.table.push_back(std::move(row));
  }
  return o;
}

CommandOutput cmd_phi(const ProblemSpec& spec, const OutputOptions& out) {
  if (spec.phi.empty()) fail(ErrorKind::InvalidInput, "spec has no phi entries");
  CommandOutput o;
  o.json = Json{{"command", "phi"}, {"results", Json::array()}};
  o.table.push_back(value_header({"measure", "query", "parenthesized", "D", "W", "i"}, out));
  for (const PhiQuery& q : spec.phi) {
    const CylinderMeasure& mu = spec.measure(q.measure);
    const WindowSet& set = spec.set(q.query);
    Json rows = Json::array();
    for (int d : q.depths)
      for (int w : q.widths)
        for (int i : q.shifts) {
          const TruncationConfig cfg{d, w, i};
          const ValueCertificate cert = q.parenthesized ? phi_paren_truncated(set, mu, cfg) : phi_truncated(set, mu, cfg);
          Json j{{"D", d}, {"W", w}, {"i", i}};
          Row row{q.measure, q.query, q.parenthesized ? "true" : "false", std::to_string(d), std::to_string(w),
                  std::to_string(i)};
          add_value(j, row, cert.value, out);
          add_witness(j, row, cert, out);
          rows.push_back(std::move(j));
          o.table.push_back(std::move(row));
        }
    o.json["results"].push_back(Json{{"measure", q.measure},
                                     {"query", q.query},
                                     {"parenthesized", q.parenthesized},
                                     {"grid", std::move(rows)}});
  }
  return o;
}

CommandOutput cmd_psi(const ProblemSpec& spec, const OutputOptions& out) {
  if (spec.psi.empty()) fail(ErrorKind::InvalidInput, "spec has no psi entries");
  CommandOutput o;
  o.json = Json{{"command", "psi"}, {"results", Json::array()}};
  o.table.push_back(value_header({"objective", "phi", "query", "D", "W", "eps", "i"}, out));
  for (const PsiQuery& q : spec.psi) {
    const PsiGrid grid =
        psi_eps_grid(spec.set(q.query), spec.measure(q.objective), spec.measure(q.phi), q.eps, q.shifts, q.depth, q.width);
    Json rows = Json::array();
    for (std::size_t e = 0; e < grid.eps.size(); ++e)
      for (std::size_t s = 0; s < grid.shifts.size(); ++s) {
        const auto& cell = grid.cells[e][s];
        Json j{{"eps", to_string(grid.eps[e])}, {"i", grid.shifts[s]}};
        Row row{q.objective, q.phi, q.query, std::to_string(q.depth), std::to_string(q.width), to_string(grid.eps[e]),
                std::to_string(grid.shifts[s])};
        if (cell) add_value(j, row, cell->value, out);
        else add_missing(j, row, "infeasible", out);
        add_witness(j, row, cell, out);
        rows.push_back(std::move(j));
        o.table.push_back(std::move(row));
      }
    o.json["results"].push_back(Json{{"objective", q.objective},
                                     {"phi", q.phi},
                                     {"query", q.query},
                                     {"D", q.depth},
                                     {"W", q.width},
                                     {"phi_budget_base", to_string(grid.phi_reference)},
                                     {"monotone_in_eps", grid.monotone_in_eps},
                                     {"monotone_in_shift", grid.monotone_in_shift},
                                     {"grid", std::move(rows)}});
  }
  return o;
}

CommandOutput cmd_chain(const ProblemSpec& spec, const OutputOptions& out) {
  if (spec.chain.empty()) fail(ErrorKind::InvalidInput, "spec has no chain entries");
  CommandOutput o;
  o.json = Json{{"command", "chain"}, {"results", Json::array()}};
  o.table.push_back(value_header({"phi", "query", "level", "psi", "c"}, out));
  for (const ChainQuery& q : spec.chain) {
    std::vector<CylinderMeasure> psis;
    for (const std::string& name : q.psis) psis.push_back(spec.measure(name));
    const bool is_signed = !q.c.empty();
    const ChainResult r = is_signed ? psi_signed(spec.set(q.query), spec.measure(q.phi), psis, q.c, q.eps, q.config)
                                    : psi_chain(spec.set(q.query), spec.measure(q.phi), psis, q.eps, q.config);
    Json levels = Json::array();
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      const auto& cert = r.levels[k].certificate;
      const std::string c = is_signed ? to_string(q.c[k]) : "0/1";
      Json j{{"level", k + 1}, {"psi", q.psis[k]}, {"c", c}};
      Row row{q.phi, q.query, std::to_string(k + 1), q.psis[k], c};
      if (cert) add_value(j, row, cert->value, out);
      else add_missing(j, row, "infeasible", out);
      add_witness(j, row, cert, out);
      levels.push_back(std::move(j));
      o.table.push_back(std::move(row));
    }
    Json res{{"phi", q.phi},
             {"query", q.query},
             {"signed", is_signed},
             {"eps", to_string(q.eps)},
             {"D", q.config.depth},
             {"W", q.config.width},
             {"i", q.config.shift},
             {"phi_truncated", to_string(r.phi_reference)},
             {"feasible", r.feasible()}};
    res["failed_level"] = r.failed_level ? Json(*r.failed_level) : Json(nullptr);
    res["levels"] = std::move(levels);
    o.json["results"].push_back(std::move(res));
  }
  return o;
}

CommandOutput cmd_example(const ProblemSpec& spec, const std::string& name) {
  if (name != "e1" && name != "e2" && name != "all")
    fail(ErrorKind::UnknownName, "unknown example '" + name + "' (expected e1, e2 or all)");
  std::vector<Report> reports;
  if (name != "e2") reports.push_back(example1(spec.example1));
  if (name != "e1") reports.push_back(example2(spec.example2));
  CommandOutput o;
  o.json = Json{{"command", "example"}, {"reports", Json::array()}};
  o.table.push_back({"report", "check", "verdict", "cases"});
  Verdict v = Verdict::Pass;
  for (const Report& r : reports) {
    o.json["reports"].push_back(r.to_json());
    report_rows(r, o.table);
    v = combine(v, r.verdict());
  }
  o.json["verdict"] = to_string(v);
  o.exit_code = v == Verdict::Fail ? 1 : 0;
  return o;
}

CommandOutput cmd_verify(const ProblemSpec& spec, const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) names = {suite};
  else fail(ErrorKind::UnknownName, "unknown suite '" + suite + "'");
  const SuiteOptions options{seed, spec.verify_samples};
  std::vector<std::future<Report>> running;
  for (const std::string& n : names)
    running.push_back(std::async(std::launch::async, [n, options] { return run_suite(n, options); }));
  CommandOutput o;
  o.json = Json{{"command", "verify"}, {"suite", suite}, {"seed", seed}, {"reports", Json::array()}};
  o.table.push_back({"report", "check", "verdict", "cases"});
  Verdict v = Verdict::Pass;
  for (auto& f : running) {
    const Report r = f.get();
    o.json["reports"].push_back(r.to_json());
    report_rows(r, o.table);
    v = combine(v, r.verdict());
  }
  o.json["verdict"] = to_string(v);
  o.exit_code = v == Verdict::Fail ? 1 : 0;
  return o;
}

}  // namespace ddm
