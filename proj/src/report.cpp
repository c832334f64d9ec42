#include "grace/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "grace/errors.hpp"

namespace grace {

namespace {

nlohmann::json config_snapshot(const VerificationReport& r) {
  nlohmann::json config{{"max_n", r.max_n}, {"workers", r.workers}, {"seed", r.seed}};
  if (r.sample_size) config["sample_size"] = *r.sample_size;
  return config;
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j{
      {"lemma", r.lemma},
      {"n", r.n},
      {"domain_size", r.domain_size},
      {"checked", r.checked},
      {"premise_holds", r.premise_holds},
      {"verdict", r.verdict},
      {"config", config_snapshot(r)},
  };
  j["counterexamples"] = nlohmann::json::array();
  for (const Counterexample& c : r.counterexamples)
    j["counterexamples"].push_back({{"f", c.f.to_literal()}, {"details", c.details}});
  if (r.lemma == "swap-remark") {
    j["flagged"] = r.flagged;
    nlohmann::json instances = nlohmann::json::array();
    for (const SwapInstance& inst : r.swap_instances) {
      nlohmann::json e{{"f", inst.f.to_literal()}};
      if (inst.premise_already_strict) {
        e["skipped"] = "premise already strict";
      } else if (inst.error) {
        e["error"] = *inst.error;
      } else {
        e["g"] = inst.g->to_literal();
        e["aut_strict_after_swap"] = inst.aut_strict_after_swap;
        e["grl_f"] = inst.grl_f;
        e["grl_g"] = inst.grl_g;
        e["grl_equal"] = inst.grl_equal;
      }
      instances.push_back(std::move(e));
    }
    j["instances"] = std::move(instances);
  }
  if (r.s) j["s"] = *r.s;
  if (r.t) j["t"] = *r.t;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  if (r.lemma == "swap-remark") {
    out << "f,status,g,aut_strict_after_swap,grl_f,grl_g,grl_equal\n";
    for (const SwapInstance& inst : r.swap_instances) {
      out << '"' << inst.f.to_literal() << '"' << ',';
      if (inst.premise_already_strict)
        out << "skipped,,,,,\n";
      else if (inst.error)
        out << "error,,,,,\n";
      else
        out << "checked," << '"' << inst.g->to_literal() << '"' << ','
            << (inst.aut_strict_after_swap ? 1 : 0) << ',' << inst.grl_f << ','
            << inst.grl_g << ',' << (inst.grl_equal ? 1 : 0) << '\n';
    }
    return out.str();
  }
  out << "lemma,n,domain_size,checked,premise_holds,verdict,counterexamples\n";
  out << r.lemma << ',' << r.n << ',' << r.domain_size << ',' << r.checked << ','
      << r.premise_holds << ',' << r.verdict << ',' << r.counterexamples.size() << '\n';
  for (const Counterexample& c : r.counterexamples)
    out << "counterexample," << '"' << c.f.to_literal() << '"' << ',' << '"' << c.details
        << '"' << ",,,,\n";
  return out.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "lemma " << r.lemma << "  n=" << r.n << "  domain=" << r.domain_size
      << "  checked=" << r.checked << "  premise_holds=" << r.premise_holds
      << "  verdict=" << r.verdict << "  wall_time_ms=" << r.wall_time.count() << '\n';
  for (const Counterexample& c : r.counterexamples)
    out << "  counterexample f=" << c.f.to_literal() << "  " << c.details << '\n';
  if (r.lemma == "swap-remark") {
    out << "  flagged=" << r.flagged << '\n';
    for (const SwapInstance& inst : r.swap_instances) {
      out << "  f=" << inst.f.to_literal();
      if (inst.premise_already_strict)
        out << "  skipped (premise already strict)";
      else if (inst.error)
        out << "  error: " << *inst.error;
      else
        out << "  g=" << inst.g->to_literal()
            << "  aut_strict_after_swap=" << (inst.aut_strict_after_swap ? "yes" : "no")
            << "  |GrL(f)|=" << inst.grl_f << "  |GrL(g)|=" << inst.grl_g
            << (inst.grl_equal ? "" : "  [flagged: GrL counts differ]");
      out << '\n';
    }
  }
  if (r.witness) {
    out << "  witness=";
    for (std::size_t i = 0; i < r.witness->size(); ++i)
      out << (i ? "," : "") << (*r.witness)[i];
    out << '\n';
  }
  return out.str();
}

std::string single_result_csv(const nlohmann::json& payload) {
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = payload.begin(); it != payload.end(); ++it)
    out << it.key() << ',' << it.value().dump() << '\n';
  return out.str();
}

namespace {

void write_all(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output path: " + path);
  file << body;
  if (!file) throw IoError("write failed: " + path);
}

}  // namespace

void emit_report(const nlohmann::json& payload, OutputFormat format,
                 const std::string& path, std::ostream& out) {
  std::string body;
  switch (format) {
    case OutputFormat::kJson:
      body = payload.dump(2) + "\n";
      break;
    case OutputFormat::kCsv:
      body = single_result_csv(payload);
      break;
    case OutputFormat::kText:
      body = payload.dump(2) + "\n";
      break;
  }
  write_all(body, path, out);
}

void emit_report(const VerificationReport& report, OutputFormat format,
                 const std::string& path, std::ostream& out) {
  std::string body;
  switch (format) {
    case OutputFormat::kJson:
      body = report_to_json(report).dump(2) + "\n";
      break;
    case OutputFormat::kCsv:
      body = report_to_csv(report);
      break;
    case OutputFormat::kText:
      body = report_to_text(report);
      break;
  }
  write_all(body, path, out);
}

}  // namespace grace
