#include "grace/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grace/certificate.hpp"
#include "grace/errors.hpp"
#include "grace/labeling.hpp"
#include "grace/matrix.hpp"
#include "grace/perm_group.hpp"
#include "grace/report.hpp"
#include "grace/verify.hpp"

namespace grace {

Transformation parse_function_literal(const std::string& text) {
  std::vector<int> images;
  std::size_t pos = 0;
  int index = 0;
  if (text.empty()) throw ParseError("empty function literal");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const std::size_t first = token.find_first_not_of(" \t");
    const std::size_t last = token.find_last_not_of(" \t");
    token = (first == std::string::npos) ? "" : token.substr(first, last - first + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("non-numeric token '" + token + "' at index " + std::to_string(index));
    images.push_back(value);
    ++index;
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Transformation::from_images(std::move(images));
}

namespace {

nlohmann::json permutation_json(const Permutation& p) {
  return nlohmann::json(p);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw ParseError("unknown output format: " + name);
}

struct CliState {
  RunConfig config;
  std::string format = "json";
  std::string output;
  std::string f_literal;
  int n = 0;
  int m = 0;
  int s = 0;
  int t = 0;
  std::string lemma;
  bool list_candidates = false;
};

int emit_and_status(const nlohmann::json& payload, const CliState& st, std::ostream& out) {
  emit_report(payload, parse_format(st.format), st.output, out);
  return 0;
}

int run_verify(const CliState& st, std::ostream& out) {
  VerificationReport report;
  if (st.lemma == "a")
    report = verify_lemma_a(st.n, st.config);
  else if (st.lemma == "b")
    report = verify_lemma_b(st.n, st.config);
  else if (st.lemma == "swap")
    report = verify_swap_remark(st.n, st.config);
  else if (st.lemma == "trees")
    report = verify_trees_corollary(st.n, st.config);
  else if (st.lemma == "cycles")
    report = verify_cycles_corollary(st.s, st.t, st.config);
  else
    throw ParseError("unknown lemma: " + st.lemma + " (expected a|b|swap|trees|cycles)");
  emit_report(report, parse_format(st.format), st.output, out);
  return report.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact graceful-labeling engine for functional graphs"};
  app.require_subcommand(1);
  CliState st;

  app.add_option("--max-n", st.config.max_n, "domain size guard")
      ->envname("GRACE_MAX_N");
  app.add_option("--workers", st.config.workers, "worker threads for sweeps");
  app.add_option("--seed", st.config.seed, "seed for sampled sweeps");
  app.add_option("--format", st.format, "json|csv|text");
  app.add_option("--output", st.output, "write the report to this path");

  auto* beta_cmd = app.add_subcommand("beta", "max distinct edge labels over all labelings");
  beta_cmd->add_option("--f", st.f_literal, "function literal")->required();

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of G_f");
  aut_cmd->add_option("--f", st.f_literal)->required();

  auto* grl_cmd = app.add_subcommand("grl", "graceful conjugates, one per Aut coset");
  grl_cmd->add_option("--f", st.f_literal)->required();

  auto* certify_cmd = app.add_subcommand("certify", "determinantal certificate");
  certify_cmd->add_option("--f", st.f_literal)->required();

  auto* subset_cmd = app.add_subcommand("subset-certify", "m-subset certificate");
  subset_cmd->add_option("--f", st.f_literal)->required();
  subset_cmd->add_option("--m", st.m, "subset size, 2..n")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "list semigroup members");
  enum_cmd->add_option("--n", st.n, "domain size")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a lemma sweep");
  verify_cmd->add_option("--lemma", st.lemma, "a|b|swap|trees|cycles")->required();
  verify_cmd->add_option("--n", st.n, "domain size");
  verify_cmd->add_option("--s", st.s, "cycle count exponent (cycles)");
  verify_cmd->add_option("--t", st.t, "cycle length exponent (cycles)");

  auto* cycles_cmd = app.add_subcommand("cycles", "build the loop-plus-cycles permutation");
  cycles_cmd->add_option("--s", st.s)->required();
  cycles_cmd->add_option("--t", st.t)->required();

  auto* swap_cmd = app.add_subcommand("swap", "fixed-point swap of a semigroup member");
  swap_cmd->add_option("--f", st.f_literal)->required();
  swap_cmd->add_flag("--candidates", st.list_candidates, "apply at every qualifying vertex");

  // global options (--output, --format, ...) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    st.config.validate();
    parse_format(st.format);
    const BetaOptions beta_opts{st.config.max_n, st.config.workers};
    const auto capped = [&](const Transformation& f) {
      if (f.n() > st.config.max_n)
        throw SizeCapError("n=" + std::to_string(f.n()) + " exceeds max_n=" +
                           std::to_string(st.config.max_n));
      return f;
    };

    if (beta_cmd->parsed()) {
      const Transformation f = parse_function_literal(st.f_literal);
      const BetaResult r = beta(f, beta_opts);
      return emit_and_status(
          {{"beta", r.beta}, {"graceful", r.graceful}, {"witness", r.witness.values}}, st, out);
    }
    if (aut_cmd->parsed()) {
      const Transformation f = capped(parse_function_literal(st.f_literal));
      const PermutationGroup g = automorphism_group(f);
      nlohmann::json elements = nlohmann::json::array();
      for (const Permutation& p : g.elements) elements.push_back(permutation_json(p));
      return emit_and_status({{"order", g.order()}, {"elements", elements}}, st, out);
    }
    if (grl_cmd->parsed()) {
      const Transformation f = parse_function_literal(st.f_literal);
      const GrLResult r = grl(f, st.config.max_n);
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& [sigma, g] : r.representatives)
        reps.push_back({{"sigma", permutation_json(sigma)}, {"g", g.to_literal()}});
      return emit_and_status({{"count", r.count}, {"representatives", reps}}, st, out);
    }
    if (certify_cmd->parsed()) {
      const Transformation f = parse_function_literal(st.f_literal);
      const auto [ok, witness] = determinantal_certificate(f, st.config.max_n);
      nlohmann::json payload{{"certificate", ok}};
      if (witness) payload["witness"] = witness->values;
      return emit_and_status(payload, st, out);
    }
    if (subset_cmd->parsed()) {
      const Transformation f = parse_function_literal(st.f_literal);
      const bool ok = subset_certificate(f, st.m, st.config.max_n);
      return emit_and_status({{"m", st.m}, {"certificate", ok}}, st, out);
    }
    if (enum_cmd->parsed()) {
      if (st.n < 1 || st.n > st.config.max_n)
        throw SizeCapError("enumerate: n outside [1, max_n]");
      nlohmann::json members = nlohmann::json::array();
      for_each_semigroup_member(st.n, [&](const Transformation& f) {
        members.push_back(f.to_literal());
      });
      return emit_and_status({{"n", st.n}, {"count", members.size()}, {"members", members}},
                             st, out);
    }
    if (verify_cmd->parsed()) return run_verify(st, out);
    if (cycles_cmd->parsed()) {
      const Transformation f = cycle_union(st.s, st.t, st.config.max_n);
      return emit_and_status(
          {{"s", st.s}, {"t", st.t}, {"n", f.n()}, {"f", f.to_literal()}}, st, out);
    }
    if (swap_cmd->parsed()) {
      const Transformation f = capped(parse_function_literal(st.f_literal));
      if (st.list_candidates) {
        nlohmann::json results = nlohmann::json::array();
        for (int v : fixed_point_swap_candidates(f))
          results.push_back({{"root", v}, {"g", fixed_point_swap_at(f, v).to_literal()}});
        return emit_and_status({{"f", f.to_literal()}, {"candidates", results}}, st, out);
      }
      const std::vector<int> candidates = fixed_point_swap_candidates(f);
      if (candidates.empty())
        throw ConstructionUnavailableError("no vertex at distance exactly 2 from a leaf");
      const Transformation g = fixed_point_swap(f);
      return emit_and_status(
          {{"f", f.to_literal()}, {"root", candidates.front()}, {"g", g.to_literal()}}, st,
          out);
    }
    throw ParseError("no subcommand given");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace grace
