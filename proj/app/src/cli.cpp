#include "tube/app/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tube/app/commands.hpp"
#include "tube/error.hpp"

namespace tube::app {

namespace {

Json strip_timing(Json j) {
  j["config"]["timing"] = false;
  for (auto& r : j["rows"]) r.erase("wall_ms");
  return j;
}

Report replay(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  Json stored = Json::parse(in);
  auto old = report_from_json(stored);
  std::vector<std::string> args;
  for (std::size_t i = 0; i < old.command.size(); ++i) {
    if (old.command[i] == "--out") {
      ++i;
      continue;
    }
    args.push_back(old.command[i]);
  }
  auto fresh = execute(args).report;
  Json a = strip_timing(stored), b = strip_timing(to_json(fresh));
  Report out{{}, cfg, {}};
  const auto& ra = a["rows"];
  const auto& rb = b["rows"];
  for (std::size_t i = 0; i < std::max(ra.size(), rb.size()); ++i) {
    Row row;
    row.name = i < ra.size() ? ra[i]["name"].get<std::string>() : rb[i]["name"].get<std::string>();
    bool same = i < ra.size() && i < rb.size() && ra[i] == rb[i];
    set_verdict(row, Json(same), Json(true), "reports reproduce from command, config and seed");
    out.rows.push_back(std::move(row));
  }
  Row header;
  header.name = "command and config";
  set_verdict(header, Json(Json(args) == b["command"] && a["config"] == b["config"]), Json(true),
              "reports reproduce from command, config and seed");
  out.rows.insert(out.rows.begin(), std::move(header));
  return out;
}

}  // namespace

Invocation execute(const std::vector<std::string>& args) {
  CLI::App app{"tubelab: prolongations, Euler-symmetric models and tube-type classification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "json", out_path;
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--large", cfg.large, "include the spinor:5 and severi rows");
  app.add_flag("--certify", cfg.certify_rational, "force the rational path");
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();
  app.add_flag("!--no-timing", cfg.timing, "omit wall-clock fields (byte-identical reports)");
  app.add_option("--window", cfg.stability_window, "samples without a dimension drop")->capture_default_str();
  app.add_option("--holdout", cfg.holdout, "held-out samples")->capture_default_str();
  app.add_option("--max-samples", cfg.max_samples, "sample cap")->capture_default_str();

  std::function<Report()> run;

  std::string spec;
  int order = 1;
  auto* prolong = app.add_subcommand("prolong", "dimensions of aut and its prolongations");
  prolong->add_option("spec", spec, "variety spec, e.g. segre:2x3 or project(veronese:3; 1,0,0,1,0,1)")->required();
  prolong->add_option("--order", order, "highest prolongation")->capture_default_str();
  prolong->callback([&] { run = [&] { return cmd_prolong(spec, order, cfg); }; });

  auto* autc = app.add_subcommand("aut", "aut by sampling with cross-checks");
  autc->add_option("spec", spec, "variety spec")->required();
  autc->callback([&] { run = [&] { return cmd_aut(spec, cfg); }; });

  auto* table1 = app.add_subcommand("identity-table", "dim aut^(1) = dim X over the IHSS list");
  table1->alias("table1");
  table1->callback([&] { run = [&] { return cmd_identity_table(cfg); }; });

  std::string type;
  std::optional<int> node, beta;
  auto* classify = app.add_subcommand("classify", "grading, IHSS and tube verdicts, fixed points");
  classify->add_option("--type", type, "Dynkin type with rank, e.g. E7")->required();
  classify->add_option("--node", node, "marked node (1-based, Bourbaki)");
  classify->add_option("--beta", beta, "node of the one-parameter subgroup (default: the marked node)");
  classify->callback([&] { run = [&] { return cmd_classify(type, node, beta, cfg); }; });

  int max_rank = 7;
  auto* thm = app.add_subcommand("tube-types", "classify tube-type IHSS by fixed-point weights");
  thm->alias("verify-thm11");
  thm->add_option("--max-rank", max_rank)->capture_default_str();
  thm->callback([&] { run = [&] { return cmd_tube_types(max_rank, cfg); }; });

  std::vector<std::string> family_args{"all"};
  int bound = 6;
  bool no_instances = false;
  auto* grid = app.add_subcommand("inequality-grid", "projection bounds and concrete projections");
  grid->add_option("--family,--lemma", family_args, "sympl, segre, pluecker, veronese or all")->capture_default_str();
  grid->add_option("--max", bound, "bound on every grid parameter")->capture_default_str();
  grid->add_flag("--no-instances", no_instances, "skip the brute-force projections");
  grid->callback([&] {
    run = [&] {
      std::vector<GridFamily> families;
      for (const auto& f : family_args) {
        if (f == "all")
          families.insert(families.end(),
                          {GridFamily::kSympl, GridFamily::kSegre, GridFamily::kPluecker, GridFamily::kVeronese});
        else
          families.push_back(parse_family(f));
      }
      return cmd_inequality_grid(families, bound, !no_instances, cfg);
    };
  });

  std::string system, point;
  std::size_t points = 20, samples = 100;
  auto* symbol = app.add_subcommand("symbol", "symbol systems and their Euler-symmetric models");
  symbol->require_subcommand(1);
  auto add_verb = [&](const std::string& name, const std::string& help, std::vector<std::string> aliases,
                      std::function<Report()> fn) {
    auto* verb = symbol->add_subcommand(name, help);
    for (const auto& a : aliases) verb->alias(a);
    verb->add_option("system", system, "minors:n, minors:axb, sym-minors:n, pfaffian:m, quadric:n, linear:n")->required();
    verb->callback([&run, fn] { run = fn; });
    return verb;
  };
  add_verb("check", "validate and build the model", {}, [&] { return cmd_symbol_check(system, cfg); });
  add_verb("embed", "f(u) for a point u of W", {}, [&] { return cmd_symbol_embed(system, point, cfg); })
      ->add_option("--point", point, "comma-separated rationals")
      ->required();
  add_verb("verify-rho", "rho_x, rho_y identities", {"verify-prop29"}, [&] { return cmd_symbol_rho(system, points, cfg); })
      ->add_option("--points", points)
      ->capture_default_str();
  add_verb("verify-lambda", "lambda against the VMRT prolongation", {"verify-prop36"},
           [&] { return cmd_symbol_lambda(system, cfg); });
  add_verb("verify-bracket", "[g_1, g_-1] acts through Df", {"verify-lemma34"},
           [&] { return cmd_symbol_bracket(system, cfg); });
  add_verb("base-locus", "base locus against VMRT samples", {}, [&] { return cmd_symbol_base_locus(system, samples, cfg); })
      ->add_option("--samples", samples)
      ->capture_default_str();
  add_verb("pair", "Euler source and sink of a conjugated grading action", {}, [&] { return cmd_symbol_pair(system, cfg); });

  std::string replay_path;
  auto* report = app.add_subcommand("report", "report utilities");
  report->require_subcommand(1);
  auto* rep = report->add_subcommand("replay", "re-run a stored report and compare");
  rep->add_option("file", replay_path)->required()->check(CLI::ExistingFile);
  rep->callback([&] { run = [&] { return replay(replay_path, cfg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw CliExit{app.exit(e)};
  }
  cfg.format = format == "csv" ? Format::kCsv : Format::kJson;
  Invocation inv{run(), out_path};
  inv.report.command = args;
  inv.report.config = cfg;
  return inv;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    auto inv = execute(args);
    auto text = render(inv.report, inv.report.config.format);
    if (inv.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(inv.out_path);
      if (!out) throw Error("cannot write " + inv.out_path);
      out << text;
    }
    return inv.report.all_pass() ? 0 : 1;
  } catch (const CliExit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "tubelab: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tube::app
