// Command-line workbench: enumerate admissible pairs, run both
// correspondences, and emit reports.  Exit code 0 means every requested
// verification agreed.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "langlands/report.hpp"

namespace {

using namespace langlands;

struct PairFlags {
  RunConfig cfg;
  std::vector<std::int64_t> unit_exponents;
  std::string varpi = "0/1";
};

void add_field_flags(CLI::App* cmd, RunConfig& cfg, std::string* config_path = nullptr) {
  cmd->add_option("--p", cfg.p, "residual characteristic (q = p)");
  cmd->add_option("--e", cfg.e, "residue degree of F (only 1 is supported here)");
  cmd->add_option("--ell", cfg.ell, "prime degree of E/F");
  cmd->add_option("--level,-r", cfg.level, "character level r");
  cmd->add_option("--varpi-order,-N", cfg.varpi_order, "bound N on the order of chi(varpi)");
  cmd->add_option("--precision,-k", cfg.precision, "working precision p^k (default 2(r+1)+1)");
  cmd->add_option("--delta", cfg.delta, "Kummer unit Delta (default: least usable)");
  cmd->add_option("--budget", cfg.budget, "enumeration budget");
  cmd->add_option_function<std::string>(
      "--presentation",
      [&cfg](const std::string& v) { apply_config_line(cfg, "presentation", v); },
      "kummer | polynomial (default: kummer when ell | p-1)");
  cmd->add_option_function<std::string>(
      "--convention",
      [&cfg](const std::string& v) { apply_config_line(cfg, "convention", v); },
      "xi residue action: inverse-frobenius (default) | frobenius");
  if (config_path)
    cmd->add_option("--config", *config_path, "key = value config file; flags override");
}

std::shared_ptr<const LocalParams> make_params(const RunConfig& cfg) {
  LocalConfig lc;
  lc.p = cfg.p;
  lc.ell = cfg.ell;
  lc.precision = cfg.effective_precision();
  lc.presentation = cfg.effective_presentation();
  lc.convention = cfg.convention;
  lc.delta = cfg.delta;
  return LocalParams::make(lc, cfg.budget);
}

AdmissiblePair make_pair(const PairFlags& flags) {
  auto params = make_params(flags.cfg);
  auto units = UnitGroupModel::build(params, flags.cfg.level, flags.cfg.budget);
  const auto& gens = units->generators();
  if (flags.unit_exponents.size() != gens.size())
    throw std::invalid_argument("expected " + std::to_string(gens.size()) +
                                " unit exponents for this level");
  std::vector<RootOfUnity> values(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    values[i] = RootOfUnity(flags.unit_exponents[i], gens[i].order);
  LevelChar chi(units, std::move(values), RootOfUnity::parse(flags.varpi));
  return AdmissiblePair{params, chi};
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot open output file " + output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tame local Langlands workbench for GL(ell, F)"};
  app.require_subcommand(1);

  std::string output, format = "json", config_path;
  bool orbits = false;

  RunConfig cfg;
  cfg.budget = budget_from_env();
  PairFlags pf;
  pf.cfg.budget = cfg.budget;

  auto* enumerate = app.add_subcommand("enumerate-pairs", "list admissible pairs at exact level r");
  add_field_flags(enumerate, cfg, &config_path);
  enumerate->add_flag("--orbits", orbits, "collapse to F-isomorphism classes");
  enumerate->add_option("--format", format, "json | csv");
  enumerate->add_option("--output,-o", output, "output path (default stdout)");

  auto* induce = app.add_subcommand("induce", "pair -> TRSELP normal form");
  add_field_flags(induce, pf.cfg);
  induce->add_option("--unit-exponents", pf.unit_exponents, "chi on the unit-group generators")
      ->delimiter(',');
  induce->add_option("--varpi", pf.varpi, "chi(varpi) as num/den");
  induce->add_option("--output,-o", output, "output path");

  auto* chiphi = app.add_subcommand("chi-phi", "pair -> chi_phi and the Moy target");
  add_field_flags(chiphi, pf.cfg);
  chiphi->add_option("--unit-exponents", pf.unit_exponents, "chi on the unit-group generators")
      ->delimiter(',');
  chiphi->add_option("--varpi", pf.varpi, "chi(varpi) as num/den");
  chiphi->add_option("--output,-o", output, "output path");

  auto* conj = app.add_subcommand("conjugation", "audit dump of the p_lambda construction");
  add_field_flags(conj, cfg);
  conj->add_option("--output,-o", output, "output path");

  std::int64_t dl_q = 3;
  auto* dl = app.add_subcommand("dl-table", "cuspidal character table of GL(2, f_q)");
  dl->add_option("--q", dl_q, "field size (prime power)");
  dl->add_option("--format", format, "json | csv");
  dl->add_option("--output,-o", output, "output path");

  auto* verify = app.add_subcommand("verify", "run the full agreement verification");
  add_field_flags(verify, cfg, &config_path);
  verify->add_option_function<std::string>(
      "--checks", [&cfg](const std::string& v) { apply_config_line(cfg, "checks", v); },
      "comma list: agreement,conjugation,oracle,norm");
  verify->add_option("--format", format, "json | csv");
  verify->add_option("--output,-o", output, "output path");

  auto* demo = app.add_subcommand("demo-factorization", "both factorizations of the correspondence");
  add_field_flags(demo, pf.cfg);
  demo->add_option("--unit-exponents", pf.unit_exponents, "chi on the unit-group generators")
      ->delimiter(',');
  demo->add_option("--varpi", pf.varpi, "chi(varpi) as num/den");
  demo->add_option("--output,-o", output, "output path");

  CLI11_PARSE(app, argc, argv);

  // config file fills every field the command line left untouched
  auto merge_config = [&](CLI::App* sub) {
    if (config_path.empty()) return;
    const RunConfig file_cfg = parse_config_file(config_path);
    auto untouched = [&](const char* name) {
      const auto* opt = sub->get_option_no_throw(name);
      return opt == nullptr || opt->count() == 0;
    };
    if (untouched("--p")) cfg.p = file_cfg.p;
    if (untouched("--e")) cfg.e = file_cfg.e;
    if (untouched("--ell")) cfg.ell = file_cfg.ell;
    if (untouched("--level")) cfg.level = file_cfg.level;
    if (untouched("--varpi-order")) cfg.varpi_order = file_cfg.varpi_order;
    if (untouched("--precision") && file_cfg.precision) cfg.precision = file_cfg.precision;
    if (untouched("--presentation") && file_cfg.presentation) cfg.presentation = file_cfg.presentation;
    if (untouched("--convention")) cfg.convention = file_cfg.convention;
    if (untouched("--checks")) cfg.checks = file_cfg.checks;
    if (untouched("--budget")) cfg.budget = file_cfg.budget;
  };

  try {
    if (app.got_subcommand(enumerate)) {
      merge_config(enumerate);
      auto params = make_params(cfg);
      auto pairs = enumerate_admissible(params, cfg.level, cfg.varpi_order, cfg.budget);
      if (orbits) pairs = orbit_representatives(pairs);
      if (format == "csv") {
        emit(pairs_to_csv(pairs), output);
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& pair : pairs) arr.push_back(pair_to_json(pair));
        emit(arr.dump(2) + "\n", output);
      }
    } else if (app.got_subcommand(induce)) {
      const auto pair = make_pair(pf);
      emit(trselp_to_json(induce_parameter(pair)).dump(2) + "\n", output);
    } else if (app.got_subcommand(chiphi)) {
      const auto pair = make_pair(pf);
      const auto phi = induce_parameter(pair);
      const auto computed = (pf.cfg.level == 0) ? chi_phi(phi) : reeder_positive_depth_chi_phi(phi);
      const auto target = moy_target(pair);
      nlohmann::json out{{"trselp", trselp_to_json(phi)},
                         {"chi_phi", torus_char_to_json(computed)},
                         {"moy_target", torus_char_to_json(target)},
                         {"agree", computed == target}};
      emit(out.dump(2) + "\n", output);
      if (!(computed == target)) return 1;
    } else if (app.got_subcommand(conj)) {
      emit(conjugation_to_json(build_conjugation(make_params(cfg))).dump(2) + "\n", output);
    } else if (app.got_subcommand(dl)) {
      std::int64_t p = dl_q, e = 1;
      for (std::int64_t d = 2; d * d <= p; ++d)
        while (p % d == 0 && p > d) {
          p /= d;
          ++e;
        }
      auto tower = FieldTower::make({p, e, 2}, budget_from_env());
      auto data = Gl2ClassData::build(tower);
      std::vector<CuspidalCharRow> rows;
      for (std::int64_t ex = 0; ex < tower->unit_order(); ++ex) {
        if ((ex * tower->q()) % tower->unit_order() == ex) continue;
        if (((ex * tower->q()) % tower->unit_order()) < ex) continue;  // one row per orbit
        rows.push_back(cuspidal_character(data, ex));
      }
      emit(format == "csv" ? dl_table_to_csv(data, rows) : dl_table_to_json(data, rows).dump(2) + "\n",
           output);
    } else if (app.got_subcommand(verify)) {
      merge_config(verify);
      const auto report = run_verification(cfg);
      emit(format == "csv" ? report.to_csv() : report.to_json_string(), output);
      if (!report.all_agree) {
        std::cerr << "verification FAILED: some pair disagreed\n";
        return 1;
      }
    } else if (app.got_subcommand(demo)) {
      const auto pair = make_pair(pf);
      emit(factorization_demo(pair).dump(2) + "\n", output);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
