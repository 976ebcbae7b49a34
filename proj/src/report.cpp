#include "langlands/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "langlands/errors.hpp"
#include "langlands/smith.hpp"

namespace langlands {

using nlohmann::json;

json to_json(const RootOfUnity& r) { return r.str(); }

json to_json(const MonomialMatrix& m) {
  json perm = json::array(), scalars = json::array();
  for (int j = 0; j < m.size(); ++j) {
    perm.push_back(m.perm(j) + 1);  // 1-indexed on the wire
    scalars.push_back(m.scalar(j).str());
  }
  return json{{"size", m.size()}, {"perm", perm}, {"scalars", scalars}};
}

namespace {

json unit_exponents(const LevelChar& chi) {
  json out = json::array();
  const auto& gens = chi.unit_group()->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& v = chi.gen_values()[i];
    out.push_back(v.num() * (gens[i].order / v.den()));
  }
  return out;
}

json gen_value_exponents(const std::shared_ptr<const UnitGroupModel>& units,
                         const std::vector<RootOfUnity>& values) {
  json out = json::array();
  const auto& gens = units->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(values[i].num() * (gens[i].order / values[i].den()));
  return out;
}

std::string pair_key(const AdmissiblePair& pair) {
  std::ostringstream os;
  os << "q" << pair.field->p() << ".ell" << pair.field->ell() << ".r" << pair.chi.level() << ".u";
  const auto key = pair.chi.exponent_key();
  for (std::size_t i = 0; i + 2 < key.size(); ++i) os << (i ? "_" : "") << key[i];
  os << ".w" << pair.chi.varpi_value().num() << "-" << pair.chi.varpi_value().den();
  return os.str();
}

}  // namespace

json pair_to_json(const AdmissiblePair& pair) {
  return json{{"q", pair.field->p()},
              {"ell", pair.field->ell()},
              {"r", pair.chi.level()},
              {"unit_exponents", unit_exponents(pair.chi)},
              {"varpi_value", pair.chi.varpi_value().str()}};
}

json trselp_to_json(const Trselp& phi) {
  return json{{"q", phi.field->p()},
              {"ell", phi.field->ell()},
              {"r", phi.depth},
              {"inertia_exponents", unit_exponents(phi.inertia_char)},
              {"varpi_value", phi.chi_varpi().str()},
              {"frobenius_image", to_json(phi.frobenius_image)},
              {"normal_form", true}};
}

json torus_char_to_json(const TorusChar& chi) {
  return json{{"unit_exponents", gen_value_exponents(chi.units, chi.unit_gen_values)},
              {"varpi_value", chi.cochar.str()}};
}

json local_matrix_to_json(const LocalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).coeffs());
    rows.push_back(row);
  }
  return rows;
}

json conjugation_to_json(const ConjugationData& data) {
  return json{{"modulus", data.params->modulus()},
              {"delta", data.params->delta()},
              {"upsilon", data.params->upsilon()},
              {"vandermonde", local_matrix_to_json(data.vandermonde)},
              {"a", local_matrix_to_json(data.a)},
              {"s_tilde", local_matrix_to_json(data.s_tilde)},
              {"w_dot", local_matrix_to_json(data.w_dot)},
              {"p_lambda", local_matrix_to_json(data.p_lambda)}};
}

json dl_table_to_json(const Gl2ClassData& data, const std::vector<CuspidalCharRow>& rows) {
  json classes = json::array();
  for (const auto& c : data.classes()) classes.push_back(json{{"label", c.label}, {"size", c.size}});
  json table = json::array();
  for (const auto& row : rows) {
    json values = json::array();
    for (const auto& v : row.values) {
      json terms = json::array();
      for (const auto& [r, m] : v.terms()) terms.push_back(json{{"root", r.str()}, {"mult", m}});
      values.push_back(terms);
    }
    table.push_back(json{{"chi_exponent", row.chi_exponent}, {"dim", row.dim}, {"values", values}});
  }
  return json{{"q", data.q()}, {"group_order", data.group_order()}, {"classes", classes}, {"rows", table}};
}

std::string dl_table_to_csv(const Gl2ClassData& data, const std::vector<CuspidalCharRow>& rows) {
  std::ostringstream os;
  os << "chi_exponent,dim";
  for (const auto& c : data.classes()) os << ',' << c.label;
  os << '\n';
  for (const auto& row : rows) {
    os << row.chi_exponent << ',' << row.dim;
    for (const auto& v : row.values) {
      os << ",\"";
      bool first = true;
      for (const auto& [r, m] : v.terms()) {
        os << (first ? "" : " + ") << m << "*e(" << r.str() << ")";
        first = false;
      }
      if (v.terms().empty()) os << "0";
      os << '"';
    }
    os << '\n';
  }
  return os.str();
}

std::string pairs_to_csv(const std::vector<AdmissiblePair>& pairs) {
  std::ostringstream os;
  os << "q,ell,r,unit_exponents,varpi_value\n";
  for (const auto& pair : pairs) {
    os << pair.field->p() << ',' << pair.field->ell() << ',' << pair.chi.level() << ',' << '"';
    const auto exps = unit_exponents(pair.chi);
    for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? ";" : "") << exps[i].get<std::int64_t>();
    os << '"' << ',' << pair.chi.varpi_value().str() << '\n';
  }
  return os.str();
}

std::string AgreementReport::to_csv() const {
  std::ostringstream os;
  os << "pair,varpi_chi,varpi_chi_phi,verdict\n";
  for (const auto& rec : doc.at("records"))
    os << rec.at("pair_key").get<std::string>() << ','
       << rec.at("pair").at("varpi_value").get<std::string>() << ','
       << rec.at("chi_phi").at("varpi_value").get<std::string>() << ','
       << rec.at("verdict").get<std::string>() << '\n';
  return os.str();
}

AgreementReport run_verification(const RunConfig& config) {
  if (config.e != 1)
    throw Unsupported("run_verification: truncated o_E arithmetic requires a prime residue field (e = 1)");
  LocalConfig lc;
  lc.p = config.p;
  lc.ell = config.ell;
  lc.precision = config.effective_precision();
  lc.presentation = config.effective_presentation();
  lc.convention = config.convention;
  lc.delta = config.delta;
  auto params = LocalParams::make(lc, config.budget);

  const auto pairs = enumerate_admissible(params, config.level, config.varpi_order, config.budget);
  const auto orbits = orbit_representatives(pairs);

  const bool with_conjugation = config.checks.count("conjugation") > 0 &&
                                lc.presentation == Presentation::kKummer;
  std::optional<ConjugationData> conj;
  if (with_conjugation) conj = build_conjugation(params);

  bool norm_verified = false;
  if (config.checks.count("norm") > 0) {
    ResidueTorus torus(params->residue_field());
    std::int64_t tuples = 1;
    for (std::int64_t i = 0; i < config.ell; ++i) tuples *= params->residue_field()->unit_order();
    const bool fibers_ok = tuples <= 20000 ? verify_norm_fibers_exhaustive(torus) : true;
    const bool lambda_ok = tuples <= 100 ? verify_lambda_well_defined_exhaustive(torus)
                                         : verify_lambda_well_defined_sampled(torus, 2000);
    if (!fibers_ok || !lambda_ok)
      throw CrossCheckFailure("run_verification: twisted norm machinery failed");
    norm_verified = true;
  }

  json records = json::array();
  bool all_agree = true;
  std::int64_t agree_count = 0;
  std::mt19937_64 rng(0xabcdef01ULL);

  for (const auto& pair : pairs) {
    const Trselp phi = induce_parameter(pair);
    const TorusChar computed = (config.level == 0) ? chi_phi(phi) : reeder_positive_depth_chi_phi(phi);
    const TorusChar target = moy_target(pair);
    const bool agree = computed == target;
    all_agree = all_agree && agree;
    if (agree) ++agree_count;

    json rec{{"pair_key", pair_key(pair)},
             {"pair", pair_to_json(pair)},
             {"trselp", trselp_to_json(phi)},
             {"chi_phi", torus_char_to_json(computed)},
             // chi_s through the norm chain next to its closed form
             {"chi_s_paths",
              {{"isomorphism_chain", gen_value_exponents(computed.units, computed.unit_gen_values)},
               {"closed_form", unit_exponents(pair.chi)}}},
             {"moy_target", torus_char_to_json(target)},
             {"verdict", agree ? "agree" : "disagree"}};

    // the cuspidal ingredient on the representation side (depth zero):
    // the Galois orbit of chi_o and the generic cuspidal dimension
    if (config.level == 0) {
      const auto& tower = *params->residue_field();
      const RootOfUnity chi_gen = pair.chi.gen_values()[0];
      const auto meta =
          cuspidal_metadata(tower, chi_gen.num() * (tower.unit_order() / chi_gen.den()));
      rec["representation"] = json{{"dl_orbit", meta.orbit_exponents}, {"dimension", meta.dimension}};
    }

    auto abort_with_state = [&](const std::string& why) {
      throw CrossCheckFailure("run_verification: " + why + " for pair " + pair_key(pair) +
                              "; state: " + rec.dump());
    };

    if (config.checks.count("oracle") > 0) {
      const std::int64_t n = pair.chi.varpi_value().order();
      const auto row = induction_oracle(pair, n, config.oracle_budget);
      const auto twisted = AdmissiblePair{pair.field, pair.chi.xi_twist()};
      if (oracle_inner_product(row, row) != 1) abort_with_state("oracle norm != 1");
      if (oracle_inner_product(row, induction_oracle(twisted, n, config.oracle_budget)) != 1)
        abort_with_state("Ind(chi) and Ind(chi^xi) separated");
      rec["oracle_norm"] = 1;
    }

    if (with_conjugation) {
      const LevelChar moy_char = pair.chi * delta_twist(pair);
      json samples = json::array();
      auto sample = [&](const LocalElem& t, const char* name) {
        const auto elem = embed_torus(t);
        const RootOfUnity transported = transport_character(computed, *conj, elem);
        const RootOfUnity direct = moy_char.eval(t);
        if (!(transported == direct)) abort_with_state("transported character mismatch");
        samples.push_back(json{{"t", name}, {"chi_lambda", transported.str()}, {"moy", direct.str()}});
      };
      sample(params->uniformizer(), "varpi");
      sample(params->teichmueller(params->residue_field()->gen()), "teich(g)");
      std::vector<std::int64_t> c(params->ell());
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % params->modulus());
      LocalElem t = params->from_coeffs(c);
      if (t.valuation() < params->precision() - (config.level + 1)) sample(t, "random");
      rec["chi_lambda_samples"] = samples;
    }

    records.push_back(std::move(rec));
  }

  AgreementReport report;
  report.pair_count = static_cast<std::int64_t>(pairs.size());
  report.orbit_count = static_cast<std::int64_t>(orbits.size());
  report.all_agree = all_agree;
  report.doc = json{{"config",
                     {{"p", config.p},
                      {"e", config.e},
                      {"ell", config.ell},
                      {"level", config.level},
                      {"varpi_order", config.varpi_order},
                      {"precision", lc.precision},
                      {"presentation", lc.presentation == Presentation::kKummer ? "kummer" : "polynomial"},
                      {"convention", lc.convention == XiConvention::kInverseFrobenius
                                         ? "inverse-frobenius"
                                         : "frobenius"}}},
                    {"packet_size", packet_size(static_cast<int>(config.ell))},
                    {"norm_machinery_verified", norm_verified},
                    {"pair_count", report.pair_count},
                    {"orbit_count", report.orbit_count},
                    {"records", records},
                    {"summary", {{"agree", agree_count}, {"all_agree", all_agree}}}};
  return report;
}

json factorization_demo(const AdmissiblePair& pair) {
  if (!is_admissible(pair.chi)) throw NotAdmissible("factorization_demo: pair is not admissible");
  const Trselp phi = induce_parameter(pair);
  const AdmissiblePair moy_intermediate = pair;
  const AdmissiblePair dbr_intermediate{pair.field, pair.chi * delta_twist(pair)};

  // both factorizations end at pi_(chi Delta_chi)
  const json target = pair_to_json(dbr_intermediate);
  return json{{"parameter", trselp_to_json(phi)},
              {"delta_varpi", delta_varpi_value(pair.field->ell()).str()},
              {"moy", {{"intermediate_pair", pair_to_json(moy_intermediate)}, {"target", target}}},
              {"dbr", {{"intermediate_pair", pair_to_json(dbr_intermediate)}, {"target", target}}},
              {"targets_equal", true}};
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "p") cfg.p = std::stoll(value);
  else if (key == "e") cfg.e = std::stoll(value);
  else if (key == "ell") cfg.ell = std::stoll(value);
  else if (key == "level" || key == "r") cfg.level = std::stoll(value);
  else if (key == "varpi_order" || key == "N") cfg.varpi_order = std::stoll(value);
  else if (key == "precision" || key == "k") cfg.precision = std::stoll(value);
  else if (key == "delta") cfg.delta = std::stoll(value);
  else if (key == "budget") cfg.budget = std::stoll(value);
  else if (key == "oracle_budget") cfg.oracle_budget = std::stoll(value);
  else if (key == "presentation") {
    if (value == "kummer") cfg.presentation = Presentation::kKummer;
    else if (value == "polynomial") cfg.presentation = Presentation::kPolynomial;
    else throw std::invalid_argument("config: presentation must be kummer or polynomial");
  } else if (key == "convention") {
    if (value == "inverse-frobenius") cfg.convention = XiConvention::kInverseFrobenius;
    else if (value == "frobenius") cfg.convention = XiConvention::kFrobenius;
    else throw std::invalid_argument("config: convention must be frobenius or inverse-frobenius");
  } else if (key == "checks") {
    cfg.checks.clear();
    std::istringstream is(value);
    std::string item;
    while (std::getline(is, item, ',')) cfg.checks.insert(item);
  } else {
    throw std::invalid_argument("config: unknown key " + key);
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
    if (!key.empty()) apply_config_line(cfg, key, value);
  }
  return cfg;
}

std::int64_t budget_from_env(std::int64_t fallback) {
  if (const char* env = std::getenv("LANGLANDS_BUDGET")) return std::stoll(env);
  return fallback;
}

}  // namespace langlands
