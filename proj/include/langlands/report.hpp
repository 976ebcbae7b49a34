#pragma once

// Orchestration: enumerate admissible pairs, run both correspondences,
// compare, and emit deterministic reports.  Canonical output is JSON with
// sorted keys; the CSV export is a per-pair summary.  Any disagreement or
// failed cross-check aborts with the offending pair identified.

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "langlands/characters.hpp"
#include "langlands/conjugation.hpp"
#include "langlands/dl_gl2.hpp"
#include "langlands/torus_character.hpp"
#include "langlands/weil_parameter.hpp"

namespace langlands {

struct RunConfig {
  std::int64_t p = 3;
  std::int64_t e = 1;  // residue degree of F; the local layer supports q = p only
  std::int64_t ell = 2;
  std::int64_t level = 0;
  std::int64_t varpi_order = 1;               // N
  std::optional<std::int64_t> precision;      // default 2(r+1)+1
  std::optional<Presentation> presentation;   // default: Kummer when ell | p-1
  std::optional<std::int64_t> delta;          // Kummer unit override
  XiConvention convention = XiConvention::kInverseFrobenius;
  std::set<std::string> checks = {"agreement", "conjugation", "oracle", "norm"};
  std::int64_t budget = FieldTower::kDefaultBudget;
  std::int64_t oracle_budget = 10'000;

  std::int64_t effective_precision() const { return precision.value_or(2 * (level + 1) + 1); }
  Presentation effective_presentation() const {
    return presentation.value_or((p - 1) % ell == 0 ? Presentation::kKummer : Presentation::kPolynomial);
  }
};

struct AgreementReport {
  nlohmann::json doc;
  bool all_agree = false;
  std::int64_t pair_count = 0;
  std::int64_t orbit_count = 0;

  std::string to_json_string() const { return doc.dump(2) + "\n"; }
  std::string to_csv() const;
};

// the full pipeline; throws (with the failing pair named) on any cross-check
// failure, and reports verdict "disagree" without throwing if the final
// comparison itself fails
AgreementReport run_verification(const RunConfig& config);

// both factorizations through characters of the elliptic torus
nlohmann::json factorization_demo(const AdmissiblePair& pair);

// ---- serialization helpers --------------------------------------------

nlohmann::json to_json(const RootOfUnity& r);
nlohmann::json to_json(const MonomialMatrix& m);
nlohmann::json pair_to_json(const AdmissiblePair& pair);
nlohmann::json trselp_to_json(const Trselp& phi);
nlohmann::json torus_char_to_json(const TorusChar& chi);
nlohmann::json local_matrix_to_json(const LocalMatrix& m);
nlohmann::json conjugation_to_json(const ConjugationData& data);
nlohmann::json dl_table_to_json(const Gl2ClassData& data, const std::vector<CuspidalCharRow>& rows);
std::string dl_table_to_csv(const Gl2ClassData& data, const std::vector<CuspidalCharRow>& rows);
std::string pairs_to_csv(const std::vector<AdmissiblePair>& pairs);

// key-value config file (lines of "key = value", '#' comments)
RunConfig parse_config_file(const std::string& path);
void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);

// environment override for enumeration budgets
std::int64_t budget_from_env(std::int64_t fallback = FieldTower::kDefaultBudget);

}  // namespace langlands
