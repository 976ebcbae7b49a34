// Acceptance suite: every criterion below runs exactly, prints one
// PASS/FAIL line, and the binary exits nonzero if anything failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "langlands/conjugation.hpp"
#include "langlands/dl_gl2.hpp"
#include "langlands/errors.hpp"
#include "langlands/report.hpp"
#include "langlands/smith.hpp"
#include "langlands/torus_character.hpp"
#include "langlands/weil_parameter.hpp"

using namespace langlands;

namespace {

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;
  std::function<std::string()> run;  // returns detail text, throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::shared_ptr<const LocalParams> make_params(std::int64_t p, std::int64_t ell, std::int64_t k) {
  const Presentation pres = ((p - 1) % ell == 0) ? Presentation::kKummer : Presentation::kPolynomial;
  return LocalParams::make({p, ell, k, pres, XiConvention::kInverseFrobenius, {}});
}

// ---- criterion 1: depth-zero agreement at ell = 2 ----------------------

std::string criterion1() {
  const std::int64_t expected_units[] = {6, 20, 42};
  const std::int64_t qs[] = {3, 5, 7};
  std::int64_t total = 0;
  for (int i = 0; i < 3; ++i) {
    auto prm = make_params(qs[i], 2, 3);
    const auto pairs = enumerate_admissible(prm, 0, 8);
    require(static_cast<std::int64_t>(pairs.size()) == expected_units[i] * 8,
            "admissible unit-character count at q=" + std::to_string(qs[i]));
    for (const auto& pair : pairs) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      require(computed == moy_target(pair), "chi_phi != chi*Delta_chi at q=" + std::to_string(qs[i]));
    }
    total += static_cast<std::int64_t>(pairs.size());
  }
  return std::to_string(total) + " pairs over q=3,5,7 with chi(varpi) in mu_8; counts 6/20/42";
}

// ---- criterion 2: depth-zero agreement at odd ell ----------------------

std::string criterion2() {
  // q = 3, ell = 3: polynomial presentation, character-level path only
  {
    auto prm = make_params(3, 3, 3);
    require(prm->presentation() == Presentation::kPolynomial, "q=3, ell=3 must use the polynomial model");
    const auto pairs = enumerate_admissible(prm, 0, 3);
    require(!pairs.empty(), "no admissible pairs at q=3, ell=3");
    for (const auto& pair : pairs) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      require(computed == moy_target(pair), "chi_phi != chi at q=3, ell=3");
      require(computed.cochar == pair.chi.varpi_value(), "Delta_chi not trivial at ell=3");
    }
  }
  // q = 7, ell = 3: Kummer model, full path through the conjugation layer
  std::int64_t transported = 0;
  {
    auto prm = make_params(7, 3, 5);
    require(prm->presentation() == Presentation::kKummer, "q=7, ell=3 must use the Kummer model");
    const auto data = build_conjugation(prm);
    const LocalElem teich = prm->teichmueller(prm->residue_field()->gen());
    for (const auto& pair : enumerate_admissible(prm, 0, 3)) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      require(computed == moy_target(pair), "chi_phi != chi at q=7, ell=3");
      const LevelChar moy = pair.chi * delta_twist(pair);
      for (const LocalElem& t : {prm->uniformizer(), teich, prm->uniformizer() * teich}) {
        require(transport_character(computed, data, embed_torus(t)) == moy.eval(t),
                "transported character mismatch at q=7, ell=3");
        ++transported;
      }
    }
  }
  return "q=3 (polynomial) and q=7 (Kummer + conjugation, " + std::to_string(transported) +
         " transports) agree with trivial Delta_chi";
}

// ---- criterion 3: positive depth -----------------------------------------

std::string criterion3() {
  std::ostringstream detail;
  for (std::int64_t r : {1, 2}) {
    auto prm = make_params(3, 2, 2 * (r + 1) + 1);
    auto units = UnitGroupModel::build(prm, r);
    require(units->order() == (r == 1 ? 72 : 648), "unit quotient order at r=" + std::to_string(r));
    const auto pairs = enumerate_admissible(prm, r, 2);
    require(!pairs.empty(), "no admissible pairs at r=" + std::to_string(r));
    for (const auto& pair : pairs) {
      const TorusChar computed = reeder_positive_depth_chi_phi(induce_parameter(pair));
      require(computed == moy_target(pair), "chi_phi != chi*Delta_chi at r=" + std::to_string(r));
    }
    detail << (r == 1 ? "" : ", ") << "r=" << r << ": " << pairs.size() << " pairs (|U|="
           << units->order() << ")";
  }
  return detail.str();
}

// ---- criterion 4: twisted norm machinery ---------------------------------

std::string criterion4() {
  ResidueTorus torus2(FieldTower::make({3, 1, 2}));
  require(verify_norm_fibers_exhaustive(torus2), "fibers at q=3, ell=2");
  require(verify_lambda_well_defined_exhaustive(torus2), "Lambda well-definedness at q=3, ell=2");

  ResidueTorus torus3(FieldTower::make({3, 1, 3}));
  require(verify_norm_fibers_exhaustive(torus3), "fibers at q=3, ell=3");
  require(verify_lambda_well_defined_sampled(torus3, 100000), "sampled Lambda at ell=3");
  return "exhaustive 64 tuples/4096 pairs at ell=2; fibers (q^l-1)^(l-1) exact; 100000 samples at ell=3";
}

// ---- criterion 5: Mackey / irreducibility oracle -------------------------

std::string criterion5() {
  std::int64_t admissible_checked = 0, fixed_checked = 0;
  for (std::int64_t q : {3, 5, 7}) {
    auto prm = make_params(q, 2, 3);
    auto ug = UnitGroupModel::build(prm, 0);
    const std::int64_t n = ug->generators()[0].order;
    for (std::int64_t e = 0; e < n; ++e) {
      for (std::int64_t w = 0; w < 8; ++w) {
        const LevelChar chi(ug, {RootOfUnity(e, n)}, RootOfUnity(w, 8));
        const AdmissiblePair pair{prm, chi};
        const auto row = induction_oracle(pair, 8);
        require(row.group->order() <= 10000, "oracle budget");
        const std::int64_t norm = oracle_inner_product(row, row);
        const auto twisted = induction_oracle({prm, chi.xi_twist()}, 8);
        if (is_admissible(chi)) {
          require(norm == 1, "norm != 1 for admissible chi");
          require(oracle_inner_product(row, twisted) == 1, "Ind(chi) != Ind(chi^xi)");
          ++admissible_checked;
        } else if (!chi.trivial_on_units()) {
          require(norm == 2, "norm != 2 for xi-fixed chi at ell=2");
          ++fixed_checked;
        }
        if (w == 1) break;  // w = 0 and w = 1 suffice per unit character
      }
    }
  }
  // odd ell: the same dichotomy with norm ell on the fixed locus
  auto prm3 = make_params(3, 3, 3);
  auto ug3 = UnitGroupModel::build(prm3, 0);
  for (std::int64_t e = 0; e < 26; ++e) {
    const LevelChar chi(ug3, {RootOfUnity(e, 26)}, RootOfUnity::one());
    const auto row = induction_oracle({prm3, chi}, 1);
    const std::int64_t norm = oracle_inner_product(row, row);
    if (is_admissible(chi)) {
      require(norm == 1, "norm != 1 for admissible chi at ell=3");
      require(oracle_inner_product(row, induction_oracle({prm3, chi.xi_twist()}, 1)) == 1,
              "Ind(chi) != Ind(chi^xi) at ell=3");
      ++admissible_checked;
    } else if (!chi.trivial_on_units()) {
      require(norm == 3, "norm != ell for xi-fixed chi at ell=3");
      ++fixed_checked;
    }
  }
  return std::to_string(admissible_checked) + " admissible (norm 1, Ind chi = Ind chi^xi), " +
         std::to_string(fixed_checked) + " xi-fixed (norm 2 at ell=2, norm ell at ell=3)";
}

// ---- criterion 6: conjugation layer --------------------------------------

std::string criterion6() {
  std::mt19937_64 rng(0xacce97);
  std::int64_t diagonalized = 0;
  for (auto [p, ell] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {5, 2}, {7, 2}, {7, 3}}) {
    auto prm = LocalParams::make({p, ell, 5, Presentation::kKummer, XiConvention::kInverseFrobenius, {}});
    const auto data = build_conjugation(prm);
    require(data.vandermonde.det().is_unit(), "Vandermonde determinant not a unit");
    require(data.p_lambda_inv * data.p_lambda.galois_xi() == data.w_dot,
            "p_lambda^{-1} Phi(p_lambda) != w.");
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::int64_t> c(prm->ell());
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % prm->modulus());
      const LocalElem t = prm->from_coeffs(c);
      diagonalize(data, embed_torus(t));  // throws unless the diagonal is (t, xi t, ...)
      ++diagonalized;
    }
  }
  return "k=5 at (q,ell) in {(3,2),(5,2),(7,2),(7,3)}; " + std::to_string(diagonalized) +
         " random torus elements diagonalized exactly";
}

// ---- criterion 7: DL-GL(2) table ------------------------------------------

std::string criterion7() {
  std::int64_t rows_checked = 0;
  for (std::int64_t q : {3, 5}) {
    auto tower = FieldTower::make({q, 1, 2});
    auto data = Gl2ClassData::build(tower);
    const std::int64_t n = tower->unit_order();
    std::vector<CuspidalCharRow> rows;
    std::vector<std::int64_t> reps;
    for (std::int64_t e = 0; e < n; ++e) {
      if ((e * q) % n == e) continue;
      rows.push_back(cuspidal_character(data, e));
      reps.push_back(e);
      require(rows.back().dim == q - 1, "dimension != q-1");
      require(verify_cuspidal(data, rows.back()), "norm/cuspidality failed");
      for (std::size_t i = 0; i < data.classes().size(); ++i)
        if (data.classes()[i].kind == Gl2Class::Kind::kSplit)
          require(rows.back().values[i].empty(), "nonzero split-regular value");
      ++rows_checked;
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const bool same_orbit = reps[i] == (reps[j] * q) % n;
        require(row_inner_product(data, rows[i], rows[j]) == (same_orbit ? 1 : 0),
                "orthogonality across Galois orbits failed");
      }
  }
  return std::to_string(rows_checked) + " regular rows at q=3,5: norm 1, dim q-1, cuspidal, orthogonal";
}

// ---- criterion 8: packet-size invariant -------------------------------------

std::string criterion8() {
  for (int ell : {2, 3, 5, 7}) {
    require(cokernel_torsion_free(one_minus_cycle(ell)), "torsion in X/(1-w)X");
    require(packet_size(ell) == 1, "packet size != 1");
  }
  RunConfig cfg;
  cfg.p = 3;
  cfg.ell = 2;
  cfg.varpi_order = 2;
  cfg.checks = {"agreement"};
  const auto report = run_verification(cfg);
  require(report.doc.at("packet_size").get<int>() == 1, "report packet_size != 1");
  return "SNF of (1 - w) torsion-free for ell = 2,3,5,7; reports carry packet_size = 1";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "depth-zero agreement, ell=2 (q=3,5,7; mu_8)", 10.0, criterion1},
      {2, "depth-zero agreement, odd ell (q=3 M5-only; q=7 full)", 60.0, criterion2},
      {3, "positive-depth agreement (q=3, ell=2, r=1,2)", 120.0, criterion3},
      {4, "twisted norm machinery (fibers + Lambda)", 60.0, criterion4},
      {5, "Mackey/irreducibility oracle", 60.0, criterion5},
      {6, "conjugation layer (p_lambda, Vandermonde, Ad)", 60.0, criterion6},
      {7, "DL-GL(2) cuspidal table (q=3,5)", 60.0, criterion7},
      {8, "packet-size invariant (SNF)", 10.0, criterion8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > c.time_limit_s) {
      ok = false;
      detail = "exceeded time limit";
    }
    std::printf("[%s] criterion %d: %s | %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), detail.c_str(), elapsed);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
