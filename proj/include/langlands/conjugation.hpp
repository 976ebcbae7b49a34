#pragma once

// The rational-points layer: the embedding E^* -> GL(ell, F) over the basis
// 1, delta, ..., delta^(ell-1), the Vandermonde conjugator A, the torus
// element s~ and the lift w., p_lambda with p_lambda^{-1} Phi(p_lambda) = w.,
// and the transported character chi_lambda = chi_phi o Ad(p_lambda)^{-1}.
// Requires the Kummer presentation.

#include <memory>

#include "langlands/local_matrix.hpp"
#include "langlands/torus_character.hpp"

namespace langlands {

struct RationalTorusElem {
  LocalElem t;
  LocalMatrix matrix;  // the multiplication-by-t matrix over the delta basis
};

// t -> its matrix; UnsupportedPresentation unless the Kummer model is live
RationalTorusElem embed_torus(const LocalElem& t);

struct ConjugationData {
  std::shared_ptr<const LocalParams> params;
  LocalMatrix vandermonde;   // A^{-1}: row i is (1, xi^i(delta), ..., xi^i(delta)^(ell-1))
  LocalMatrix a;             // A
  LocalMatrix s_tilde;       // w~^{-1} A^{-1} Phi(A), diagonal with unit entries
  LocalMatrix w_tilde;       // the cyclic permutation matrix
  LocalMatrix w_dot;         // the fixed lift s~^{-1} w~ s~ Phi(s~)
  LocalMatrix p_lambda;      // A s~
  LocalMatrix p_lambda_inv;
};

// builds and verifies the whole package; PrecisionLoss if the Vandermonde
// determinant fails to be a unit (it never should)
ConjugationData build_conjugation(const std::shared_ptr<const LocalParams>& params);

// Ad(p_lambda)^{-1} applied to a torus matrix; checks the image is the
// diagonal (t, xi(t), ..., xi^(ell-1)(t))
LocalMatrix diagonalize(const ConjugationData& data, const RationalTorusElem& elem);

// chi_lambda(t): conjugate to the diagonal, decompose t = varpi^n u, evaluate
RootOfUnity transport_character(const TorusChar& chi, const ConjugationData& data,
                                const RationalTorusElem& elem);

}  // namespace langlands
