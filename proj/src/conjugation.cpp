#include "langlands/conjugation.hpp"

#include "langlands/errors.hpp"

namespace langlands {

RationalTorusElem embed_torus(const LocalElem& t) {
  const auto& prm = t.params();
  if (prm->presentation() != Presentation::kKummer)
    throw UnsupportedPresentation("embed_torus: requires the Kummer presentation");
  const int ell = static_cast<int>(prm->ell());
  const LocalElem big_delta = prm->from_int(prm->delta());

  // column j holds the coordinates of t * delta^j: entry (i, j) is
  // a_((i-j) mod ell), multiplied by Delta when the power wraps past ell
  LocalMatrix m(prm, ell);
  for (int j = 0; j < ell; ++j)
    for (int i = 0; i < ell; ++i) {
      const int idx = ((i - j) % ell + ell) % ell;
      const LocalElem a = prm->from_int(t.coeffs()[idx]);
      m.at(i, j) = (i < j) ? a * big_delta : a;
    }
  return RationalTorusElem{t, std::move(m)};
}

ConjugationData build_conjugation(const std::shared_ptr<const LocalParams>& params) {
  if (params->presentation() != Presentation::kKummer)
    throw UnsupportedPresentation("build_conjugation: requires the Kummer presentation");
  if (params->p() == 2) throw Unsupported("build_conjugation: p must be odd");
  const int ell = static_cast<int>(params->ell());

  ConjugationData out;
  out.params = params;

  // V = A^{-1}: row i evaluates delta-power coordinates at xi^i(delta)
  const LocalElem delta = params->basis_elem(1);
  LocalMatrix v(params, ell);
  for (int i = 0; i < ell; ++i) {
    LocalElem entry = params->one();
    const LocalElem conj_delta = delta.xi(i);
    for (int j = 0; j < ell; ++j) {
      v.at(i, j) = entry;
      entry = entry * conj_delta;
    }
  }
  out.vandermonde = v;

  if (!v.det().is_unit())
    throw PrecisionLoss("build_conjugation: Vandermonde determinant is not a unit");
  out.a = v.inverse();

  out.w_tilde = LocalMatrix::cycle(params, ell);
  out.s_tilde = out.w_tilde.inverse() * out.a.inverse() * out.a.galois_xi();
  if (!out.s_tilde.is_diagonal())
    throw CrossCheckFailure("build_conjugation: s~ is not diagonal");
  for (int i = 0; i < ell; ++i)
    if (!out.s_tilde.at(i, i).is_unit())
      throw CrossCheckFailure("build_conjugation: s~ has a non-unit diagonal entry");

  out.w_dot = out.s_tilde.inverse() * out.w_tilde * out.s_tilde * out.s_tilde.galois_xi();
  out.p_lambda = out.a * out.s_tilde;
  out.p_lambda_inv = out.p_lambda.inverse();

  // Lang's equation, and the Weyl class of the lift
  if (!(out.p_lambda_inv * out.p_lambda.galois_xi() == out.w_dot))
    throw CrossCheckFailure("build_conjugation: p_lambda^{-1} Phi(p_lambda) != w.");
  for (int j = 0; j < ell; ++j)
    for (int i = 0; i < ell; ++i) {
      const bool on_cycle = (i == (j + 1) % ell);
      if (on_cycle && !out.w_dot.at(i, j).is_unit())
        throw CrossCheckFailure("build_conjugation: w. vanishes on the cycle support");
      if (!on_cycle && !out.w_dot.at(i, j).is_zero())
        throw CrossCheckFailure("build_conjugation: w. is not supported on the cycle");
    }

  return out;
}

LocalMatrix diagonalize(const ConjugationData& data, const RationalTorusElem& elem) {
  const int ell = static_cast<int>(data.params->ell());
  LocalMatrix d = data.p_lambda_inv * elem.matrix * data.p_lambda;
  if (!d.is_diagonal()) throw CrossCheckFailure("diagonalize: Ad(p_lambda)^{-1} image is not diagonal");
  for (int i = 0; i < ell; ++i)
    if (!(d.at(i, i) == elem.t.xi(i)))
      throw CrossCheckFailure("diagonalize: diagonal is not (t, xi(t), ..., xi^(ell-1)(t))");
  return d;
}

RootOfUnity transport_character(const TorusChar& chi, const ConjugationData& data,
                                const RationalTorusElem& elem) {
  const LocalMatrix d = diagonalize(data, elem);
  return chi.eval(d.at(0, 0));
}

}  // namespace langlands
