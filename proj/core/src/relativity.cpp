// Copyright 2026 The tpslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tpslab/relativity.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace tpslab {

DefectReport DefectReport::from_matrix(ComplexMatrix m) {
  DefectReport r;
  r.trace_residual = std::abs(m.trace());
  r.frobenius_defect = m.norm();
  r.trace_norm_defect = trace_norm(m);
  r.defect_matrix = std::move(m);
  if (!(r.trace_residual <= tol::kTraceResidual)) {
    std::ostringstream os;
    os << "defect matrix trace residual " << r.trace_residual << " exceeds "
       << tol::kTraceResidual;
    throw InvariantViolation(os.str());
  }
  return r;
}

DefectReport cross_relevance_matrix(const DensityMatrix& rho, const Structure& sA,
                                    const ProjectionSpec& specA, const Structure& sB) {
  if (sA.total_dim() != sB.total_dim()) {
    throw InvalidInput("cross_relevance_matrix: structures act on different spaces");
  }
  const ComplexMatrix q = complement(rho, sA, specA);
  return DefectReport::from_matrix(reduced_operator(q, sB, Part::S));
}

// ---------------------------------------------------------------------------
// SeparableEnsemble

namespace {

void check_spectral_cache(const DensityMatrix& rho, const RealVector& vals,
                          const ComplexMatrix& vecs) {
  const ComplexMatrix rebuilt = vecs * vals.asDiagonal() * vecs.adjoint();
  if ((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() > tol::kHermitian) {
    throw InvariantViolation("SeparableEnsemble: spectral cache does not reconstruct its term");
  }
}

}  // namespace

SeparableEnsemble::SeparableEnsemble(std::vector<double> weights,
                                     std::vector<std::pair<DensityMatrix, DensityMatrix>> terms)
    : weights_(std::move(weights)) {
  if (terms.empty() || terms.size() != weights_.size()) {
    throw InvalidInput("SeparableEnsemble: need one weight per term and at least one term");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidInput("SeparableEnsemble: weights must be positive and finite");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol::kWeights) {
    std::ostringstream os;
    os << "SeparableEnsemble: weights sum to " << total << ", not 1";
    throw InvalidInput(os.str());
  }
  const Index dS = terms.front().first.dim();
  const Index dE = terms.front().second.dim();
  terms_.reserve(terms.size());
  for (auto& [rs, re] : terms) {
    if (rs.dim() != dS || re.dim() != dE) {
      throw InvalidInput("SeparableEnsemble: terms have inconsistent factor dimensions");
    }
    EigenSystem es = eigh(rs.matrix());
    EigenSystem ee = eigh(re.matrix());
    check_spectral_cache(rs, es.values, es.vectors);
    check_spectral_cache(re, ee.values, ee.vectors);
    terms_.push_back(Term{std::move(rs), std::move(re), std::move(es.values),
                          std::move(es.vectors), std::move(ee.values), std::move(ee.vectors)});
  }
}

ComplexMatrix SeparableEnsemble::assemble_local() const {
  ComplexMatrix out = ComplexMatrix::Zero(dS() * dE(), dS() * dE());
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    out += weights_[t] * kron(terms_[t].rho_S.matrix(), terms_[t].rho_E.matrix());
  }
  return out;
}

DensityMatrix SeparableEnsemble::assemble(const Structure& s) const {
  if (s.dS() != dS() || s.dE() != dE()) {
    throw InvalidInput("SeparableEnsemble::assemble: structure split does not match factors");
  }
  ComplexMatrix m = from_structure_basis(assemble_local(), s);
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Coefficient formulas

ComplexMatrix coeff_A_pure(const PureState& psi, const Structure& sA,
                           const DensityMatrix& rho_ref, const Structure& sB) {
  if (sA.total_dim() != sB.total_dim() || psi.dim() != sA.total_dim()) {
    throw InvalidInput("coeff_A_pure: dimension mismatch between state and structures");
  }
  if (rho_ref.dim() != sA.dE()) {
    throw InvalidInput("coeff_A_pure: rho_ref does not act on the environment of sA");
  }
  const Index dSB = sB.dS();
  const Index dEB = sB.dE();

  // Schmidt form of psi in sA, restricted to nonzero coefficients.
  const SchmidtDecomposition sd = schmidt(to_structure_basis(psi.vec(), sA), sA.dS(), sA.dE());
  const Index rank = sd.rank();

  // Spectral form of rho_ref: pi_alpha, |alpha>.
  const EigenSystem ref = eigh(rho_ref.matrix());
  const Index n_alpha = ref.values.size();

  // C_{i alpha} = <alpha | i>_E, so that |i>_E = sum_alpha C_{i alpha} |alpha>.
  ComplexMatrix c_coef(rank, n_alpha);
  for (Index i = 0; i < rank; ++i) {
    double norm_sq = 0.0;
    for (Index a = 0; a < n_alpha; ++a) {
      c_coef(i, a) = ref.vectors.col(a).dot(sd.right.col(i));
      norm_sq += std::norm(c_coef(i, a));
    }
    if (std::abs(norm_sq - 1.0) > tol::kHermitian) {
      throw InvariantViolation("coeff_A_pure: sum_alpha |C_{i alpha}|^2 != 1");
    }
  }

  // D^{i alpha}_{mn}: coordinates of |i>_S |alpha>_E (sA) in the product basis of sB.
  const ComplexMatrix to_b = change_of_basis(sA, sB);
  std::vector<std::vector<ComplexVector>> d_coef(static_cast<std::size_t>(rank));
  for (Index i = 0; i < rank; ++i) {
    const ComplexVector left = sd.left.col(i);
    for (Index a = 0; a < n_alpha; ++a) {
      const ComplexVector alpha = ref.vectors.col(a);
      d_coef[static_cast<std::size_t>(i)].push_back(to_b * kron(left, alpha));
    }
  }
  auto D = [&](Index i, Index a, Index m, Index n) -> Complex {
    return d_coef[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)](m * dEB + n);
  };

  // Lambda^m_n = sum_{i,alpha} c_i C_{i alpha} D^{i alpha}_{mn}
  ComplexMatrix lambda = ComplexMatrix::Zero(dSB, dEB);
  for (Index m = 0; m < dSB; ++m) {
    for (Index n = 0; n < dEB; ++n) {
      Complex acc = 0.0;
      for (Index i = 0; i < rank; ++i) {
        for (Index a = 0; a < n_alpha; ++a) {
          acc += sd.coeffs(i) * c_coef(i, a) * D(i, a, m, n);
        }
      }
      lambda(m, n) = acc;
    }
  }

  // A_{mm'} = sum_n [ Lambda^m_n Lambda^{m'*}_n
  //                   - sum_{i,alpha} p_i pi_alpha D^{i alpha}_{mn} D^{i alpha *}_{m'n} ]
  ComplexMatrix out = ComplexMatrix::Zero(dSB, dSB);
  for (Index m = 0; m < dSB; ++m) {
    for (Index mp = 0; mp < dSB; ++mp) {
      Complex acc = 0.0;
      for (Index n = 0; n < dEB; ++n) {
        acc += lambda(m, n) * std::conj(lambda(mp, n));
        for (Index i = 0; i < rank; ++i) {
          const double p_i = sd.coeffs(i) * sd.coeffs(i);
          for (Index a = 0; a < n_alpha; ++a) {
            acc -= p_i * ref.values(a) * D(i, a, m, n) * std::conj(D(i, a, mp, n));
          }
        }
      }
      out(m, mp) = acc;
    }
  }
  return out;
}

ComplexMatrix coeff_Lambda_mixed(const SeparableEnsemble& ens, const Structure& sA,
                                 const DensityMatrix& rho_ref, const Structure& sB) {
  if (sA.total_dim() != sB.total_dim() || ens.dS() != sA.dS() || ens.dE() != sA.dE()) {
    throw InvalidInput("coeff_Lambda_mixed: dimension mismatch between ensemble and structures");
  }
  if (rho_ref.dim() != sA.dE()) {
    throw InvalidInput("coeff_Lambda_mixed: rho_ref does not act on the environment of sA");
  }
  const Index dSB = sB.dS();
  const Index dEB = sB.dE();
  const ComplexMatrix to_b = change_of_basis(sA, sB);
  const auto& terms = ens.terms();
  const auto& lambda = ens.weights();

  // tr_E rho = sum_i lambda_i rho_Si -> kappa_p, |varphi_p>
  ComplexMatrix reduced = ComplexMatrix::Zero(sA.dS(), sA.dS());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    reduced += lambda[t] * terms[t].rho_S.matrix();
  }
  const EigenSystem kappa = eigh(reduced);
  // rho_ref -> omega_q, |psi_q>
  const EigenSystem omega = eigh(rho_ref.matrix());

  ComplexMatrix out = ComplexMatrix::Zero(dSB, dSB);

  // + sum_{i,m,n,b} lambda_i p_im pi_in C^{imn}_{ab} C^{imn*}_{a'b}
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    for (Index m = 0; m < term.p.size(); ++m) {
      for (Index n = 0; n < term.pi.size(); ++n) {
        const double w = lambda[t] * term.p(m) * term.pi(n);
        const ComplexVector c =
            to_b * kron(ComplexVector(term.chi.col(m)), ComplexVector(term.phi.col(n)));
        for (Index a = 0; a < dSB; ++a) {
          for (Index ap = 0; ap < dSB; ++ap) {
            Complex acc = 0.0;
            for (Index b = 0; b < dEB; ++b) {
              acc += c(a * dEB + b) * std::conj(c(ap * dEB + b));
            }
            out(a, ap) += w * acc;
          }
        }
      }
    }
  }

  // - sum_{p,q,b} kappa_p omega_q D^{pq}_{ab} D^{pq*}_{a'b}
  for (Index p = 0; p < kappa.values.size(); ++p) {
    for (Index q = 0; q < omega.values.size(); ++q) {
      const double w = kappa.values(p) * omega.values(q);
      const ComplexVector d =
          to_b * kron(ComplexVector(kappa.vectors.col(p)), ComplexVector(omega.vectors.col(q)));
      for (Index a = 0; a < dSB; ++a) {
        for (Index ap = 0; ap < dSB; ++ap) {
          Complex acc = 0.0;
          for (Index b = 0; b < dEB; ++b) {
            acc += d(a * dEB + b) * std::conj(d(ap * dEB + b));
          }
          out(a, ap) -= w * acc;
        }
      }
    }
  }

  const double residual = std::abs(out.trace());
  if (residual > tol::kTraceResidual) {
    std::ostringstream os;
    os << "coeff_Lambda_mixed: trace residual " << residual << " exceeds "
       << tol::kTraceResidual;
    throw InvariantViolation(os.str());
  }
  return out;
}

// ---------------------------------------------------------------------------

double lemma2_defect(const DensityMatrix& rho, const Structure& sA, const ProjectionSpec& specA,
                     const Structure& sB, const ProjectionSpec& specB) {
  if (specA.kind() != ProjectionKind::TypeI || specB.kind() != ProjectionKind::TypeI) {
    throw InvalidInput("lemma2_defect: only TypeI projections are supported");
  }
  if (sA.total_dim() != sB.total_dim() || rho.dim() != sA.total_dim()) {
    throw InvalidInput("lemma2_defect: dimension mismatch");
  }
  const ComplexMatrix pa = project(rho, sA, specA);
  const ComplexMatrix pb = project(rho, sB, specB);
  return trace_norm(project(pb, sA, specA) - project(pa, sB, specB));
}

double mutual_information(const DensityMatrix& rho, const Structure& s) {
  const DensityMatrix rs = reduced_state(rho, s, Part::S);
  const DensityMatrix re = reduced_state(rho, s, Part::E);
  return von_neumann_entropy(rs) + von_neumann_entropy(re) - von_neumann_entropy(rho);
}

PureState teleport_state(const PureState& u) {
  if (u.dim() != 2) {
    throw InvalidInput("teleport_state: input must be a qubit state");
  }
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  return PureState(kron(u.vec(), bell));
}

}  // namespace tpslab
