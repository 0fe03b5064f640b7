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

#include "tpslab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace tpslab {

namespace {

std::string dims_str(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInput(std::string(what) + ": expected a non-empty square matrix, got " +
                       dims_str(m));
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index dA, Index dB, Keep keep) {
  if (dA <= 0 || dB <= 0 || m.rows() != m.cols() || m.rows() != dA * dB) {
    std::ostringstream os;
    os << "partial_trace: matrix " << dims_str(m) << " incompatible with dA=" << dA
       << ", dB=" << dB;
    throw InvalidInput(os.str());
  }
  if (keep == Keep::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dA, dA);
    for (Index i = 0; i < dA; ++i) {
      for (Index j = 0; j < dA; ++j) {
        out(i, j) = m.block(i * dB, j * dB, dB, dB).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
  for (Index i = 0; i < dA; ++i) {
    out += m.block(i * dB, i * dB, dB, dB);
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols() || m.size() == 0) {
    return false;
  }
  return hermiticity_defect(m) <= rel_tol * m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

bool all_finite(const ComplexMatrix& m) {
  return m.array().isFinite().all();
}

EigenSystem eigh(const ComplexMatrix& h) {
  require_square(h, "eigh");
  if (!all_finite(h)) {
    throw InvalidInput("eigh: matrix has non-finite entries");
  }
  if (!is_hermitian(h)) {
    std::ostringstream os;
    os << "eigh: matrix is not Hermitian (max |H - H^dagger| = " << hermiticity_defect(h)
       << ", max |H| = " << h.cwiseAbs().maxCoeff() << ")";
    throw InvalidInput(os.str());
  }
  // The solver reads one triangle only; symmetrizing first keeps both halves in play.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eigh: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix propagator(const EigenSystem& eig, double t) {
  const Complex minus_i(0.0, -1.0);
  ComplexVector phases(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k) {
    phases(k) = std::exp(minus_i * (eig.values(k) * t));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
  return propagator(eigh(h), t);
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (m.cwiseAbs().maxCoeff() == 0.0) {
    return 0.0;
  }
  if (is_hermitian(m)) {
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  // Singular values directly; sqrt(eig(M^dagger M)) loses half the digits.
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector vec) : vec_(std::move(vec)) {
  if (vec_.size() == 0) {
    throw InvalidInput("PureState: empty vector");
  }
  if (!vec_.array().isFinite().all()) {
    throw InvalidInput("PureState: non-finite amplitude");
  }
  const double norm_sq = vec_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > tol::kNorm) {
    std::ostringstream os;
    os << "PureState: not normalized (|<psi|psi> - 1| = " << std::abs(norm_sq - 1.0) << ")";
    throw InvalidInput(os.str());
  }
}

PureState PureState::normalized(const ComplexVector& vec) {
  const double n = vec.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidInput("PureState::normalized: zero or non-finite vector");
  }
  return PureState(vec / n);
}

PureState PureState::basis(Index dim, Index k) {
  if (dim <= 0 || k < 0 || k >= dim) {
    throw InvalidInput("PureState::basis: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return PureState(std::move(v));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  if (!all_finite(mat_)) {
    throw InvalidInput("DensityMatrix: non-finite entry");
  }
  if (!is_hermitian(mat_)) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (max |M - M^dagger| = " << hermiticity_defect(mat_)
       << ")";
    throw InvalidInput(os.str());
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag()
       << "i is not 1";
    throw InvalidInput(os.str());
  }
  const double min_eig = eigenvalues().minCoeff();
  if (min_eig < tol::kPsdFloor) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw InvalidInput(os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.vec() * psi.vec().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim <= 0) {
    throw InvalidInput("DensityMatrix::maximally_mixed: dim must be positive");
  }
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return mat_.squaredNorm();
}

RealVector DensityMatrix::eigenvalues() const {
  const ComplexMatrix sym = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// Schmidt decomposition

Index SchmidtDecomposition::rank(double threshold) const {
  return static_cast<Index>((coeffs.array() > threshold).count());
}

ComplexVector SchmidtDecomposition::reconstruct() const {
  ComplexVector out = ComplexVector::Zero(left.rows() * right.rows());
  for (Index k = 0; k < coeffs.size(); ++k) {
    out += coeffs(k) * kron(ComplexVector(left.col(k)), ComplexVector(right.col(k)));
  }
  return out;
}

SchmidtDecomposition schmidt(const ComplexVector& psi, Index dA, Index dB) {
  if (dA <= 0 || dB <= 0 || psi.size() != dA * dB) {
    std::ostringstream os;
    os << "schmidt: vector of size " << psi.size() << " incompatible with dA=" << dA
       << ", dB=" << dB;
    throw InvalidInput(os.str());
  }
  // Coefficient matrix M(i, b) = psi(i * dB + b) = sum_k s_k U(i,k) conj(V(b,k)).
  ComplexMatrix coeff(dA, dB);
  for (Index i = 0; i < dA; ++i) {
    for (Index b = 0; b < dB; ++b) {
      coeff(i, b) = psi(i * dB + b);
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coeffs = svd.singularValues();
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  return out;
}

SchmidtDecomposition schmidt(const PureState& psi, Index dA, Index dB) {
  return schmidt(psi.vec(), dA, dB);
}

// ---------------------------------------------------------------------------
// Entropy

double von_neumann_entropy(const RealVector& spectrum) {
  double s = 0.0;
  for (Index k = 0; k < spectrum.size(); ++k) {
    const double p = spectrum(k);
    if (p >= tol::kEntropyFloor) {
      s -= p * std::log(p);
    }
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.eigenvalues());
}

}  // namespace tpslab
