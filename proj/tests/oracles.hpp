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


#pragma once

// Reference implementations for tests. Everything here is written with plain
// index loops so that it shares no code path with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index k = 0; k < b.rows(); ++k) {
        for (Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// tr_B of an operator on A (x) B (keep_a) or tr_A (otherwise).
inline Matrix ptrace(const Matrix& m, Index dA, Index dB, bool keep_a) {
  if (keep_a) {
    Matrix out = Matrix::Zero(dA, dA);
    for (Index i = 0; i < dA; ++i) {
      for (Index j = 0; j < dA; ++j) {
        for (Index b = 0; b < dB; ++b) {
          out(i, j) += m(i * dB + b, j * dB + b);
        }
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dB, dB);
  for (Index b = 0; b < dB; ++b) {
    for (Index c = 0; c < dB; ++c) {
      for (Index i = 0; i < dA; ++i) {
        out(b, c) += m(i * dB + b, i * dB + c);
      }
    }
  }
  return out;
}

/// Mixed-radix digits of `flat` for factor dimensions `dims` (first factor most significant).
inline std::vector<Index> digits(Index flat, const std::vector<Index>& dims) {
  std::vector<Index> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = flat % dims[k];
    flat /= dims[k];
  }
  return d;
}

/// Reduced operator on the factors listed in `keep` (ascending), tracing all others.
inline Matrix reduce_to(const Matrix& m, const std::vector<Index>& dims,
                        const std::vector<Index>& keep) {
  Index dk = 1;
  for (Index f : keep) {
    dk *= dims[static_cast<std::size_t>(f)];
  }
  auto kept_index = [&](const std::vector<Index>& dg) {
    Index r = 0;
    for (Index f : keep) {
      r = r * dims[static_cast<std::size_t>(f)] + dg[static_cast<std::size_t>(f)];
    }
    return r;
  };
  Matrix out = Matrix::Zero(dk, dk);
  const Index n = m.rows();
  for (Index r = 0; r < n; ++r) {
    const auto dr = digits(r, dims);
    for (Index c = 0; c < n; ++c) {
      const auto dc = digits(c, dims);
      bool traced_equal = true;
      for (std::size_t f = 0; f < dims.size() && traced_equal; ++f) {
        bool kept = false;
        for (Index k : keep) {
          kept = kept || static_cast<std::size_t>(k) == f;
        }
        if (!kept && dr[f] != dc[f]) {
          traced_equal = false;
        }
      }
      if (traced_equal) {
        out(kept_index(dr), kept_index(dc)) += m(r, c);
      }
    }
  }
  return out;
}

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
inline Matrix expm_minus_i(const Matrix& h, double t) {
  const Matrix a = Complex(0.0, -t) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) {
    ++squarings;
  }
  const Matrix b = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(h.rows(), h.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = (sum * sum).eval();
  }
  return sum;
}

/// sum of sqrt(eigenvalues of m^dagger m).
inline double trace_norm(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
  double s = 0.0;
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    s += std::sqrt(std::max(0.0, es.eigenvalues()(k)));
  }
  return s;
}

inline double entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  double s = 0.0;
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-14) {
      s -= p * std::log(p);
    }
  }
  return s;
}

/// TypeI projection in a product basis: entry ((m,n),(m',n')) = (tr_E rho)(m,m') * ref(n,n').
inline Matrix type_i_local(const Matrix& rho_local, Index dS, Index dE, const Matrix& ref) {
  const Matrix rs = ptrace(rho_local, dS, dE, true);
  Matrix out(dS * dE, dS * dE);
  for (Index m = 0; m < dS; ++m) {
    for (Index n = 0; n < dE; ++n) {
      for (Index mp = 0; mp < dS; ++mp) {
        for (Index np = 0; np < dE; ++np) {
          out(m * dE + n, mp * dE + np) = rs(m, mp) * ref(n, np);
        }
      }
    }
  }
  return out;
}

/// Maximum entry-wise modulus of a - b.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
