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

#include "tpslab/structures.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tpslab {

FactorLayout::FactorLayout(std::vector<Index> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) {
    throw InvalidInput("FactorLayout: at least one factor required");
  }
  for (Index d : dims_) {
    if (d < 2) {
      throw InvalidInput("FactorLayout: every factor dimension must be >= 2");
    }
    total_ *= d;
  }
}

Structure::Structure(ComplexMatrix w, Index dS, Index dE, std::string label)
    : w_(std::move(w)), dS_(dS), dE_(dE), label_(std::move(label)) {}

Structure Structure::reference(Index dS, Index dE, std::string label) {
  if (dS <= 0 || dE <= 0) {
    throw InvalidInput("Structure::reference: split dimensions must be positive");
  }
  return Structure(ComplexMatrix::Identity(dS * dE, dS * dE), dS, dE, std::move(label));
}

Structure structure_from_grouping(const FactorLayout& layout, std::vector<Index> s_indices,
                                  std::string label) {
  const Index nf = layout.size();
  std::sort(s_indices.begin(), s_indices.end());
  if (std::adjacent_find(s_indices.begin(), s_indices.end()) != s_indices.end()) {
    throw InvalidInput("structure_from_grouping: duplicate factor index");
  }
  if (s_indices.empty() || static_cast<Index>(s_indices.size()) >= nf) {
    throw InvalidInput(
        "structure_from_grouping: S must be a nonempty proper subset of the factors");
  }
  if (s_indices.front() < 0 || s_indices.back() >= nf) {
    throw InvalidInput("structure_from_grouping: factor index out of range");
  }

  // New factor order: S factors ascending, then E factors ascending.
  std::vector<Index> order = s_indices;
  for (Index f = 0; f < nf; ++f) {
    if (!std::binary_search(s_indices.begin(), s_indices.end(), f)) {
      order.push_back(f);
    }
  }
  const auto& dims = layout.factor_dims();
  Index dS = 1;
  for (Index f : s_indices) {
    dS *= dims[f];
  }
  const Index total = layout.total_dim();
  const Index dE = total / dS;

  // Strides of each elementary factor in the reference index.
  std::vector<Index> ref_stride(nf);
  Index stride = 1;
  for (Index f = nf - 1; f >= 0; --f) {
    ref_stride[f] = stride;
    stride *= dims[f];
  }

  ComplexMatrix w = ComplexMatrix::Zero(total, total);
  for (Index k = 0; k < total; ++k) {
    // Decode k as digits in the regrouped order (last factor fastest).
    Index rem = k;
    Index ref = 0;
    for (Index pos = nf - 1; pos >= 0; --pos) {
      const Index f = order[pos];
      ref += (rem % dims[f]) * ref_stride[f];
      rem /= dims[f];
    }
    w(ref, k) = 1.0;
  }

  if (label.empty()) {
    std::ostringstream os;
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (p == s_indices.size()) {
        os << '|';
      } else if (p > 0) {
        os << ',';
      }
      os << order[p];
    }
    label = os.str();
  }
  return Structure(std::move(w), dS, dE, std::move(label));
}

Structure structure_from_unitary(ComplexMatrix w, Index dS, Index dE, std::string label) {
  if (w.rows() != w.cols() || dS <= 0 || dE <= 0 || dS * dE != w.rows()) {
    std::ostringstream os;
    os << "structure_from_unitary: matrix " << w.rows() << "x" << w.cols()
       << " incompatible with dS=" << dS << ", dE=" << dE;
    throw InvalidInput(os.str());
  }
  if (!all_finite(w)) {
    throw InvalidInput("structure_from_unitary: non-finite entry");
  }
  const double defect = unitarity_defect(w);
  if (defect > tol::kUnitary) {
    std::ostringstream os;
    os << "structure_from_unitary: matrix is not unitary (||W^dagger W - I||_F = " << defect
       << ")";
    throw InvalidInput(os.str());
  }
  return Structure(std::move(w), dS, dE, std::move(label));
}

namespace {

void require_dim(Index dim, const Structure& s, const char* what) {
  if (dim != s.total_dim()) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " does not match structure '" << s.label()
       << "' of dimension " << s.total_dim();
    throw InvalidInput(os.str());
  }
}

}  // namespace

ComplexMatrix to_structure_basis(const ComplexMatrix& m, const Structure& s) {
  require_dim(m.rows(), s, "to_structure_basis");
  require_dim(m.cols(), s, "to_structure_basis");
  return s.W().adjoint() * m * s.W();
}

ComplexMatrix from_structure_basis(const ComplexMatrix& m, const Structure& s) {
  require_dim(m.rows(), s, "from_structure_basis");
  require_dim(m.cols(), s, "from_structure_basis");
  return s.W() * m * s.W().adjoint();
}

ComplexVector to_structure_basis(const ComplexVector& v, const Structure& s) {
  require_dim(v.size(), s, "to_structure_basis");
  return s.W().adjoint() * v;
}

ComplexVector from_structure_basis(const ComplexVector& v, const Structure& s) {
  require_dim(v.size(), s, "from_structure_basis");
  return s.W() * v;
}

ComplexMatrix reduced_operator(const ComplexMatrix& m, const Structure& s, Part which) {
  return partial_trace(to_structure_basis(m, s), s.dS(), s.dE(),
                       which == Part::S ? Keep::A : Keep::B);
}

DensityMatrix reduced_state(const DensityMatrix& rho, const Structure& s, Part which) {
  return DensityMatrix(reduced_operator(rho.matrix(), s, which));
}

ComplexMatrix change_of_basis(const Structure& from, const Structure& to) {
  if (from.total_dim() != to.total_dim()) {
    throw InvalidInput("change_of_basis: structures act on spaces of different dimension");
  }
  return to.W().adjoint() * from.W();
}

Complex d_coefficient(const Structure& from, const Structure& to, Index i, Index alpha,
                      Index m, Index n) {
  if (from.total_dim() != to.total_dim()) {
    throw InvalidInput("d_coefficient: structures act on spaces of different dimension");
  }
  if (i < 0 || i >= from.dS() || alpha < 0 || alpha >= from.dE() || m < 0 || m >= to.dS() ||
      n < 0 || n >= to.dE()) {
    std::ostringstream os;
    os << "d_coefficient: index out of range (i=" << i << ", alpha=" << alpha << ", m=" << m
       << ", n=" << n << ")";
    throw InvalidInput(os.str());
  }
  // Row of W_to^dagger times column of W_from.
  return to.W().col(m * to.dE() + n).dot(from.W().col(i * from.dE() + alpha));
}

Complex d_coefficient(const Structure& s, Index i, Index alpha, Index m, Index n) {
  return d_coefficient(Structure::reference(s.dS(), s.dE()), s, i, alpha, m, n);
}

}  // namespace tpslab
