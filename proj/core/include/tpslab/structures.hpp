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

// Tensor-product structures (system/environment splits) of one composite space.
//
// A Structure is a unitary W together with split dimensions dS x dE. Column
// k = m * dE + n of W is the product vector |m>_S |n>_E of that structure written
// in the reference (computational) basis, so an operator M given in the
// reference basis reads W^dagger M W in the structure's own product basis.

#include <string>
#include <vector>

#include "tpslab/linalg.hpp"

namespace tpslab {

/// Dimensions of the elementary factors of the reference register, e.g. {2, 2, 2}.
class FactorLayout {
 public:
  explicit FactorLayout(std::vector<Index> factor_dims);

  const std::vector<Index>& factor_dims() const { return dims_; }
  Index size() const { return static_cast<Index>(dims_.size()); }
  Index total_dim() const { return total_; }

 private:
  std::vector<Index> dims_;
  Index total_ = 1;
};

enum class Part { S, E };

class Structure {
 public:
  /// The computational product split dS x dE (W = I).
  static Structure reference(Index dS, Index dE, std::string label = "reference");

  Index total_dim() const { return w_.rows(); }
  Index dS() const { return dS_; }
  Index dE() const { return dE_; }
  const ComplexMatrix& W() const { return w_; }
  const std::string& label() const { return label_; }

  Index dim(Part p) const { return p == Part::S ? dS_ : dE_; }

 private:
  Structure(ComplexMatrix w, Index dS, Index dE, std::string label);

  friend Structure structure_from_unitary(ComplexMatrix, Index, Index, std::string);
  friend Structure structure_from_grouping(const FactorLayout&, std::vector<Index>,
                                           std::string);

  ComplexMatrix w_;
  Index dS_;
  Index dE_;
  std::string label_;
};

/// Regroups elementary factors: those listed in `s_indices` (kept in ascending
/// order) form S, the rest (also ascending) form E. W is the permutation unitary.
Structure structure_from_grouping(const FactorLayout& layout, std::vector<Index> s_indices,
                                  std::string label = {});

/// Throws InvalidInput when ||W^dagger W - I||_F > 1e-10 or dS * dE != dim(W).
Structure structure_from_unitary(ComplexMatrix w, Index dS, Index dE,
                                 std::string label = "unitary");

ComplexMatrix to_structure_basis(const ComplexMatrix& m, const Structure& s);
ComplexMatrix from_structure_basis(const ComplexMatrix& m, const Structure& s);
ComplexVector to_structure_basis(const ComplexVector& v, const Structure& s);
ComplexVector from_structure_basis(const ComplexVector& v, const Structure& s);

/// Partial trace in the structure's basis; works for any (not necessarily
/// positive) operator.
ComplexMatrix reduced_operator(const ComplexMatrix& m, const Structure& s, Part which);
DensityMatrix reduced_state(const DensityMatrix& rho, const Structure& s, Part which);

/// W_to^dagger W_from. Entry (m * to.dE() + n, i * from.dE() + alpha) is the
/// coefficient of |i>|alpha> (product basis of `from`) on |m>|n> (product basis of `to`).
ComplexMatrix change_of_basis(const Structure& from, const Structure& to);

/// <m n|_to |i alpha>_from.
Complex d_coefficient(const Structure& from, const Structure& to, Index i, Index alpha,
                      Index m, Index n);
/// Same, with `from` the reference structure sharing s's split dimensions.
Complex d_coefficient(const Structure& s, Index i, Index alpha, Index m, Index n);

}  // namespace tpslab
