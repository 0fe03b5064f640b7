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

// Nakajima-Zwanzig projection superoperators adapted to one Structure.
//
// All three families act in the structure's own product basis S (x) E:
//
//   TypeI    P rho = (tr_E rho) (x) rho_ref
//   TypeII   P rho = sum_n tr_E[(P_Sn (x) 1) rho] (x) rho_En
//   TypeIII  P rho = sum_i tr_E[(1 (x) P_Ei) rho] (x) P_Ei
//
// and every one of them satisfies tr_E (rho - P rho) = 0 identically.

#include <variant>
#include <vector>

#include "tpslab/linalg.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {

enum class ProjectionKind { TypeI, TypeII, TypeIII };

struct TypeIData {
  DensityMatrix rho_ref;
};

struct ProjectionBin {
  ComplexMatrix projector_S;
  DensityMatrix rho_E;
};

struct TypeIIData {
  std::vector<ProjectionBin> bins;
};

struct TypeIIIData {
  std::vector<ComplexMatrix> projectors_E;
};

class ProjectionSpec {
 public:
  /// Any valid density matrix on E.
  static ProjectionSpec type_i(DensityMatrix rho_ref);
  /// Projectors P_Sn mutually orthogonal and summing to 1_S; rho_En with
  /// pairwise orthogonal supports. Throws InvalidInput naming the failed condition.
  static ProjectionSpec type_ii(std::vector<ProjectionBin> bins);
  /// Rank-1, mutually orthogonal projectors summing to 1_E.
  static ProjectionSpec type_iii(std::vector<ComplexMatrix> projectors_E);
  /// TypeIII built from the columns of a unitary on E.
  static ProjectionSpec type_iii_from_basis(const ComplexMatrix& basis);

  ProjectionKind kind() const;
  const TypeIData* type_i_data() const { return std::get_if<TypeIData>(&data_); }
  const TypeIIData* type_ii_data() const { return std::get_if<TypeIIData>(&data_); }
  const TypeIIIData* type_iii_data() const { return std::get_if<TypeIIIData>(&data_); }

  Index dS() const;  // 0 when the family leaves it unconstrained (TypeI, TypeIII)
  Index dE() const;

  /// Throws InvalidInput if the spec's factor dimensions do not fit `s`.
  void check_compatible(const Structure& s) const;

 private:
  using Data = std::variant<TypeIData, TypeIIData, TypeIIIData>;
  explicit ProjectionSpec(Data data) : data_(std::move(data)) {}
  Data data_;
};

const char* to_string(ProjectionKind kind);

/// P rho, returned in the reference basis. Linear, so it accepts any operator.
ComplexMatrix project(const ComplexMatrix& rho, const Structure& s, const ProjectionSpec& spec);
ComplexMatrix project(const DensityMatrix& rho, const Structure& s, const ProjectionSpec& spec);

/// Q rho = rho - P rho.
ComplexMatrix complement(const ComplexMatrix& rho, const Structure& s,
                         const ProjectionSpec& spec);
ComplexMatrix complement(const DensityMatrix& rho, const Structure& s,
                         const ProjectionSpec& spec);

/// || tr_E Q rho ||_1 with E the environment of `s`.
double relevance_defect(const DensityMatrix& rho, const Structure& s, const ProjectionSpec& spec);

/// || P(P rho) - P rho ||_1.
double idempotency_defect(const DensityMatrix& rho, const Structure& s,
                          const ProjectionSpec& spec);

/// TypeI diagnostic: true when rho_ref equals tr_S rho within 1e-10 (rho is then
/// a fixed point whenever it is a product). Always false for other families.
bool reference_matches_environment(const DensityMatrix& rho, const Structure& s,
                                   const ProjectionSpec& spec);

}  // namespace tpslab
