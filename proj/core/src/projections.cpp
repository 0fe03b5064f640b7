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

#include "tpslab/projections.hpp"

#include <sstream>
#include <utility>

namespace tpslab {

namespace {

[[noreturn]] void violated(const char* family, const std::string& condition) {
  throw InvalidInput(std::string("ProjectionSpec ") + family + ": " + condition);
}

void check_projector(const ComplexMatrix& p, Index dim, const char* family, std::size_t idx) {
  const std::string name = "projector #" + std::to_string(idx);
  if (p.rows() != dim || p.cols() != dim) {
    violated(family, name + " has inconsistent dimensions");
  }
  if (!all_finite(p)) {
    violated(family, name + " has non-finite entries");
  }
  if (hermiticity_defect(p) > tol::kProjector) {
    violated(family, name + " is not Hermitian");
  }
  if ((p * p - p).cwiseAbs().maxCoeff() > tol::kProjector) {
    violated(family, name + " is not idempotent (P^2 != P)");
  }
}

void check_pairwise_orthogonal(const std::vector<const ComplexMatrix*>& ps, const char* family,
                               const char* what) {
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (((*ps[a]) * (*ps[b])).cwiseAbs().maxCoeff() > tol::kProjector) {
        std::ostringstream os;
        os << what << " #" << a << " and #" << b << " are not orthogonal";
        violated(family, os.str());
      }
    }
  }
}

void check_resolution_of_identity(const std::vector<const ComplexMatrix*>& ps, Index dim,
                                  const char* family, const char* factor) {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto* p : ps) {
    sum += *p;
  }
  if ((sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol::kProjector) {
    violated(family, std::string("projectors do not sum to the identity on ") + factor);
  }
}

}  // namespace

ProjectionSpec ProjectionSpec::type_i(DensityMatrix rho_ref) {
  return ProjectionSpec(TypeIData{std::move(rho_ref)});
}

ProjectionSpec ProjectionSpec::type_ii(std::vector<ProjectionBin> bins) {
  constexpr const char* kFamily = "type_ii";
  if (bins.empty()) {
    violated(kFamily, "at least one bin required");
  }
  const Index dS = bins.front().projector_S.rows();
  const Index dE = bins.front().rho_E.dim();
  std::vector<const ComplexMatrix*> projectors;
  std::vector<const ComplexMatrix*> states;
  for (std::size_t n = 0; n < bins.size(); ++n) {
    check_projector(bins[n].projector_S, dS, kFamily, n);
    if (bins[n].rho_E.dim() != dE) {
      violated(kFamily, "rho_E #" + std::to_string(n) + " has inconsistent dimension");
    }
    projectors.push_back(&bins[n].projector_S);
    states.push_back(&bins[n].rho_E.matrix());
  }
  check_pairwise_orthogonal(projectors, kFamily, "projector");
  check_resolution_of_identity(projectors, dS, kFamily, "S");
  // For PSD operators, disjoint supports <=> rho_a rho_b = 0.
  check_pairwise_orthogonal(states, kFamily, "supports of rho_E");
  return ProjectionSpec(TypeIIData{std::move(bins)});
}

ProjectionSpec ProjectionSpec::type_iii(std::vector<ComplexMatrix> projectors_E) {
  constexpr const char* kFamily = "type_iii";
  if (projectors_E.empty()) {
    violated(kFamily, "at least one projector required");
  }
  const Index dE = projectors_E.front().rows();
  std::vector<const ComplexMatrix*> ptrs;
  for (std::size_t i = 0; i < projectors_E.size(); ++i) {
    check_projector(projectors_E[i], dE, kFamily, i);
    if (std::abs(projectors_E[i].trace() - 1.0) > tol::kProjector) {
      violated(kFamily, "projector #" + std::to_string(i) + " is not rank one");
    }
    ptrs.push_back(&projectors_E[i]);
  }
  check_pairwise_orthogonal(ptrs, kFamily, "projector");
  check_resolution_of_identity(ptrs, dE, kFamily, "E");
  return ProjectionSpec(TypeIIIData{std::move(projectors_E)});
}

ProjectionSpec ProjectionSpec::type_iii_from_basis(const ComplexMatrix& basis) {
  std::vector<ComplexMatrix> ps;
  ps.reserve(static_cast<std::size_t>(basis.cols()));
  for (Index k = 0; k < basis.cols(); ++k) {
    ps.emplace_back(basis.col(k) * basis.col(k).adjoint());
  }
  return type_iii(std::move(ps));
}

ProjectionKind ProjectionSpec::kind() const {
  switch (data_.index()) {
    case 0:
      return ProjectionKind::TypeI;
    case 1:
      return ProjectionKind::TypeII;
    default:
      return ProjectionKind::TypeIII;
  }
}

Index ProjectionSpec::dS() const {
  if (const auto* d = type_ii_data()) {
    return d->bins.front().projector_S.rows();
  }
  return 0;
}

Index ProjectionSpec::dE() const {
  if (const auto* d = type_i_data()) {
    return d->rho_ref.dim();
  }
  if (const auto* d = type_ii_data()) {
    return d->bins.front().rho_E.dim();
  }
  return type_iii_data()->projectors_E.front().rows();
}

void ProjectionSpec::check_compatible(const Structure& s) const {
  if (dE() != s.dE() || (dS() != 0 && dS() != s.dS())) {
    std::ostringstream os;
    os << "ProjectionSpec " << to_string(kind()) << ": factor dimensions (dS=" << dS()
       << ", dE=" << dE() << ") do not fit structure '" << s.label() << "' (dS=" << s.dS()
       << ", dE=" << s.dE() << ")";
    throw InvalidInput(os.str());
  }
}

const char* to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::TypeI:
      return "type_i";
    case ProjectionKind::TypeII:
      return "type_ii";
    case ProjectionKind::TypeIII:
      return "type_iii";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

namespace {

ComplexMatrix project_in_structure_basis(const ComplexMatrix& sigma, const Structure& s,
                                         const ProjectionSpec& spec) {
  const Index dS = s.dS();
  const Index dE = s.dE();
  if (const auto* d = spec.type_i_data()) {
    return kron(partial_trace(sigma, dS, dE, Keep::A), d->rho_ref.matrix());
  }
  if (const auto* d = spec.type_ii_data()) {
    // tr_E[(P (x) 1) sigma] = P tr_E sigma
    const ComplexMatrix reduced = partial_trace(sigma, dS, dE, Keep::A);
    ComplexMatrix out = ComplexMatrix::Zero(sigma.rows(), sigma.cols());
    for (const auto& bin : d->bins) {
      out += kron(ComplexMatrix(bin.projector_S * reduced), bin.rho_E.matrix());
    }
    return out;
  }
  const auto* d = spec.type_iii_data();
  const ComplexMatrix id_S = ComplexMatrix::Identity(dS, dS);
  ComplexMatrix out = ComplexMatrix::Zero(sigma.rows(), sigma.cols());
  for (const auto& p : d->projectors_E) {
    const ComplexMatrix filtered = kron(id_S, p) * sigma;
    out += kron(partial_trace(filtered, dS, dE, Keep::A), p);
  }
  return out;
}

}  // namespace

ComplexMatrix project(const ComplexMatrix& rho, const Structure& s, const ProjectionSpec& spec) {
  spec.check_compatible(s);
  const ComplexMatrix sigma = to_structure_basis(rho, s);
  return from_structure_basis(project_in_structure_basis(sigma, s, spec), s);
}

ComplexMatrix project(const DensityMatrix& rho, const Structure& s, const ProjectionSpec& spec) {
  return project(rho.matrix(), s, spec);
}

ComplexMatrix complement(const ComplexMatrix& rho, const Structure& s,
                         const ProjectionSpec& spec) {
  return rho - project(rho, s, spec);
}

ComplexMatrix complement(const DensityMatrix& rho, const Structure& s,
                         const ProjectionSpec& spec) {
  return complement(rho.matrix(), s, spec);
}

double relevance_defect(const DensityMatrix& rho, const Structure& s,
                        const ProjectionSpec& spec) {
  return trace_norm(reduced_operator(complement(rho, s, spec), s, Part::S));
}

double idempotency_defect(const DensityMatrix& rho, const Structure& s,
                          const ProjectionSpec& spec) {
  const ComplexMatrix once = project(rho, s, spec);
  const ComplexMatrix twice = project(once, s, spec);
  return trace_norm(twice - once);
}

bool reference_matches_environment(const DensityMatrix& rho, const Structure& s,
                                   const ProjectionSpec& spec) {
  const auto* d = spec.type_i_data();
  if (d == nullptr) {
    return false;
  }
  spec.check_compatible(s);
  const ComplexMatrix env = reduced_operator(rho.matrix(), s, Part::E);
  return (env - d->rho_ref.matrix()).cwiseAbs().maxCoeff() <= tol::kHermitian;
}

}  // namespace tpslab
