#pragma once

#include <optional>
#include <vector>

#include "pairwalk/exact.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/types.hpp"

namespace pairwalk {

/// Distinct eigenvalues of a real symmetric matrix with their orthogonal
/// eigenprojectors. Eigenvalues are ascending; each projector is symmetric,
/// idempotent, and they resolve the identity.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;
  double grouping_tolerance = 0.0;

  int count() const { return static_cast<int>(eigenvalues.size()); }
  int dimension() const { return projectors.empty() ? 0 : static_cast<int>(projectors[0].rows()); }
  int multiplicity(int j) const;
};

/// Where a closed-form total-graph eigenvalue came from.
enum class TotalEigenClass { Base, ThetaMinus, ThetaPlus, IncidenceKernel, BipartiteQ };

struct EigenProvenance {
  TotalEigenClass kind = TotalEigenClass::Base;
  int base_index = -1;  // index j into the base spectrum for ThetaMinus/ThetaPlus
};

enum class ExactSource { IntegerBase, TotalClosedForm };

struct ExactEntry {
  ExactScalar value = ExactScalar::integer(0);
  int multiplicity = 0;
  Matrix projector;
  std::vector<EigenProvenance> provenance;
};

/// Spectrum whose eigenvalues carry exact labels (integers or quadratic
/// surds) alongside numeric projectors. Entries ascend by numeric value.
struct ExactSpectrum {
  std::vector<ExactEntry> entries;
  ExactSource source = ExactSource::IntegerBase;
  int dimension = 0;

  /// Numeric view usable by every operation taking a SpectralDecomposition.
  SpectralDecomposition numeric() const;
  std::optional<int> index_of(const ExactScalar& v) const;
  bool contains(const ExactScalar& v) const { return index_of(v).has_value(); }
};

double default_grouping_tolerance(const Matrix& m);

/// Dense symmetric eigendecomposition with tol-clustering of eigenvalues.
/// Each cluster becomes one distinct eigenvalue (cluster mean) whose
/// projector is assembled from the cluster's orthonormal eigenvectors.
SpectralDecomposition eigendecompose_symmetric(const Matrix& m, double tol);

/// U(t) = sum_j exp(-i t theta_j) E_j.
ComplexMatrix transition_matrix(const SpectralDecomposition& dec, double t);

/// Integer-labelled spectrum of L_G when every eigenvalue rounds cleanly to
/// an integer and the rounded value reproduces L E = theta E; none otherwise.
std::optional<ExactSpectrum> exact_integer_spectrum(const Graph& g, double tol);

/// Orthonormal basis of the null space of an incidence matrix, as columns.
/// Dimension is m-n for non-bipartite connected graphs, m-n+1 for bipartite.
Matrix null_space_orthonormal(const Matrix& r);

/// Closed-form exact spectrum of T(G) for r-regular G (r > 1) from an integer
/// base spectrum: theta_j^± = (r+2+2theta_j ± sqrt((r+2)^2-4theta_j))/2 with
/// the block projector formula, eigenvalue 2r+2 from the incidence kernel,
/// and (bipartite case) eigenvalue 3r with the signed all-ones block. Equal
/// exact values are merged with projectors summed.
ExactSpectrum total_exact_spectrum(const Graph& g, const ExactSpectrum& base);

/// The same closed form evaluated purely numerically from an arbitrary base
/// decomposition (covers r-regular bases whose spectrum is not integral);
/// closed-form values that collide within tol are merged.
SpectralDecomposition total_closed_decomposition(const Graph& g,
                                                 const SpectralDecomposition& base, double tol);

/// The explicit eigenprojectors of T(K_n), n > 3: eigenvalues 0, n+1, 2n,
/// assembled from all-ones/incidence blocks and the incidence kernel.
ExactSpectrum tkn_closed_projectors(int n);

/// Checks resolution of identity, idempotence, mutual orthogonality, and
/// L = sum theta E against the given matrix; throws on violation.
void validate_decomposition(const SpectralDecomposition& dec, const Matrix& l, double tol);

}  // namespace pairwalk
