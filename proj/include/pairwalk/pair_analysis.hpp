#pragma once

#include <optional>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/types.hpp"

namespace pairwalk {

/// The pair state e_a - e_b (unnormalized; amplitudes carry the 1/2 factor).
struct PairState {
  int a = 0;
  int b = 0;

  PairState() = default;
  PairState(int a_, int b_);

  bool same_unordered(const PairState& other) const {
    return (a == other.a && b == other.b) || (a == other.b && b == other.a);
  }
};

struct Amplitude {
  Complex value{0.0, 0.0};
  double fidelity = 0.0;
};

/// Indices into dec of the eigenvalues whose projector does not annihilate
/// e_a - e_b. Never empty for valid input.
std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, PairState p, double tol);

double default_support_tolerance();

struct SignPartition {
  std::vector<int> plus;   // E(e_a - e_b) = +E(e_c - e_d)
  std::vector<int> minus;  // E(e_a - e_b) = -E(e_c - e_d)
};

/// Signed support partition when the two pair states are Laplacian strongly
/// cospectral; nullopt otherwise. Signs are accepted with hysteresis: the
/// nearer of ±E(e_c - e_d) must be within tol and the other beyond 10*tol.
std::optional<SignPartition> strongly_cospectral(const SpectralDecomposition& dec, PairState p1,
                                                 PairState p2, double tol);

/// (1/2) (e_a - e_b)^T U(t) (e_c - e_d) via the spectral sum.
Amplitude pair_amplitude(const SpectralDecomposition& dec, PairState p1, PairState p2, double t);

/// Entry U_{T(G)}(t)_{a,b} for base vertices a, b of an r-regular graph,
/// evaluated through the base decomposition only. The bipartite branch adds
/// the exp(-3itr) E_{2r} term and skips theta_p = 2r in the oscillatory sum.
Complex total_vertex_amplitude(const SpectralDecomposition& base_dec,
                               const std::optional<Bipartition>& bipartition, int a, int b, int r,
                               double t);

/// Pair-state transfer amplitude on T(G) between pairs of base vertices,
/// from the closed form over the base decomposition.
Amplitude total_pair_amplitude(const SpectralDecomposition& base_dec,
                               const std::optional<Bipartition>& bipartition, PairState p1,
                               PairState p2, int r, double t);

}  // namespace pairwalk
