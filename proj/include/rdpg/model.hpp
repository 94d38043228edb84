#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace rdpg {

using LabelVector = std::vector<int>;

// Rows are latent vectors in the unit ball with pairwise inner products
// in [0, 1].
struct LatentPositions {
  Eigen::MatrixXd rows;  // n x d

  Eigen::Index n() const { return rows.rows(); }
  Eigen::Index d() const { return rows.cols(); }
};

// P = X X^T, entries in [0, 1]. The diagonal (P_ii = |x_i|^2) is stored but
// the edge sampler never reads it: A stays hollow.
struct ProbabilityMatrix {
  Eigen::MatrixXd values;  // n x n, symmetric

  Eigen::Index n() const { return values.rows(); }
};

// Symmetric hollow 0/1 matrix; stored as bytes, densified on demand.
struct AdjacencyMatrix {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> values;

  Eigen::Index n() const { return values.rows(); }
  Eigen::MatrixXd dense() const { return values.cast<double>(); }
};

// Exact second-moment matrix E[X X^T] with its spectrum and the eigengap
// parameter. `delta` is the supremum of admissible values: both strict
// inequalities 2*delta < min pairwise eigenvalue gap and 2*delta <
// smallest eigenvalue hold for any delta slightly below it, so callers
// needing a concrete value shrink it (e.g. by 1e-9).
struct SecondMomentSummary {
  Eigen::MatrixXd moment;       // d x d, symmetric positive definite
  Eigen::VectorXd eigenvalues;  // decreasing, all positive
  double delta = 0.0;
};

// Throws if any row norm exceeds 1 or any pairwise inner product leaves
// [0, 1] (tolerance 1e-12).
void validate_latent_positions(const LatentPositions& X);

// Each row is the first keep_dims coordinates of an independent
// Dirichlet(alpha) draw. Deterministic given seed.
LatentPositions sample_dirichlet_latents(int n, const std::vector<double>& alpha,
                                         int keep_dims, std::uint64_t seed);

ProbabilityMatrix compute_probability_matrix(const LatentPositions& X);

// A_ij ~ Bernoulli(P_ij) independently for i < j, mirrored, zero diagonal.
// Per-edge randomness is indexed by the row-major rank of (i, j) among pairs
// with i < j, so the same seed gives the same graph regardless of how the
// loop is scheduled.
AdjacencyMatrix sample_adjacency(const ProbabilityMatrix& P, std::uint64_t seed);

// Label 1 iff the first coordinate is strictly less than the second.
LabelVector assign_threshold_labels(const LatentPositions& X);

// Closed-form Dirichlet second moment for the first keep_dims coordinates:
// E[X_i X_j] = a_i a_j / (a0 (a0 + 1)), E[X_i^2] = a_i (a_i + 1) / (a0 (a0 + 1)).
SecondMomentSummary second_moment_summary(const std::vector<double>& alpha,
                                          int keep_dims);

// Validates an explicit moment matrix (full rank, distinct eigenvalues) and
// computes its spectrum and eigengap supremum.
SecondMomentSummary make_second_moment_summary(const Eigen::MatrixXd& moment);

}  // namespace rdpg
