#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "walkreg/graph.hpp"

namespace walkreg::spectral {

/// Floating-point tolerances. Defaults are conservative for integer adjacency
/// matrices at desk scale (n <= ~2000).
struct Tolerances {
  double tau_group = 0.0;        // 0 = auto: 1e-7 * max(1, spectral radius)
  double tau_const = 1e-8;       // relative to alpha_0
  double tau_id = 0.0;           // 0 = auto: 1e-6 * sqrt(alpha_0)
  double residual = 1e-8;        // scaled by n where noted
};

struct EigenvalueGroup {
  double value = 0.0;  // cluster mean
  int multiplicity = 0;
};

struct Spectrum {
  std::vector<EigenvalueGroup> eigenvalues;  // strictly decreasing
  double tau_group = 0.0;
  int d() const { return static_cast<int>(eigenvalues.size()) - 1; }
};

/// Full symmetric eigendecomposition with eigenvalues clustered into distinct
/// values. Columns of `vectors` are orthonormal eigenvectors sorted by
/// descending eigenvalue; cluster i owns columns [offset[i], offset[i+1]).
struct Decomposition {
  Graph graph;
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // matching columns
  Spectrum spectrum;
  std::vector<int> offsets;  // size d()+2
};

/// Throws VerificationError when some eigenvalue gap falls into the ambiguous
/// band (tau_group, 10*tau_group): the caller must adjust the tolerance.
Decomposition decompose(const Graph& g, const Tolerances& tol = {});

Spectrum spectrum(const Graph& g, const Tolerances& tol = {});

/// Per-distance idempotent entry, with a constancy verdict for its class.
struct AlphaEntry {
  double value = 0.0;   // class mean of E_xy
  bool constant = false;
  double spread = 0.0;  // max |E_xy - value| over the class
};

struct Idempotent {
  double theta = 0.0;
  int multiplicity = 0;
  int cluster = 0;
  Eigen::MatrixXd matrix;           // E = U U^T
  std::vector<AlphaEntry> alphas;   // indexed by distance 0..D
};

/// One idempotent per distinct eigenvalue; residuals ||E^2-E||, ||AE-thetaE||
/// and trace-vs-rank are checked against tol.residual.
std::vector<Idempotent> minimal_idempotents(const Decomposition& dec,
                                            const Tolerances& tol = {});

/// u_0..u_t with u_j = alpha_j / alpha_0. Requires every class up to t to be
/// constant; throws VerificationError with the failing distance otherwise.
std::vector<double> cosine_sequence(const Graph& g, const Idempotent& e, int t,
                                    const Tolerances& tol = {});

/// Largest t such that every minimal idempotent is constant on all distance
/// classes 0..t (nullopt = diagonal already non-constant). Requires connected
/// regular input.
std::optional<int> wr_order(const Decomposition& dec, const Tolerances& tol = {});

std::optional<int> spectral_wr_order(const Graph& g, const Tolerances& tol = {});

/// Spherical representation for one idempotent: row x is the image of vertex
/// x in R^m, with <x,y> = E_xy and |x|^2 = alpha_0.
struct Representation {
  Eigen::MatrixXd vectors;  // n x m
  double alpha0 = 0.0;
  double theta = 0.0;
};

Representation representation(const Decomposition& dec, int cluster,
                              const Tolerances& tol = {});

struct CoverReport {
  bool classes_independent = false;
  bool equitable = false;
  bool equal_sizes = false;
  bool cover = false;  // all three above
};

struct QuotientResult {
  std::vector<int> vertex_class;        // vertex -> class id
  std::vector<std::vector<int>> classes;
  Graph quotient;
  CoverReport report;
};

/// Identifies vertices whose representation images coincide (within tau_id)
/// and folds the graph onto the classes. Throws VerificationError when the
/// identification is not an equivalence (a chain violation witness).
QuotientResult representation_quotient(const Graph& g, const Representation& rep,
                                       const Tolerances& tol = {});

}  // namespace walkreg::spectral
