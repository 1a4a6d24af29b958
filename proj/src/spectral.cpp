#include "walkreg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "walkreg/errors.hpp"

namespace walkreg::spectral {

namespace {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

void require_connected_regular(const Graph& g) {
  if (!g.distance_data().connected)
    throw InputError("spectral walk analysis requires a connected graph");
  if (!g.valency()) throw InputError("spectral walk analysis requires a regular graph");
}

}  // namespace

Decomposition decompose(const Graph& g, const Tolerances& tol) {
  if (g.n() == 0) throw InputError("spectrum of the empty graph is undefined");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success)
    throw VerificationError("eigendecomposition failed to converge");

  const int n = g.n();
  Decomposition dec;
  dec.graph = g;
  dec.values = solver.eigenvalues().reverse();
  dec.vectors = solver.eigenvectors().rowwise().reverse();

  double radius = std::max(std::abs(dec.values(0)), std::abs(dec.values(n - 1)));
  double tau = tol.tau_group > 0 ? tol.tau_group : 1e-7 * std::max(1.0, radius);
  dec.spectrum.tau_group = tau;

  // Greedy clustering on the sorted list; any gap inside (tau, 10*tau) means
  // the tolerance cannot separate clusters reliably.
  dec.offsets.push_back(0);
  for (int i = 1; i < n; ++i) {
    double gap = dec.values(i - 1) - dec.values(i);
    if (gap > tau && gap <= 10 * tau)
      throw VerificationError(
          "ambiguous eigenvalue clustering: gap " + std::to_string(gap) +
          " within (tau, 10*tau); adjust the grouping tolerance");
    if (gap > tau) dec.offsets.push_back(i);
  }
  dec.offsets.push_back(n);

  for (size_t c = 0; c + 1 < dec.offsets.size(); ++c) {
    int lo = dec.offsets[c], hi = dec.offsets[c + 1];
    EigenvalueGroup grp;
    grp.multiplicity = hi - lo;
    grp.value = dec.values.segment(lo, hi - lo).mean();
    dec.spectrum.eigenvalues.push_back(grp);
  }
  return dec;
}

Spectrum spectrum(const Graph& g, const Tolerances& tol) {
  return decompose(g, tol).spectrum;
}

namespace {

std::vector<AlphaEntry> class_constants(const Graph& g, const Eigen::MatrixXd& e,
                                        double tau_const) {
  const auto& dd = g.distance_data();
  const int n = g.n();
  const int D = dd.diameter;
  std::vector<double> lo(D + 1, 0.0), hi(D + 1, 0.0), sum(D + 1, 0.0);
  std::vector<long long> cnt(D + 1, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int j = dd.at(x, y);
      if (j < 0) continue;
      double v = e(x, y);
      if (cnt[j] == 0) {
        lo[j] = hi[j] = v;
      } else {
        lo[j] = std::min(lo[j], v);
        hi[j] = std::max(hi[j], v);
      }
      sum[j] += v;
      ++cnt[j];
    }
  double alpha0 = cnt[0] > 0 ? sum[0] / cnt[0] : 0.0;
  double tol_abs = tau_const * std::max(std::abs(alpha0), 1e-300);
  std::vector<AlphaEntry> out(D + 1);
  for (int j = 0; j <= D; ++j) {
    if (cnt[j] == 0) continue;
    out[j].value = sum[j] / cnt[j];
    out[j].spread = std::max(hi[j] - out[j].value, out[j].value - lo[j]);
    out[j].constant = (hi[j] - lo[j]) <= tol_abs;
  }
  return out;
}

}  // namespace

std::vector<Idempotent> minimal_idempotents(const Decomposition& dec,
                                            const Tolerances& tol) {
  const int n = dec.graph.n();
  std::vector<Idempotent> out;
  Eigen::MatrixXd a = adjacency_matrix(dec.graph);
  for (int c = 0; c + 1 < static_cast<int>(dec.offsets.size()); ++c) {
    int lo = dec.offsets[c], hi = dec.offsets[c + 1];
    Idempotent e;
    e.cluster = c;
    e.theta = dec.spectrum.eigenvalues[c].value;
    e.multiplicity = hi - lo;
    const auto u = dec.vectors.middleCols(lo, hi - lo);
    e.matrix = u * u.transpose();

    double r_idem = (e.matrix * e.matrix - e.matrix).cwiseAbs().maxCoeff();
    double r_eig = (a * e.matrix - e.theta * e.matrix).cwiseAbs().maxCoeff();
    double r_trace = std::abs(e.matrix.trace() - e.multiplicity);
    double budget = tol.residual * n;
    if (r_idem > budget || r_eig > budget * std::max(1.0, std::abs(e.theta)) ||
        r_trace > budget)
      throw VerificationError("idempotent residual too large for eigenvalue " +
                              std::to_string(e.theta));
    e.alphas = class_constants(dec.graph, e.matrix, tol.tau_const);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<double> cosine_sequence(const Graph& g, const Idempotent& e, int t,
                                    const Tolerances& tol) {
  (void)tol;
  if (t < 0 || t >= static_cast<int>(e.alphas.size()))
    throw InputError("cosine sequence: t out of range");
  double alpha0 = e.alphas[0].value;
  if (!(alpha0 > 0)) throw VerificationError("idempotent has non-positive diagonal");
  std::vector<double> u(t + 1);
  for (int j = 0; j <= t; ++j) {
    if (!e.alphas[j].constant)
      throw VerificationError(
          "idempotent not constant on distance class " + std::to_string(j) +
          " (spread " + std::to_string(e.alphas[j].spread) + ")");
    u[j] = e.alphas[j].value / alpha0;
  }
  (void)g;
  return u;
}

std::optional<int> wr_order(const Decomposition& dec, const Tolerances& tol) {
  require_connected_regular(dec.graph);
  auto idems = minimal_idempotents(dec, tol);
  const int D = dec.graph.distance_data().diameter;
  int order = -1;
  for (int j = 0; j <= D; ++j) {
    bool ok = true;
    for (const auto& e : idems)
      if (!e.alphas[j].constant) {
        ok = false;
        break;
      }
    if (!ok) break;
    order = j;
  }
  if (order < 0) return std::nullopt;
  return order;
}

std::optional<int> spectral_wr_order(const Graph& g, const Tolerances& tol) {
  return wr_order(decompose(g, tol), tol);
}

Representation representation(const Decomposition& dec, int cluster,
                              const Tolerances& tol) {
  if (cluster < 0 || cluster + 1 >= static_cast<int>(dec.offsets.size()))
    throw InputError("representation: cluster index out of range");
  int lo = dec.offsets[cluster], hi = dec.offsets[cluster + 1];
  Representation rep;
  rep.vectors = dec.vectors.middleCols(lo, hi - lo);
  rep.theta = dec.spectrum.eigenvalues[cluster].value;
  rep.alpha0 = static_cast<double>(hi - lo) / dec.graph.n();

  // Defining identity: theta * x = sum of neighbor images.
  const Graph& g = dec.graph;
  double k = static_cast<double>(g.valency().value_or(0));
  double budget =
      tol.residual * std::max(1.0, k) * std::sqrt(std::max(rep.alpha0, 1e-300));
  for (int x = 0; x < g.n(); ++x) {
    Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(hi - lo);
    for (int y : g.neighbors(x)) acc += rep.vectors.row(y);
    double r = (rep.theta * rep.vectors.row(x) - acc).norm();
    if (r > budget)
      throw VerificationError("representation residual too large at vertex " +
                              std::to_string(x));
  }
  return rep;
}

QuotientResult representation_quotient(const Graph& g, const Representation& rep,
                                       const Tolerances& tol) {
  const int n = g.n();
  double tau = tol.tau_id > 0
                   ? tol.tau_id
                   : 1e-6 * std::sqrt(std::max(rep.alpha0, 1e-300));

  // Union-find over near-equal images.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((rep.vectors.row(x) - rep.vectors.row(y)).norm() <= tau)
        parent[find(x)] = find(y);

  // The merge must itself be consistent: inside a class every pair is close,
  // across classes every pair is far. Otherwise identification is not an
  // equivalence and we report a witness chain.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      double dist = (rep.vectors.row(x) - rep.vectors.row(y)).norm();
      bool same = find(x) == find(y);
      if (same && dist > tau) {
        for (int z = 0; z < n; ++z)
          if (z != x && z != y && find(z) == find(x) &&
              (rep.vectors.row(x) - rep.vectors.row(z)).norm() <= tau &&
              (rep.vectors.row(y) - rep.vectors.row(z)).norm() <= tau)
            throw VerificationError(
                "image identification is not an equivalence; witness chain (" +
                std::to_string(x) + "," + std::to_string(z) + "," +
                std::to_string(y) + ")");
        throw VerificationError("image identification is not an equivalence at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }

  QuotientResult q;
  q.vertex_class.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (q.vertex_class[r] == -1) {
      q.vertex_class[r] = next++;
      q.classes.emplace_back();
    }
    q.vertex_class[v] = q.vertex_class[r];
    q.classes[q.vertex_class[v]].push_back(v);
  }

  std::set<Edge> qedges;
  bool independent = true;
  for (auto [u, v] : g.edges()) {
    int cu = q.vertex_class[u], cv = q.vertex_class[v];
    if (cu == cv) independent = false;
    else qedges.insert({std::min(cu, cv), std::max(cu, cv)});
  }
  q.quotient = Graph::from_edges(next, {qedges.begin(), qedges.end()});

  q.report.classes_independent = independent;
  q.report.equal_sizes = true;
  for (const auto& cls : q.classes)
    if (cls.size() != q.classes[0].size()) q.report.equal_sizes = false;

  q.report.equitable = true;
  for (int cu = 0; cu < next && q.report.equitable; ++cu)
    for (int cv = 0; cv < next && q.report.equitable; ++cv) {
      if (cu == cv) continue;
      int expected = -1;
      for (int v : q.classes[cu]) {
        int cnt = 0;
        for (int w : g.neighbors(v))
          if (q.vertex_class[w] == cv) ++cnt;
        if (expected == -1) expected = cnt;
        else if (cnt != expected) {
          q.report.equitable = false;
          break;
        }
      }
    }
  q.report.cover =
      q.report.classes_independent && q.report.equitable && q.report.equal_sizes;
  return q;
}

}  // namespace walkreg::spectral
