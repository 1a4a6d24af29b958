#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walkreg/graph.hpp"

namespace walkreg::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square matrix of arbitrary-precision integers.
struct IntMatrix {
  int n = 0;
  std::vector<BigInt> a;

  static IntMatrix identity(int n);
  static IntMatrix adjacency(const Graph& g);
  BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  BigInt trace() const;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);

/// Adjacency powers A^0 .. A^d, where d+1 is the degree of the minimal
/// polynomial of A (equivalently the number of distinct eigenvalues for a
/// connected graph). Determined by exact rank of the vectorized powers.
struct WalkTable {
  std::vector<IntMatrix> powers;
  int d = 0;
};

WalkTable walk_table(const Graph& g);

/// d = (number of independent adjacency powers) - 1. Throws InputError for a
/// disconnected graph.
int minimal_poly_degree(const Graph& g);

/// Pair of vertices exposing a non-constant walk count or intersection count.
struct WitnessPair {
  int x = -1, y = -1;
  int x2 = -1, y2 = -1;
  int distance = -1;
  std::string quantity;
};

struct OrderResult {
  std::optional<int> order;  // nullopt encodes "none"
  int d = 0;
  int diameter = 0;
  std::optional<WitnessPair> witness;  // first violation, when order < diameter
};

/// Largest t such that for every power l <= d the entries of A^l are constant
/// on every distance class j <= t; nullopt ("none") when already the diagonal
/// (j = 0) is non-constant. Requires a connected regular graph.
OrderResult walk_regularity_order(const Graph& g);

struct IntersectionNumbers {
  // a[j], b[j], c[j] for 0 <= j <= t; b[t] and c[0] are the usual boundary
  // values (c_0 = 0, and b_t may be meaningful only when t < diameter).
  std::vector<int> a, b, c;
  int t = 0;
};

/// Intersection numbers verified constant over all qualifying vertex pairs by
/// direct counting. Throws VerificationError (with a witness) when some pair
/// disagrees, which means t exceeds the walk-regularity order.
IntersectionNumbers intersection_numbers(const Graph& g, int t);

/// p[h][i][j] = |Γ_i(x) ∩ Γ_j(y)| for dist(x,y) = h, all h,i,j <= t, verified
/// constant by direct counting.
struct TripleNumbers {
  int t = 0;
  std::vector<long long> p;  // (t+1)^3 table
  long long at(int h, int i, int j) const {
    return p[(static_cast<size_t>(h) * (t + 1) + i) * (t + 1) + j];
  }
};

TripleNumbers triple_numbers(const Graph& g, int t);

struct DistanceRegularity {
  bool distance_regular = false;
  std::vector<int> b;  // b_0 .. b_{D-1}
  std::vector<int> c;  // c_1 .. c_D
};

/// Direct-counting distance-regularity test over all j <= D.
DistanceRegularity is_distance_regular(const Graph& g);

/// One-stop exact analysis used by the report pipeline.
struct WalkAnalysis {
  OrderResult order;
  IntersectionNumbers intersection;  // up to order (empty when order is none)
  TripleNumbers triples;             // up to order
  DistanceRegularity drg;
};

WalkAnalysis analyze_walks(const Graph& g);

}  // namespace walkreg::exact
