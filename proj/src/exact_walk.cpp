#include "walkreg/exact_walk.hpp"

#include <algorithm>
#include <numeric>

#include "walkreg/errors.hpp"

namespace walkreg::exact {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m;
  m.n = g.n();
  m.a.assign(static_cast<size_t>(m.n) * m.n, 0);
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1;
    m.at(v, u) = 1;
  }
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  const int n = x.n;
  IntMatrix z;
  z.n = n;
  z.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& xik = x.at(i, k);
      if (xik == 0) continue;
      const BigInt* yrow = &y.a[static_cast<size_t>(k) * n];
      BigInt* zrow = &z.a[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j)
        if (yrow[j] != 0) zrow[j] += xik * yrow[j];
    }
  return z;
}

namespace {

// Incremental integer row echelon over the rationals: rows are kept integral
// and content-normalized; reduction uses cross-multiplication so no fractions
// ever appear. Returns false when the candidate row is dependent.
class EchelonBasis {
 public:
  bool insert(std::vector<BigInt> row) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const BigInt lead = row[pivot_[r]];
      if (lead == 0) continue;
      const BigInt p = rows_[r][pivot_[r]];
      for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] * p - rows_[r][j] * lead;
    }
    size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) return false;
    normalize(row);
    rows_.push_back(std::move(row));
    pivot_.push_back(pc);
    return true;
  }

 private:
  static void normalize(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& v : row) {
      if (v != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
      if (g == 1) break;
    }
    if (g > 1)
      for (auto& v : row) v /= g;
  }

  std::vector<std::vector<BigInt>> rows_;
  std::vector<size_t> pivot_;
};

void require_connected(const Graph& g) {
  if (g.n() == 0) throw InputError("walk analysis requires a non-empty graph");
  if (!g.distance_data().connected)
    throw InputError("walk analysis requires a connected graph");
}

void require_regular(const Graph& g) {
  if (!g.valency())
    throw InputError("walk analysis requires a regular graph");
}

std::string pair_witness_json(const Graph& g, const WitnessPair& w);

}  // namespace

WalkTable walk_table(const Graph& g) {
  require_connected(g);
  const int n = g.n();
  WalkTable t;
  EchelonBasis basis;
  IntMatrix power = IntMatrix::identity(n);
  IntMatrix adj = IntMatrix::adjacency(g);
  // Keep appending powers while they stay linearly independent; the first
  // dependent power is A^{d+1} and is discarded.
  while (true) {
    std::vector<BigInt> vec(power.a.begin(), power.a.end());
    if (!basis.insert(std::move(vec))) break;
    t.powers.push_back(power);
    power = mul(power, adj);
  }
  t.d = static_cast<int>(t.powers.size()) - 1;
  return t;
}

int minimal_poly_degree(const Graph& g) { return walk_table(g).d; }

namespace {

OrderResult order_from_table(const Graph& g, const WalkTable& wt) {
  const auto& dd = g.distance_data();
  const int n = g.n();
  OrderResult res;
  res.d = wt.d;
  res.diameter = dd.diameter;

  int order = -1;
  for (int j = 0; j <= dd.diameter; ++j) {
    bool constant = true;
    for (const auto& m : wt.powers) {
      const BigInt* ref = nullptr;
      int rx = -1, ry = -1;
      for (int x = 0; x < n && constant; ++x)
        for (int y = x; y < n; ++y) {
          if (dd.at(x, y) != j) continue;
          const BigInt& v = m.at(x, y);
          if (ref == nullptr) {
            ref = &v;
            rx = x;
            ry = y;
          } else if (v != *ref) {
            constant = false;
            res.witness = WitnessPair{x, y, rx, ry, j, "walk count"};
            break;
          }
        }
      if (!constant) break;
    }
    if (!constant) break;
    order = j;
  }
  if (order < 0)
    res.order = std::nullopt;
  else
    res.order = order;
  return res;
}

}  // namespace

OrderResult walk_regularity_order(const Graph& g) {
  require_connected(g);
  require_regular(g);
  return order_from_table(g, walk_table(g));
}

namespace {

std::string pair_witness_json(const Graph& g, const WitnessPair& w) {
  // Tiny hand-rolled JSON; reports use the full serializer.
  std::string s = "{\"quantity\":\"" + w.quantity + "\",\"distance\":" +
                  std::to_string(w.distance) + ",\"pair\":[" + std::to_string(w.x) +
                  "," + std::to_string(w.y) + "],\"referencePair\":[" +
                  std::to_string(w.x2) + "," + std::to_string(w.y2) + "]}";
  (void)g;
  return s;
}

struct AbcCounts {
  int a = 0, b = 0, c = 0;
};

AbcCounts count_abc(const Graph& g, const DistanceData& dd, int x, int y, int j) {
  AbcCounts out;
  for (int w : g.neighbors(y)) {
    int dx = dd.at(x, w);
    if (dx == j) ++out.a;
    else if (dx == j + 1) ++out.b;
    else if (dx == j - 1) ++out.c;
  }
  return out;
}

}  // namespace

IntersectionNumbers intersection_numbers(const Graph& g, int t) {
  require_connected(g);
  require_regular(g);
  const auto& dd = g.distance_data();
  if (t < 0 || t > dd.diameter)
    throw InputError("intersection numbers: t out of range");
  IntersectionNumbers out;
  out.t = t;
  out.a.assign(t + 1, 0);
  out.b.assign(t + 1, 0);
  out.c.assign(t + 1, 0);
  const int n = g.n();
  for (int j = 0; j <= t; ++j) {
    bool first = true;
    int fx = -1, fy = -1;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (dd.at(x, y) != j) continue;
        AbcCounts k = count_abc(g, dd, x, y, j);
        if (first) {
          out.a[j] = k.a;
          out.b[j] = k.b;
          out.c[j] = k.c;
          first = false;
          fx = x;
          fy = y;
        } else if (k.a != out.a[j] || k.b != out.b[j] || k.c != out.c[j]) {
          WitnessPair w{x, y, fx, fy, j, "intersection number"};
          throw VerificationError(
              "intersection numbers not constant at distance " + std::to_string(j),
              pair_witness_json(g, w));
        }
      }
  }
  return out;
}

TripleNumbers triple_numbers(const Graph& g, int t) {
  require_connected(g);
  require_regular(g);
  const auto& dd = g.distance_data();
  if (t < 0 || t > dd.diameter)
    throw InputError("triple numbers: t out of range");
  const int n = g.n();
  const int w = t + 1;
  TripleNumbers out;
  out.t = t;
  out.p.assign(static_cast<size_t>(w) * w * w, -1);
  std::vector<long long> local(static_cast<size_t>(w) * w);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int h = dd.at(x, y);
      if (h < 0 || h > t) continue;
      std::fill(local.begin(), local.end(), 0);
      for (int z = 0; z < n; ++z) {
        int i = dd.at(x, z), j = dd.at(y, z);
        if (i >= 0 && i <= t && j >= 0 && j <= t) ++local[static_cast<size_t>(i) * w + j];
      }
      for (int i = 0; i <= t; ++i)
        for (int j = 0; j <= t; ++j) {
          auto& slot = out.p[(static_cast<size_t>(h) * w + i) * w + j];
          long long v = local[static_cast<size_t>(i) * w + j];
          if (slot == -1) {
            slot = v;
          } else if (slot != v) {
            WitnessPair wp{x, y, -1, -1, h, "triple number"};
            throw VerificationError("triple numbers not constant at distance " +
                                        std::to_string(h),
                                    pair_witness_json(g, wp));
          }
        }
    }
  return out;
}

DistanceRegularity is_distance_regular(const Graph& g) {
  require_connected(g);
  DistanceRegularity out;
  if (!g.valency()) return out;
  const auto& dd = g.distance_data();
  const int n = g.n();
  const int D = dd.diameter;
  std::vector<int> a(D + 1), b(D + 1), c(D + 1);
  for (int j = 0; j <= D; ++j) {
    bool first = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (dd.at(x, y) != j) continue;
        AbcCounts k = count_abc(g, dd, x, y, j);
        if (first) {
          a[j] = k.a;
          b[j] = k.b;
          c[j] = k.c;
          first = false;
        } else if (k.a != a[j] || k.b != b[j] || k.c != c[j]) {
          return out;
        }
      }
  }
  out.distance_regular = true;
  out.b.assign(b.begin(), b.end() - 1);
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

WalkAnalysis analyze_walks(const Graph& g) {
  require_connected(g);
  require_regular(g);
  WalkAnalysis wa;
  wa.order = order_from_table(g, walk_table(g));
  if (wa.order.order) {
    wa.intersection = intersection_numbers(g, *wa.order.order);
    wa.triples = triple_numbers(g, *wa.order.order);
  }
  wa.drg = is_distance_regular(g);
  return wa;
}

}  // namespace walkreg::exact
