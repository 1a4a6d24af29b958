#include "walkreg/catalog.hpp"

#include <algorithm>
#include <set>

#include "walkreg/errors.hpp"

namespace walkreg {

namespace {

void need_params(const std::string& name, const std::vector<long long>& p, size_t k) {
  if (p.size() != k)
    throw InputError("catalog: " + name + " expects " + std::to_string(k) +
                     " parameter(s), got " + std::to_string(p.size()));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("catalog: cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  if (n < 1) throw InputError("catalog: complete needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph complete_multipartite(int parts, int size) {
  if (parts < 1 || size < 1)
    throw InputError("catalog: complete_multipartite needs parts,size >= 1");
  int n = parts * size;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph hypercube(int d) {
  if (d < 1 || d > 20) throw InputError("catalog: hypercube needs 1 <= d <= 20");
  int n = 1 << d;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b) {
      int v = u ^ (1 << b);
      if (u < v) e.emplace_back(u, v);
    }
  return Graph::from_edges(n, e);
}

Graph hamming(int d, int q) {
  if (d < 1 || q < 2) throw InputError("catalog: hamming needs d >= 1, q >= 2");
  long long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    if (n > 1000000) throw InputError("catalog: hamming graph too large");
  }
  std::vector<Edge> e;
  for (long long u = 0; u < n; ++u) {
    long long place = 1;
    for (int pos = 0; pos < d; ++pos) {
      long long digit = (u / place) % q;
      for (long long other = 0; other < q; ++other)
        if (other != digit) {
          long long v = u + (other - digit) * place;
          if (u < v) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
      place *= q;
    }
  }
  return Graph::from_edges(static_cast<int>(n), e);
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k == n || k >= n)
    throw InputError("catalog: generalized_petersen needs n >= 3, 1 <= k < n, 2k != n");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    e.emplace_back(std::min(i, j), std::max(i, j));          // outer cycle
    int a = n + i, b = n + (i + k) % n;
    e.emplace_back(std::min(a, b), std::max(a, b));          // inner step-k cycle(s)
    e.emplace_back(i, n + i);                                // spoke
  }
  return Graph::from_edges(2 * n, e);
}

Graph icosahedron() {
  // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 apex.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5;
    int l = 6 + i, ln = 6 + (i + 1) % 5;
    e.emplace_back(0, u);
    e.emplace_back(std::min(u, un), std::max(u, un));
    e.emplace_back(std::min(l, ln), std::max(l, ln));
    e.emplace_back(u, l);
    e.emplace_back(std::min(un, l), std::max(un, l));
    e.emplace_back(l, 11);
  }
  return Graph::from_edges(12, e);
}

Graph rook(int n) {
  if (n < 2) throw InputError("catalog: rook/L2 needs n >= 2");
  std::vector<Edge> e;
  auto id = [n](int r, int c) { return r * n + c; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      for (int c2 = c + 1; c2 < n; ++c2) e.emplace_back(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < n; ++r2) e.emplace_back(id(r, c), id(r2, c));
    }
  return Graph::from_edges(n * n, e);
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

Graph paley(long long q) {
  if (!is_prime(q) || q % 4 != 1)
    throw InputError("catalog: paley needs a prime q = 1 mod 4");
  std::set<long long> squares;
  for (long long x = 1; x < q; ++x) squares.insert(x * x % q);
  std::vector<Edge> e;
  for (long long u = 0; u < q; ++u)
    for (long long v = u + 1; v < q; ++v)
      if (squares.count((v - u) % q))
        e.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(static_cast<int>(q), e);
}

}  // namespace

Graph catalog(const std::string& name, const std::vector<long long>& params) {
  std::string id = name;
  std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (id == "cycle") {
    need_params(id, params, 1);
    return cycle(static_cast<int>(params[0]));
  }
  if (id == "complete") {
    need_params(id, params, 1);
    return complete(static_cast<int>(params[0]));
  }
  if (id == "complete_multipartite") {
    need_params(id, params, 2);
    return complete_multipartite(static_cast<int>(params[0]),
                                 static_cast<int>(params[1]));
  }
  if (id == "cocktail_party") {
    need_params(id, params, 1);
    return complete_multipartite(static_cast<int>(params[0]), 2);
  }
  if (id == "hypercube") {
    need_params(id, params, 1);
    return hypercube(static_cast<int>(params[0]));
  }
  if (id == "hamming") {
    need_params(id, params, 2);
    return hamming(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (id == "rook" || id == "l2") {
    need_params(id, params, 1);
    return rook(static_cast<int>(params[0]));
  }
  if (id == "petersen") {
    need_params(id, params, 0);
    return generalized_petersen(5, 2);
  }
  if (id == "generalized_petersen" || id == "gp") {
    need_params(id, params, 2);
    return generalized_petersen(static_cast<int>(params[0]),
                                static_cast<int>(params[1]));
  }
  if (id == "dodecahedron") {
    need_params(id, params, 0);
    return generalized_petersen(10, 2);
  }
  if (id == "icosahedron") {
    need_params(id, params, 0);
    return icosahedron();
  }
  if (id == "octahedron") {
    need_params(id, params, 0);
    return complete_multipartite(3, 2);
  }
  if (id == "paley" || id == "conference") {
    need_params(id, params, 1);
    return paley(params[0]);
  }
  throw InputError("catalog: unknown graph name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"cycle",        "complete",   "complete_multipartite",
          "cocktail_party", "hypercube", "hamming",
          "rook",         "petersen",   "generalized_petersen",
          "dodecahedron", "icosahedron", "octahedron",
          "paley"};
}

}  // namespace walkreg
