#include "walkreg/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace walkreg::diagram {

namespace {

struct Range {
  long long lo = 0, hi = 0;
  bool set = false;
  void add(long long v) {
    if (!set) {
      lo = hi = v;
      set = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  std::string str() const {
    if (!set) return "0";
    if (lo == hi) return std::to_string(lo);
    return std::to_string(lo) + ".." + std::to_string(hi);
  }
};

}  // namespace

std::string emit_diagram(const Graph& g, const exact::WalkAnalysis& walks) {
  const auto& dd = g.distance_data();
  const int D = dd.diameter;
  const int n = g.n();
  int order = walks.order.order.value_or(-1);

  std::vector<Range> ki(D + 1), a(D + 1), b(D + 1), c(D + 1);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i <= dd.eccentricity(x); ++i) ki[i].add(dd.class_counts[x][i]);
    for (int y = 0; y < n; ++y) {
      int j = dd.at(x, y);
      if (j < 0) continue;
      int aa = 0, bb = 0, cc = 0;
      for (int w : g.neighbors(y)) {
        int dx = dd.at(x, w);
        if (dx == j) ++aa;
        else if (dx == j + 1) ++bb;
        else if (dx == j - 1) ++cc;
      }
      a[j].add(aa);
      b[j].add(bb);
      c[j].add(cc);
    }
  }

  std::string dot = "digraph distance_distribution {\n  rankdir=LR;\n"
                    "  node [shape=circle];\n";
  for (int i = 0; i <= D; ++i) {
    dot += "  d" + std::to_string(i) + " [label=\"" + ki[i].str() + "\"";
    if (i > order) dot += " style=dashed";
    dot += "];\n";
  }
  for (int i = 0; i <= D; ++i) {
    if (i < D)
      dot += "  d" + std::to_string(i) + " -> d" + std::to_string(i + 1) +
             " [label=\"b" + std::to_string(i) + "=" + b[i].str() + "\"];\n";
    if (i > 0)
      dot += "  d" + std::to_string(i) + " -> d" + std::to_string(i - 1) +
             " [label=\"c" + std::to_string(i) + "=" + c[i].str() + "\"];\n";
    if (a[i].set && (a[i].hi > 0 || a[i].lo != a[i].hi))
      dot += "  d" + std::to_string(i) + " -> d" + std::to_string(i) +
             " [label=\"a" + std::to_string(i) + "=" + a[i].str() + "\"];\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace walkreg::diagram
