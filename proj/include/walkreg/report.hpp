#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkreg/bounds.hpp"
#include "walkreg/clique_geometry.hpp"
#include "walkreg/exact_walk.hpp"
#include "walkreg/graph.hpp"
#include "walkreg/spectral.hpp"

namespace walkreg::report {

struct Options {
  int max_n = 2000;
  int64_t node_budget = 10000000;
  bool with_geometry = true;
  spectral::Tolerances tol;
  std::string source;       // where the graph came from (file, stdin, ...)
  std::string provenance;   // construction note, when derived
};

/// Cosine sequence of one idempotent together with its recurrence residuals.
struct CosineTable {
  double theta = 0.0;
  int multiplicity = 0;
  std::vector<double> u;
  double max_recurrence_residual = 0.0;
};

struct CliqueSummary {
  int clique_count = 0;
  int max_clique_size = 0;
  cliques::DelsarteBound bound;
  int delsarte_clique_count = 0;
  std::vector<cliques::CliqueRankRecord> rank_records;
};

struct GeometrySummary {
  bool evaluated = false;
  cliques::GeometryResult result;
  std::optional<std::string> dual_graph6;
  std::vector<cliques::CliqueProfile> line_profiles;
  cliques::SufficiencyReport sufficiency;
};

struct AnalysisResult {
  Graph graph;
  GraphMetrics metrics;
  bool analyzed = false;     // full pipeline ran (connected regular input)
  std::string skip_reason;   // set when analyzed == false

  exact::WalkAnalysis walks;
  std::optional<int> spectral_order;
  spectral::Spectrum spectrum;
  std::vector<CosineTable> cosines;
  bounds::BoundsReport bound_report;
  CliqueSummary clique_summary;
  GeometrySummary geometry;
};

/// Runs the whole verification pipeline. Throws InputError for oversized
/// input, VerificationError when any proven statement fails or the two
/// walk-regularity routes disagree, BudgetError never (geometry budget
/// exhaustion is recorded as "unknown" instead).
AnalysisResult analyze(const Graph& g, const Options& opt = {});

/// Deterministic JSON (schema "walkreg-report/1"): ordered keys, reals with
/// 12 significant digits. Byte-identical across runs for identical input and
/// options.
nlohmann::ordered_json to_json(const AnalysisResult& res, const Options& opt);

std::string analyze_json(const Graph& g, const Options& opt = {});

/// Rounds to 12 significant digits for stable report bytes.
nlohmann::ordered_json json_real(double v);

}  // namespace walkreg::report

namespace walkreg::diagram {

/// Distance-distribution diagram as DOT: one node per distance class with the
/// class size, forward edges labeled b_i, backward edges labeled c_i, self
/// loops labeled a_i. Values are exact up to the walk-regularity order and
/// min..max ranges beyond it.
std::string emit_diagram(const Graph& g, const exact::WalkAnalysis& walks);

}  // namespace walkreg::diagram
