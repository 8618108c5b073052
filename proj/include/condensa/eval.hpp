#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "condensa/retrieval.hpp"

namespace condensa {

/// Relevance judgments: query -> set of relevant doc ids (never empty).
struct QRels {
    std::map<std::string, std::set<std::string>> judgments;
};

/// Interpolation rule for the 11-point precision series. The windowed rule
/// takes the maximum precision among hit points whose recall falls inside
/// [R_i, R_{i+1}) (recall exactly 1.0 for the last level); the standard
/// TREC rule takes the maximum at recall >= R_i.
enum class InterpMode { kWindowed, kStandard };

struct HitPoint {
    double recall;
    double precision;
};

struct SetMetrics {
    double precision;
    double recall;
    double f;
};

struct QueryMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
    double r_precision = 0.0;
    double ap = 0.0;
    std::vector<HitPoint> hit_points;
    std::array<double, 11> interp11{};
};

struct EvalReport {
    std::map<std::string, QueryMetrics> per_query;
    double mean_recall = 0.0;
    double map = 0.0;
    std::array<double, 11> interp11_avg{};
    InterpMode mode = InterpMode::kWindowed;
    std::vector<std::string> warnings;
};

/// Unranked P, R and F over a retrieved list; throws EmptyRelevantSetError.
SetMetrics set_metrics(const std::vector<std::string>& retrieved,
                       const std::set<std::string>& relevant);

/// One (recall, precision) point per relevant document met while scanning
/// the ranking.
std::vector<HitPoint> hit_points(const RankedList& ranked,
                                 const std::set<std::string>& relevant);

/// Mean of the hit-point precisions with unretrieved relevant documents
/// counting as zero (the divisor is |relevant|).
double average_precision(const RankedList& ranked,
                         const std::set<std::string>& relevant);

/// Arithmetic mean of per-query AP; throws NoQueriesError on empty input.
double mean_average_precision(const std::vector<double>& aps);

std::array<double, 11> interpolate_11pt(const std::vector<HitPoint>& points,
                                        InterpMode mode = InterpMode::kWindowed);

/// Precision at cutoff |relevant|.
double r_precision(const RankedList& ranked, const std::set<std::string>& relevant);

struct AutoQrels {
    QRels qrels;
    std::vector<std::string> excluded;  // queries whose baseline was empty
};

/// Treats each baseline retrieved set as the relevant set for its query.
AutoQrels auto_qrels(const std::vector<RankedList>& baseline_runs);

/// Scores a run against judgments. Queries judged but missing from the run
/// score zero everywhere and still count in the averages; run entries for
/// unjudged queries are skipped with a warning.
EvalReport evaluate_run(const std::vector<RankedList>& runs, const QRels& qrels,
                        InterpMode mode = InterpMode::kWindowed);

void write_per_query_csv(const EvalReport& report, std::ostream& out);
void write_aggregate_csv(const EvalReport& report, std::ostream& out);
void write_curve_csv(const EvalReport& report, std::ostream& out);
void write_qrels(const QRels& qrels, std::ostream& out);

}  // namespace condensa
