#include "condensa/eval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "condensa/errors.hpp"
#include "condensa/format.hpp"

namespace condensa {

SetMetrics set_metrics(const std::vector<std::string>& retrieved,
                       const std::set<std::string>& relevant) {
    if (relevant.empty()) throw EmptyRelevantSetError();
    std::set<std::string> seen;
    std::size_t hits = 0;
    for (const auto& d : retrieved)
        if (seen.insert(d).second && relevant.count(d)) ++hits;
    SetMetrics m{};
    m.precision = retrieved.empty()
                      ? 0.0
                      : static_cast<double>(hits) / static_cast<double>(retrieved.size());
    m.recall = static_cast<double>(hits) / static_cast<double>(relevant.size());
    m.f = (m.precision + m.recall) == 0.0
              ? 0.0
              : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

std::vector<HitPoint> hit_points(const RankedList& ranked,
                                 const std::set<std::string>& relevant) {
    if (relevant.empty()) throw EmptyRelevantSetError();
    std::vector<HitPoint> points;
    std::size_t found = 0;
    for (std::size_t i = 0; i < ranked.hits.size(); ++i) {
        if (!relevant.count(ranked.hits[i].doc_id)) continue;
        ++found;
        points.push_back({static_cast<double>(found) / static_cast<double>(relevant.size()),
                          static_cast<double>(found) / static_cast<double>(i + 1)});
    }
    return points;
}

double average_precision(const RankedList& ranked,
                         const std::set<std::string>& relevant) {
    double sum = 0.0;
    for (const auto& p : hit_points(ranked, relevant)) sum += p.precision;
    return sum / static_cast<double>(relevant.size());
}

double mean_average_precision(const std::vector<double>& aps) {
    if (aps.empty()) throw NoQueriesError();
    double sum = 0.0;
    for (double ap : aps) sum += ap;
    return sum / static_cast<double>(aps.size());
}

std::array<double, 11> interpolate_11pt(const std::vector<HitPoint>& points,
                                        InterpMode mode) {
    std::array<double, 11> out{};
    for (int level = 0; level <= 10; ++level) {
        const double lo = static_cast<double>(level) / 10.0;
        const double hi = static_cast<double>(level + 1) / 10.0;
        double best = 0.0;
        for (const auto& p : points) {
            const bool inside = mode == InterpMode::kStandard
                                    ? p.recall >= lo
                                    : (level == 10 ? p.recall == 1.0
                                                   : p.recall >= lo && p.recall < hi);
            if (inside) best = std::max(best, p.precision);
        }
        out[level] = best;
    }
    return out;
}

double r_precision(const RankedList& ranked, const std::set<std::string>& relevant) {
    if (relevant.empty()) throw EmptyRelevantSetError();
    const std::size_t cutoff = relevant.size();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.hits.size() && i < cutoff; ++i)
        if (relevant.count(ranked.hits[i].doc_id)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(cutoff);
}

AutoQrels auto_qrels(const std::vector<RankedList>& baseline_runs) {
    AutoQrels out;
    for (const auto& run : baseline_runs) {
        if (run.hits.empty()) {
            out.excluded.push_back(run.query_id);
            continue;
        }
        auto& rel = out.qrels.judgments[run.query_id];
        for (const auto& hit : run.hits) rel.insert(hit.doc_id);
    }
    return out;
}

EvalReport evaluate_run(const std::vector<RankedList>& runs, const QRels& qrels,
                        InterpMode mode) {
    EvalReport report;
    report.mode = mode;

    std::map<std::string, const RankedList*> by_id;
    for (const auto& run : runs) {
        by_id[run.query_id] = &run;
        if (!qrels.judgments.count(run.query_id))
            report.warnings.push_back("query `" + run.query_id +
                                      "` has no relevance judgments; skipped");
    }

    static const RankedList kEmpty{};
    std::vector<double> aps;
    for (const auto& [query_id, relevant] : qrels.judgments) {
        const auto it = by_id.find(query_id);
        const RankedList& ranked = it == by_id.end() ? kEmpty : *it->second;

        QueryMetrics qm;
        std::vector<std::string> retrieved;
        retrieved.reserve(ranked.hits.size());
        for (const auto& hit : ranked.hits) retrieved.push_back(hit.doc_id);
        const SetMetrics sm = set_metrics(retrieved, relevant);
        qm.precision = sm.precision;
        qm.recall = sm.recall;
        qm.f = sm.f;
        qm.r_precision = r_precision(ranked, relevant);
        qm.hit_points = hit_points(ranked, relevant);
        double sum = 0.0;
        for (const auto& p : qm.hit_points) sum += p.precision;
        qm.ap = sum / static_cast<double>(relevant.size());
        qm.interp11 = interpolate_11pt(qm.hit_points, mode);

        aps.push_back(qm.ap);
        report.mean_recall += qm.recall;
        for (int i = 0; i <= 10; ++i) report.interp11_avg[i] += qm.interp11[i];
        report.per_query.emplace(query_id, std::move(qm));
    }
    if (!aps.empty()) {
        report.map = mean_average_precision(aps);
        report.mean_recall /= static_cast<double>(aps.size());
        for (int i = 0; i <= 10; ++i)
            report.interp11_avg[i] /= static_cast<double>(aps.size());
    }
    return report;
}

void write_per_query_csv(const EvalReport& report, std::ostream& out) {
    out << "query_id,precision,recall,f,r_precision,ap\n";
    for (const auto& [query_id, qm] : report.per_query)
        out << query_id << "," << g17(qm.precision) << "," << g17(qm.recall) << ","
            << g17(qm.f) << "," << g17(qm.r_precision) << "," << g17(qm.ap) << "\n";
}

void write_aggregate_csv(const EvalReport& report, std::ostream& out) {
    out << "recall,map";
    for (int i = 0; i <= 10; ++i) out << ",r" << i;
    out << "\n";
    out << g17(report.mean_recall) << "," << g17(report.map);
    for (int i = 0; i <= 10; ++i) out << "," << g17(report.interp11_avg[i]);
    out << "\n";
}

void write_curve_csv(const EvalReport& report, std::ostream& out) {
    for (int i = 0; i <= 10; ++i)
        out << "r" << i << "," << g17(report.interp11_avg[i]) << "\n";
}

void write_qrels(const QRels& qrels, std::ostream& out) {
    for (const auto& [query_id, docs] : qrels.judgments)
        for (const auto& d : docs) out << query_id << "\t" << d << "\n";
}

}  // namespace condensa
