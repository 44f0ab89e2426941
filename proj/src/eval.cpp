#include "cir/eval.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cir {

Qrels Qrels::parse(const std::string& tsv_content) {
    Qrels q;
    std::istringstream in(tsv_content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw parse_error("qrels line needs query-id<TAB>doc-id", line_no);
        try {
            q.relevant[line.substr(0, tab)].insert(std::stoi(line.substr(tab + 1)));
        } catch (const std::exception&) {
            throw parse_error("bad doc id in qrels", line_no);
        }
    }
    return q;
}

Qrels Qrels::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open qrels file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Qrels::to_tsv() const {
    std::string out;
    for (const auto& [qid, docs] : relevant)
        for (DocId d : docs) out += qid + "\t" + std::to_string(d) + "\n";
    return out;
}

namespace {

int count_relevant(const std::vector<DocId>& retrieved, const std::set<DocId>& relevant) {
    int n = 0;
    for (DocId d : retrieved)
        if (relevant.count(d)) ++n;
    return n;
}

}  // namespace

double precision(const std::vector<DocId>& retrieved, const std::set<DocId>& relevant) {
    if (retrieved.empty()) throw empty_retrieved();
    return static_cast<double>(count_relevant(retrieved, relevant)) /
           static_cast<double>(retrieved.size());
}

double recall(const std::vector<DocId>& retrieved, const std::set<DocId>& relevant) {
    if (relevant.empty()) throw empty_relevant();
    return static_cast<double>(count_relevant(retrieved, relevant)) /
           static_cast<double>(relevant.size());
}

std::pair<double, double> pr_at_k(const RunResult& run, const std::set<DocId>& relevant,
                                  int k) {
    if (k < 1) throw invariant_violation("cutoff k must be >= 1");
    std::vector<DocId> head(run.retrieved.begin(),
                            run.retrieved.begin() +
                                std::min<size_t>(run.retrieved.size(), static_cast<size_t>(k)));
    double p = head.empty() ? 0.0 : precision(head, relevant);
    double r = recall(head, relevant);
    return {p, r};
}

Report compare_report(const std::vector<RunResult>& runs, const Qrels& qrels) {
    if (runs.empty()) throw empty_report();
    Report rep;
    for (const auto& run : runs) {
        auto it = qrels.relevant.find(run.query_id);
        if (it == qrels.relevant.end()) throw missing_qrel(run.query_id);
        ReportRow row;
        row.query_id = run.query_id;
        row.mode = run.mode;
        row.n_retrieved = static_cast<int>(run.retrieved.size());
        row.elapsed_ms = run.elapsed_ms;
        row.recall = recall(run.retrieved, it->second);
        if (!run.retrieved.empty()) row.precision = precision(run.retrieved, it->second);
        rep.rows.push_back(std::move(row));
    }

    std::map<std::string, ReportAverage> avg;
    std::map<std::string, int> defined_p;
    for (const auto& row : rep.rows) {
        auto& a = avg[row.mode];
        a.mode = row.mode;
        a.n_queries++;
        a.recall += row.recall;
        a.elapsed_ms += row.elapsed_ms;
        if (row.precision) {
            a.precision = a.precision.value_or(0.0) + *row.precision;
            defined_p[row.mode]++;
        }
    }
    for (auto& [mode, a] : avg) {
        a.recall /= a.n_queries;
        a.elapsed_ms /= a.n_queries;
        if (a.precision) *a.precision /= defined_p[mode];
        rep.averages.push_back(a);
    }
    return rep;
}

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << v;
    return ss.str();
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string("undefined");
}

}  // namespace

std::string Report::to_tsv() const {
    std::string out = "query\tmode\tprecision\trecall\tretrieved\telapsed_ms\n";
    for (const auto& r : rows) {
        out += r.query_id + "\t" + r.mode + "\t" + fmt_opt(r.precision) + "\t" +
               fmt(r.recall) + "\t" + std::to_string(r.n_retrieved) + "\t" +
               fmt(r.elapsed_ms) + "\n";
    }
    for (const auto& a : averages) {
        out += "average\t" + a.mode + "\t" + fmt_opt(a.precision) + "\t" + fmt(a.recall) +
               "\t-\t" + fmt(a.elapsed_ms) + "\n";
    }
    return out;
}

std::string Report::to_text() const {
    std::ostringstream ss;
    ss << std::left << std::setw(16) << "query" << std::setw(14) << "mode"
       << std::setw(12) << "precision" << std::setw(10) << "recall" << std::setw(10)
       << "hits" << "elapsed_ms\n";
    for (const auto& r : rows) {
        ss << std::left << std::setw(16) << r.query_id << std::setw(14) << r.mode
           << std::setw(12) << fmt_opt(r.precision) << std::setw(10) << fmt(r.recall)
           << std::setw(10) << r.n_retrieved << fmt(r.elapsed_ms) << "\n";
    }
    for (const auto& a : averages) {
        ss << std::left << std::setw(16) << "average" << std::setw(14) << a.mode
           << std::setw(12) << fmt_opt(a.precision) << std::setw(10) << fmt(a.recall)
           << std::setw(10) << "-" << fmt(a.elapsed_ms) << "\n";
    }
    return ss.str();
}

}  // namespace cir
