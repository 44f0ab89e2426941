#pragma once

#include <stdexcept>
#include <string>

namespace cir {

using DocId = int;

// Base class for all data errors raised by the engine. CLI maps these to
// exit code 2; usage errors stay with the argument parser (exit 1).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    int line = 0;
    parse_error(const std::string& msg, int line_no)
        : error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct duplicate_doc_id : error {
    explicit duplicate_doc_id(DocId id)
        : error("duplicate doc id " + std::to_string(id)) {}
};

struct empty_collection : error {
    empty_collection() : error("collection is empty") {}
};

struct dangling_reference : parse_error {
    dangling_reference(const std::string& what_ref, int line_no)
        : parse_error("dangling reference to '" + what_ref + "'", line_no) {}
};

struct version_mismatch : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct infeasible_spec : error {
    using error::error;
};

struct empty_query : error {
    empty_query() : error("query is empty after normalization") {}
};

struct division_by_zero_df : error {
    division_by_zero_df() : error("idf requested for df = 0") {}
};

struct invariant_violation : error {
    using error::error;
};

struct empty_retrieved : error {
    empty_retrieved() : error("precision undefined: retrieved set is empty") {}
};

struct empty_relevant : error {
    empty_relevant() : error("recall undefined: relevant set is empty") {}
};

struct missing_qrel : error {
    explicit missing_qrel(const std::string& qid)
        : error("no relevance judgments for query '" + qid + "'") {}
};

struct empty_report : error {
    empty_report() : error("no runs to report") {}
};

}  // namespace cir
