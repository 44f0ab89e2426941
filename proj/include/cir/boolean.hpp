#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cir/index.hpp"
#include "cir/ontology.hpp"
#include "cir/textpipe.hpp"

namespace cir {

enum class BoolOp { And, Or, Not };

// Flat query: one operator, pipeline-normalized terms. For Not, `terms` is
// the positive base (AND-combined) and `negated` the subtracted terms.
struct BooleanQuery {
    BoolOp op = BoolOp::And;
    std::vector<std::string> terms;
    std::vector<std::string> negated;
};

// Operators: English {and, or, not}, Arabic {و, أو, ليس}. Operator words are
// consumed before stop-word removal; bare multi-term queries default to AND.
BooleanQuery parse_boolean(std::string_view raw, const StopWords& stops);

// Strictly ascending, duplicate-free doc ids.
using DocSet = std::vector<DocId>;

DocSet eval_and(const IndexPair& ix, std::span<const std::string> terms);
DocSet eval_or(const IndexPair& ix, std::span<const std::string> terms);
DocSet eval_not(const IndexPair& ix, std::span<const std::string> base,
                std::span<const std::string> negated);

DocSet eval_boolean(const IndexPair& ix, const BooleanQuery& q);

// Resolves the query concept over the positive terms, restricts every
// positive term to posting groups whose concept is related to it, then
// applies the operator logic. Negated terms subtract their full traditional
// posting so the result can never exceed the traditional one. Falls back to
// traditional evaluation when the query concept is unknown.
DocSet eval_semantic(const IndexPair& ix, const ConceptGraph& g, const BooleanQuery& q,
                     int hop_limit = kDefaultHopLimit);

}  // namespace cir
