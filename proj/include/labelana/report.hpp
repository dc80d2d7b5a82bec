#pragma once

#include <string>

#include "labelana/analysis.hpp"

namespace labelana {

inline constexpr const char* kSchema = "labelana/1";

Json graph_to_json(const Graph& g);
Json analysis_to_json(const Analysis& a);
std::string analysis_to_text(const Analysis& a);

Json forced_chain_to_json(const Space& sp, const ForcedChain& c);
Json loop_search_to_json(const Space& sp, const LoopSearchResult& r);
Json quotient_summary_to_json(const Space& sp, const QuotientSummary& q);
Json verdict_to_json(const Verdict& v);

/// DOT export; vertices are colored by atom and members of the largest
/// proper hereditary saturated core are drawn with a doubled border.
std::string analysis_to_dot(const Analysis& a);

Json error_to_json(const Error& e);

/// Serialize with a stable layout: two-space indentation, ordered keys.
std::string dump_json(const Json& j);

}  // namespace labelana
