#pragma once

#include "json.hpp"
#include "labelana/space.hpp"

namespace labelana {

using Json = nlohmann::ordered_json;

/// Words serialize as arrays of letter names, sets as sorted vertex-name
/// arrays; index order keeps every report byte-stable.
Json word_to_json(const Graph& g, const Word& w);
Json vset_to_json(const Graph& g, VertexMask m);
Json aset_to_json(const Space& s, AtomMask m);

}  // namespace labelana
