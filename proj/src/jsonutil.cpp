#include "labelana/jsonutil.hpp"

namespace labelana {

Json word_to_json(const Graph& g, const Word& w) {
  Json out = Json::array();
  for (LetterId a : w) out.push_back(g.letter_name(a));
  return out;
}

Json vset_to_json(const Graph& g, VertexMask m) {
  Json out = Json::array();
  VertexMask rest = m;
  while (rest) {
    VertexId v = static_cast<VertexId>(std::countr_zero(rest));
    rest &= rest - 1;
    out.push_back(g.vertex_name(v));
  }
  return out;
}

Json aset_to_json(const Space& s, AtomMask m) {
  return vset_to_json(s.graph(), s.vertices_of(m));
}

}  // namespace labelana
