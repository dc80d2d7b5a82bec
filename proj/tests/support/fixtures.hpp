#pragma once

#include <string>

#include "labelana/analysis.hpp"

#ifndef LABELANA_FIXTURE_DIR
#define LABELANA_FIXTURE_DIR "fixtures"
#endif

namespace labelana::testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(LABELANA_FIXTURE_DIR) + "/" + name + ".lgr";
}

inline Graph load_fixture(const std::string& name) {
  return parse_graph_file(fixture_path(name));
}

inline Word make_word(const Graph& g, const std::string& letters) {
  // dot-separated letter names, or one letter per character
  Word w;
  auto push = [&](const std::string& tok) {
    auto id = g.letter_id(tok);
    if (!id) throw std::runtime_error("unknown letter in test word: " + tok);
    w.push_back(*id);
  };
  if (letters.find('.') != std::string::npos) {
    std::string cur;
    for (char c : letters) {
      if (c == '.') {
        if (!cur.empty()) push(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) push(cur);
  } else {
    for (char c : letters) push(std::string(1, c));
  }
  return w;
}

inline VertexMask make_set(const Graph& g, std::initializer_list<const char*> names) {
  VertexMask m = 0;
  for (const char* n : names) {
    auto id = g.vertex_id(n);
    if (!id) throw std::runtime_error(std::string("unknown vertex in test set: ") + n);
    m |= bit(*id);
  }
  return m;
}

}  // namespace labelana::testsupport
