#include "labelana/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace labelana {

SpaceView original_view(const Space& space) {
  SpaceView v;
  v.space = &space;
  v.excluded = 0;
  v.universe = space.all_atoms();
  for (LetterId a = 0; a < space.graph().letter_count(); ++a) v.letters.push_back(a);
  return v;
}

SpaceView quotient_view(const Space& space, AtomMask core_atoms) {
  SpaceView v;
  v.space = &space;
  v.excluded = core_atoms;
  v.universe = space.all_atoms() & ~core_atoms;
  for (LetterId a = 0; a < space.graph().letter_count(); ++a) {
    if (space.initial_range(a) & v.universe) v.letters.push_back(a);
  }
  return v;
}

SubsetAutomaton::SubsetAutomaton(SpaceView view, const Config& config) : view_(view) {
  auto intern = [&](AtomMask m) -> int {
    auto it = id_.find(m);
    if (it != id_.end()) return it->second;
    if (static_cast<int>(states_.size()) >= config.max_states) {
      throw ResourceError("subset automaton exceeded the state cap of " +
                          std::to_string(config.max_states));
    }
    int nid = static_cast<int>(states_.size());
    id_.emplace(m, nid);
    states_.push_back(m);
    return nid;
  };

  // Discover all states reachable from the seeds.
  std::deque<AtomMask> work;
  auto seed = [&](AtomMask m) -> int {
    if (m == 0) return -1;
    bool fresh = id_.find(m) == id_.end();
    int sid = intern(m);
    if (fresh) work.push_back(m);
    return sid;
  };
  for (LetterId a : view_.letters) {
    int sid = seed(view_.initial(a));
    if (sid >= 0) initial_frontier_.push_back(sid);
  }
  {
    AtomMask rest = view_.universe;
    while (rest) {
      int atom = std::countr_zero(rest);
      rest &= rest - 1;
      atom_state_[atom] = seed(AtomMask{1} << atom);
    }
  }
  while (!work.empty()) {
    AtomMask m = work.front();
    work.pop_front();
    for (LetterId a : view_.letters) {
      AtomMask nxt = view_.range(m, a);
      if (nxt != 0 && id_.find(nxt) == id_.end()) {
        intern(nxt);
        work.push_back(nxt);
      }
    }
  }

  const size_t nl = view_.letters.size();
  trans_.assign(states_.size() * nl, -1);
  for (size_t s = 0; s < states_.size(); ++s) {
    for (size_t li = 0; li < nl; ++li) {
      AtomMask nxt = view_.range(states_[s], view_.letters[li]);
      trans_[s * nl + li] = (nxt == 0) ? -1 : id_.at(nxt);
    }
  }

  from_initial_.assign(states_.size(), 0);
  std::deque<int> bfs;
  for (int s : initial_frontier_) {
    if (!from_initial_[s]) {
      from_initial_[s] = 1;
      bfs.push_back(s);
    }
  }
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop_front();
    for (size_t li = 0; li < nl; ++li) {
      int t = next(s, static_cast<int>(li));
      if (t >= 0 && !from_initial_[t]) {
        from_initial_[t] = 1;
        bfs.push_back(t);
      }
    }
  }
}

int SubsetAutomaton::state_id(AtomMask m) const {
  auto it = id_.find(m);
  return it == id_.end() ? -1 : it->second;
}

std::uint64_t SubsetAutomaton::live_word_count(int state, int length, std::uint64_t cap) const {
  std::vector<std::uint64_t> cur(states_.size(), 0), nxt;
  cur[state] = 1;
  for (int step = 0; step < length; ++step) {
    nxt.assign(states_.size(), 0);
    for (size_t s = 0; s < states_.size(); ++s) {
      if (!cur[s]) continue;
      for (int li = 0; li < letter_count(); ++li) {
        int t = next(static_cast<int>(s), li);
        if (t >= 0) nxt[t] = std::min(cap, nxt[t] + cur[s]);
      }
    }
    cur.swap(nxt);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : cur) total = std::min(cap, total + c);
  return total;
}

// ---------------------------------------------------------------------------

bool words_commute(const Word& a, const Word& b) {
  Word ab = a, ba = b;
  ab.insert(ab.end(), b.begin(), b.end());
  ba.insert(ba.end(), a.begin(), a.end());
  return ab == ba;
}

int primitive_root_length(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

std::optional<Word> word_common_root(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  if (!words_commute(a, b)) return std::nullopt;
  // Commuting words are powers of a common primitive word whose length
  // divides gcd(|a|, |b|).
  int g = static_cast<int>(std::gcd(a.size(), b.size()));
  for (int d = 1; d <= g; ++d) {
    if (g % d) continue;
    bool ok = std::equal(a.begin(), a.begin() + d, b.begin());
    for (size_t i = d; i < a.size() && ok; ++i) ok = a[i] == a[i - d];
    for (size_t i = d; i < b.size() && ok; ++i) ok = b[i] == b[i - d];
    if (ok) return Word(a.begin(), a.begin() + d);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ForcedChain forced_chain(const SubsetAutomaton& aut, int atom) {
  ForcedChain c;
  c.start = AtomMask{1} << atom;
  int cur = aut.atom_state(atom);
  std::map<int, int> first_seen;
  first_seen[cur] = 0;
  c.states.push_back(aut.state(cur));

  for (int step = 0;; ++step) {
    std::vector<int> live;
    for (int li = 0; li < aut.letter_count(); ++li) {
      if (aut.next(cur, li) >= 0) live.push_back(li);
    }
    if (live.empty()) {
      throw LogicError("forced chain hit a state with no live letter");
    }
    if (live.size() >= 2) {
      c.branch_index = step;
      for (int li : live) c.branch_letters.push_back(aut.letter(li));
      return c;
    }
    int li = live[0];
    c.letters.push_back(aut.letter(li));
    cur = aut.next(cur, li);
    c.states.push_back(aut.state(cur));
    auto it = first_seen.find(cur);
    if (it != first_seen.end()) {
      c.preperiod = it->second;
      c.period = step + 1 - it->second;
      break;
    }
    first_seen[cur] = step + 1;
  }

  // The forced word is eventually periodic with the cycle's period; it is
  // purely periodic iff it already repeats at that period from index 0.
  c.purely_periodic = true;
  for (int i = 0; i < c.preperiod && c.purely_periodic; ++i) {
    c.purely_periodic = c.letters[i] == c.letters[i + c.period];
  }
  if (c.purely_periodic) {
    int minimal = c.period;
    for (int q = 1; q < c.period; ++q) {
      if (c.period % q) continue;
      bool ok = true;
      for (int t = c.preperiod; t < c.preperiod + c.period && ok; ++t) {
        int u = t + q;
        int u_idx =
            (u < c.preperiod + c.period) ? u : c.preperiod + (u - c.preperiod) % c.period;
        ok = c.letters[t] == c.letters[u_idx];
      }
      if (ok) {
        minimal = q;
        break;
      }
    }
    c.period_word.assign(c.letters.begin(), c.letters.begin() + minimal);
  }
  return c;
}

namespace {

// Forced prefix of the given length from a state; false on a branch.
bool forced_prefix(const SubsetAutomaton& aut, int state, int length, Word& out) {
  int cur = state;
  out.clear();
  for (int i = 0; i < length; ++i) {
    int chosen = -1;
    for (int li = 0; li < aut.letter_count(); ++li) {
      if (aut.next(cur, li) >= 0) {
        if (chosen >= 0) return false;
        chosen = li;
      }
    }
    if (chosen < 0) return false;
    out.push_back(aut.letter(chosen));
    cur = aut.next(cur, chosen);
  }
  return true;
}

Word word_power(const Word& beta, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

}  // namespace

DisagreeableResult is_disagreeable(const SubsetAutomaton& aut) {
  DisagreeableResult r;
  for (int atom : aut.view().atom_ids()) {
    ForcedChain chain = forced_chain(aut, atom);
    bool fails = !chain.branch_index && chain.purely_periodic;
    if (fails) {
      NonDisagreeableWitness w{chain.start, chain.period_word};
      // Re-verify for small powers: the only live word of length |beta|*n
      // from the atom is beta^n.
      int st = aut.atom_state(atom);
      for (int n = 1; n <= 4; ++n) {
        int len = static_cast<int>(w.beta.size()) * n;
        Word prefix;
        if (aut.live_word_count(st, len) != 1 || !forced_prefix(aut, st, len, prefix) ||
            prefix != word_power(w.beta, n)) {
          throw LogicError("non-disagreeable witness failed its brute-force re-check");
        }
      }
      r.disagreeable = false;
      r.witnesses.push_back(std::move(w));
    }
    r.chains.push_back(std::move(chain));
  }
  return r;
}

ConditionLEResult condition_L_E(const SubsetAutomaton& aut) {
  ConditionLEResult r;
  for (int atom : aut.view().atom_ids()) {
    int start = aut.atom_state(atom);
    int cur = start;
    Word word;
    std::set<int> seen{start};
    for (;;) {
      int chosen = -1;
      bool branch = false;
      for (int li = 0; li < aut.letter_count(); ++li) {
        if (aut.next(cur, li) >= 0) {
          if (chosen >= 0) {
            branch = true;
            break;
          }
          chosen = li;
        }
      }
      if (branch) break;  // a same-length deviation exists from here on
      if (chosen < 0) throw LogicError("state with no live letter in condition check");
      word.push_back(aut.letter(chosen));
      cur = aut.next(cur, chosen);
      if (cur == start) {
        r.holds = false;
        r.failures.push_back({AtomMask{1} << atom, word});
        break;
      }
      if (!seen.insert(cur).second) break;  // closed a cycle elsewhere
    }
  }
  return r;
}

namespace {

// Mask-level successor map restricted to sets reachable from `base`.
struct MaskGraph {
  std::vector<AtomMask> nodes;
  std::map<AtomMask, int> id;
  std::vector<int> trans;  // [node * letters + li]
  int letters = 0;
};

MaskGraph reachable_masks(const SpaceView& view, AtomMask base, int cap) {
  MaskGraph g;
  g.letters = static_cast<int>(view.letters.size());
  std::deque<AtomMask> work{base};
  g.id.emplace(base, 0);
  g.nodes.push_back(base);
  while (!work.empty()) {
    AtomMask m = work.front();
    work.pop_front();
    for (LetterId a : view.letters) {
      AtomMask nxt = view.range(m, a);
      if (nxt == 0) continue;
      if (g.id.find(nxt) == g.id.end()) {
        if (static_cast<int>(g.nodes.size()) >= cap) {
          throw ResourceError("mask reachability exceeded the state cap");
        }
        g.id.emplace(nxt, static_cast<int>(g.nodes.size()));
        g.nodes.push_back(nxt);
        work.push_back(nxt);
      }
    }
  }
  g.trans.assign(g.nodes.size() * g.letters, -1);
  for (size_t s = 0; s < g.nodes.size(); ++s) {
    for (int li = 0; li < g.letters; ++li) {
      AtomMask nxt = view.range(g.nodes[s], view.letters[li]);
      if (nxt != 0) g.trans[s * g.letters + li] = g.id.at(nxt);
    }
  }
  return g;
}

// Lexicographically smallest live continuation of the given length.
Word lex_live_extension(const SpaceView& view, AtomMask state, int length) {
  Word out;
  AtomMask cur = state;
  for (int i = 0; i < length; ++i) {
    for (LetterId a : view.letters) {
      AtomMask t = view.range(cur, a);
      if (t != 0) {
        out.push_back(a);
        cur = t;
        break;
      }
    }
  }
  return out;
}

}  // namespace

LoopSearchResult find_loops(const SubsetAutomaton& aut, AtomMask base, const Config& config) {
  LoopSearchResult result;
  const SpaceView& view = aut.view();
  if (base == 0 || (base & ~view.universe)) return result;

  MaskGraph g = reachable_masks(view, base, config.max_states);

  // States from which a superset of the base stays reachable.
  std::vector<char> viable(g.nodes.size(), 0);
  {
    std::vector<std::vector<int>> preds(g.nodes.size());
    std::deque<int> q;
    for (size_t s = 0; s < g.nodes.size(); ++s) {
      if ((g.nodes[s] & base) == base) {
        viable[s] = 1;
        q.push_back(static_cast<int>(s));
      }
      for (int li = 0; li < g.letters; ++li) {
        int t = g.trans[s * g.letters + li];
        if (t >= 0) preds[t].push_back(static_cast<int>(s));
      }
    }
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int p : preds[s]) {
        if (!viable[p]) {
          viable[p] = 1;
          q.push_back(p);
        }
      }
    }
  }

  // Shortest loop length.
  int shortest = -1;
  {
    std::vector<int> dist(g.nodes.size(), -1);
    dist[0] = 0;
    std::deque<int> q{0};
    while (!q.empty() && shortest < 0) {
      int s = q.front();
      q.pop_front();
      for (int li = 0; li < g.letters && shortest < 0; ++li) {
        int t = g.trans[s * g.letters + li];
        if (t < 0) continue;
        if ((g.nodes[t] & base) == base) shortest = dist[s] + 1;
        if (dist[t] < 0) {
          dist[t] = dist[s] + 1;
          q.push_back(t);
        }
      }
    }
  }
  if (shortest < 0) return result;

  result.length_bound = static_cast<std::uint64_t>(g.nodes.size()) *
                        static_cast<std::uint64_t>(shortest + 1) *
                        static_cast<std::uint64_t>(std::max(1, config.word_bound_multiplier));

  // Word-level BFS over loop-viable states, shortest-then-lex.
  struct Item {
    int state;
    Word word;
  };
  std::deque<Item> queue{{0, {}}};
  const size_t queue_cap = size_t{1} << 16;
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    if (it.word.size() >= result.length_bound) {
      result.truncated = true;
      break;
    }
    for (int li = 0; li < g.letters; ++li) {
      int t = g.trans[static_cast<size_t>(it.state) * g.letters + li];
      if (t < 0 || !viable[t]) continue;
      Word w = it.word;
      w.push_back(view.letters[li]);
      if ((g.nodes[t] & base) == base) {
        LoopWitness lw;
        lw.base = base;
        lw.word = w;
        lw.is_cycle = true;
        AtomMask rest = base;
        while (rest && lw.is_cycle) {
          int atom = std::countr_zero(rest);
          rest &= rest - 1;
          lw.is_cycle = view.word_range(AtomMask{1} << atom, w) == (AtomMask{1} << atom);
        }
        if (g.nodes[t] != base) {
          LoopExit e;
          e.proper_growth = true;  // type (ii): base strictly grows
          lw.exits.push_back(e);
        }
        // type (i): earliest position with a deviating live letter
        {
          AtomMask cur = base;
          for (size_t pos = 0; pos < w.size(); ++pos) {
            bool made = false;
            for (LetterId b : view.letters) {
              if (b == w[pos]) continue;
              AtomMask u = view.range(cur, b);
              if (u == 0) continue;
              LoopExit e;
              e.same_length_word = true;
              e.word.assign(w.begin(), w.begin() + pos);
              e.word.push_back(b);
              Word tail = lex_live_extension(view, u, static_cast<int>(w.size() - pos - 1));
              e.word.insert(e.word.end(), tail.begin(), tail.end());
              lw.exits.push_back(std::move(e));
              made = true;
              break;
            }
            if (made) break;
            cur = view.range(cur, w[pos]);
          }
        }
        result.witnesses.push_back(std::move(lw));
        if (static_cast<int>(result.witnesses.size()) >= config.max_loop_witnesses) {
          result.truncated = true;
          return result;
        }
      }
      if (queue.size() >= queue_cap) {
        result.truncated = true;
        return result;
      }
      queue.push_back({t, std::move(w)});
    }
  }
  return result;
}

std::optional<CycleWitness> find_cycle(const SubsetAutomaton& aut) {
  for (int atom : aut.view().atom_ids()) {
    const AtomMask target = AtomMask{1} << atom;
    int start = aut.atom_state(atom);
    std::vector<int> parent(aut.state_count(), -1), via(aut.state_count(), -1);
    std::vector<char> seen(aut.state_count(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(s, li);
        if (t < 0) continue;
        if (aut.state(t) == target) {
          Word w{aut.letter(li)};
          for (int u = s; u != start; u = parent[u]) w.push_back(aut.letter(via[u]));
          std::reverse(w.begin(), w.end());
          return CycleWitness{target, std::move(w)};
        }
        if (!seen[t]) {
          seen[t] = 1;
          parent[t] = s;
          via[t] = li;
          q.push_back(t);
        }
      }
    }
  }
  return std::nullopt;
}

ConnectsResult connects_to_loop(const SubsetAutomaton& aut, const Config& config) {
  ConnectsResult r;
  const auto atom_ids = aut.view().atom_ids();

  // Atoms admitting a loop, with their shortest loop word.
  std::map<int, Word> loop_atoms;
  for (int atom : atom_ids) {
    const AtomMask c = AtomMask{1} << atom;
    int start = aut.atom_state(atom);
    std::vector<int> parent(aut.state_count(), -1), via(aut.state_count(), -1);
    std::vector<char> seen(aut.state_count(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    bool done = false;
    while (!q.empty() && !done) {
      int s = q.front();
      q.pop_front();
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(s, li);
        if (t < 0) continue;
        if ((aut.state(t) & c) == c) {
          Word w{aut.letter(li)};
          for (int u = s; u != start; u = parent[u]) w.push_back(aut.letter(via[u]));
          std::reverse(w.begin(), w.end());
          loop_atoms.emplace(atom, std::move(w));
          done = true;
          break;
        }
        if (!seen[t]) {
          seen[t] = 1;
          parent[t] = s;
          via[t] = li;
          q.push_back(t);
        }
      }
    }
  }

  for (int atom : atom_ids) {
    ConnectsCertificate cert;
    cert.atom = AtomMask{1} << atom;
    if (config.allow_epsilon_cover && loop_atoms.count(atom)) {
      cert.connects = true;
      cert.via_epsilon = true;
      cert.loop_atom = cert.atom;
      cert.loop_word = loop_atoms.at(atom);
      r.per_atom.push_back(std::move(cert));
      continue;
    }
    int start = aut.atom_state(atom);
    std::vector<int> parent(aut.state_count(), -1), via(aut.state_count(), -1);
    std::vector<char> seen(aut.state_count(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty() && !cert.connects) {
      int s = q.front();
      q.pop_front();
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(s, li);
        if (t < 0) continue;
        AtomMask m = aut.state(t);
        int hit = -1;
        for (auto& [c, w] : loop_atoms) {
          if (m & (AtomMask{1} << c)) {
            hit = c;
            break;
          }
        }
        if (hit >= 0) {
          cert.connects = true;
          cert.loop_atom = AtomMask{1} << hit;
          cert.loop_word = loop_atoms.at(hit);
          Word w{aut.letter(li)};
          for (int u = s; u != start; u = parent[u]) w.push_back(aut.letter(via[u]));
          std::reverse(w.begin(), w.end());
          cert.cover_word = std::move(w);
          break;
        }
        if (!seen[t]) {
          seen[t] = 1;
          parent[t] = s;
          via[t] = li;
          q.push_back(t);
        }
      }
    }
    r.all_connect = r.all_connect && cert.connects;
    r.per_atom.push_back(std::move(cert));
  }
  return r;
}

CofinalResult strongly_cofinal(const SubsetAutomaton& aut) {
  CofinalResult r;
  for (int atom : aut.view().atom_ids()) {
    // Good(b): union of every range set reachable from the atom.
    AtomMask good = 0;
    {
      std::vector<char> seen(aut.state_count(), 0);
      std::deque<int> q;
      int start = aut.atom_state(atom);
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(start, li);
        if (t >= 0 && !seen[t]) {
          seen[t] = 1;
          q.push_back(t);
        }
      }
      while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        good |= aut.state(s);
        for (int li = 0; li < aut.letter_count(); ++li) {
          int t = aut.next(s, li);
          if (t >= 0 && !seen[t]) {
            seen[t] = 1;
            q.push_back(t);
          }
        }
      }
    }

    auto bad = [&](int s) { return (aut.state(s) & ~good) != 0; };

    // A violating infinite word keeps every prefix range undominated, so we
    // need a cycle of undominated states reachable from an undominated
    // initial range through undominated states only.
    std::vector<int> color(aut.state_count(), 0);
    std::vector<int> parent(aut.state_count(), -1), via(aut.state_count(), -1);
    std::optional<BadCycleWitness> witness;

    auto dfs = [&](int root, LetterId root_letter) {
      struct Frame {
        int state;
        int li;
      };
      std::vector<Frame> stack{{root, 0}};
      color[root] = 1;
      while (!stack.empty() && !witness) {
        Frame& f = stack.back();
        if (f.li >= aut.letter_count()) {
          color[f.state] = 2;
          stack.pop_back();
          continue;
        }
        int li = f.li++;
        int t = aut.next(f.state, li);
        if (t < 0 || !bad(t)) continue;
        if (color[t] == 1) {
          Word cycle{aut.letter(li)};
          for (int u = f.state; u != t; u = parent[u]) cycle.push_back(aut.letter(via[u]));
          std::reverse(cycle.begin(), cycle.end());
          Word pre{root_letter};
          {
            std::vector<LetterId> path;
            for (int v = t; v != root; v = parent[v]) path.push_back(aut.letter(via[v]));
            std::reverse(path.begin(), path.end());
            pre.insert(pre.end(), path.begin(), path.end());
          }
          witness = BadCycleWitness{AtomMask{1} << atom, std::move(pre), std::move(cycle)};
          break;
        }
        if (color[t] == 0) {
          color[t] = 1;
          parent[t] = f.state;
          via[t] = li;
          stack.push_back({t, 0});
        }
      }
    };

    for (int li = 0; li < aut.letter_count() && !witness; ++li) {
      AtomMask init = aut.view().initial(aut.letter(li));
      if (init == 0) continue;
      int s = aut.state_id(init);
      if (s < 0 || !bad(s) || color[s] != 0) continue;
      dfs(s, aut.letter(li));
    }
    if (witness) {
      r.holds = false;
      r.witness = std::move(witness);
      return r;
    }
  }
  return r;
}

NonPowerLoops two_nonpower_loops(const SubsetAutomaton& aut, int atom, const Config& config) {
  (void)config;
  NonPowerLoops r;
  const AtomMask c = AtomMask{1} << atom;
  int start = aut.atom_state(atom);

  // Shortest loop word at the atom.
  {
    std::vector<int> parent(aut.state_count(), -1), via(aut.state_count(), -1);
    std::vector<char> seen(aut.state_count(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    bool done = false;
    while (!q.empty() && !done) {
      int s = q.front();
      q.pop_front();
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(s, li);
        if (t < 0) continue;
        if ((aut.state(t) & c) == c) {
          r.alpha = {aut.letter(li)};
          for (int u = s; u != start; u = parent[u]) r.alpha.push_back(aut.letter(via[u]));
          std::reverse(r.alpha.begin(), r.alpha.end());
          done = true;
          break;
        }
        if (!seen[t]) {
          seen[t] = 1;
          parent[t] = s;
          via[t] = li;
          q.push_back(t);
        }
      }
    }
    if (!done) return r;
  }
  r.has_loops = true;

  // Loop words not inside delta^+ (delta = primitive root of alpha) via a
  // product with the |delta|-phase matcher; exhaustive, no length bound.
  const int d = primitive_root_length(r.alpha);
  Word delta(r.alpha.begin(), r.alpha.begin() + d);
  const int dead = d;
  const int phases = d + 1;

  struct PState {
    int parent = -1;
    int via = -1;
    bool seen = false;
  };
  std::vector<PState> info(static_cast<size_t>(aut.state_count()) * phases);
  auto idx = [&](int s, int p) { return static_cast<size_t>(s) * phases + p; };
  std::deque<std::pair<int, int>> q{{start, 0}};
  info[idx(start, 0)].seen = true;
  while (!q.empty()) {
    auto [s, p] = q.front();
    q.pop_front();
    for (int li = 0; li < aut.letter_count(); ++li) {
      int t = aut.next(s, li);
      if (t < 0) continue;
      int np = (p != dead && aut.letter(li) == delta[p]) ? (p + 1) % d : dead;
      auto& slot = info[idx(t, np)];
      if (slot.seen) continue;
      slot.seen = true;
      slot.parent = static_cast<int>(idx(s, p));
      slot.via = li;
      if ((aut.state(t) & c) == c && np != 0) {
        Word w;
        for (size_t u = idx(t, np); info[u].via >= 0; u = static_cast<size_t>(info[u].parent)) {
          w.push_back(aut.letter(info[u].via));
        }
        std::reverse(w.begin(), w.end());
        r.beta = std::move(w);
        r.found = true;
        return r;
      }
      q.push_back({t, np});
    }
  }
  return r;
}

StarReport condition_star_view(const SubsetAutomaton& aut) {
  StarReport r;
  r.every_nonempty_contains_minimal = aut.view().universe != 0;
  for (int s = 0; s < aut.state_count(); ++s) {
    ++r.states_checked;
    if (aut.state(s) & ~aut.view().universe) {
      r.ranges_are_minimal_unions = false;
    }
  }
  r.holds = r.every_nonempty_contains_minimal && r.ranges_are_minimal_unions;
  return r;
}

}  // namespace labelana
