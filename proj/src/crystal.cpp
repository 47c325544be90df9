#include "skeleton/crystal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace skel {

namespace {

// Cells of t in row-word order.
std::vector<Cell> reading_cells(const Tableau& t) {
  std::vector<Cell> cells;
  for (int r = t.shape().length() - 1; r >= 0; --r) {
    for (int c = 0; c < t.shape()[r]; ++c) cells.push_back({r, c});
  }
  return cells;
}

struct Signature {
  std::vector<std::size_t> unmatched_lower;  // positions of unmatched i
  std::vector<std::size_t> unmatched_upper;  // positions of unmatched i+1
};

Signature bracket(const Word& w, int i) {
  Signature s;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == i + 1) {
      s.unmatched_upper.push_back(pos);
    } else if (w[pos] == i) {
      if (!s.unmatched_upper.empty()) {
        s.unmatched_upper.pop_back();
      } else {
        s.unmatched_lower.push_back(pos);
      }
    }
  }
  return s;
}

void require_color(int i) {
  if (i < 1) throw std::invalid_argument("crystal operator color must be >= 1");
}

}  // namespace

Word row_word(const Tableau& t) {
  if (t.empty()) throw std::invalid_argument("row_word: empty tableau");
  Word w;
  for (const Cell& c : reading_cells(t)) w.push_back(t.at(c));
  return w;
}

std::optional<Tableau> f_op(const Tableau& t, int i) {
  require_color(i);
  const auto cells = reading_cells(t);
  const Signature s = bracket(row_word(t), i);
  if (s.unmatched_lower.empty()) return std::nullopt;
  Tableau out = t;
  out.at(cells[s.unmatched_lower.back()]) = i + 1;
  return out;
}

std::optional<Tableau> e_op(const Tableau& t, int i) {
  require_color(i);
  const auto cells = reading_cells(t);
  const Signature s = bracket(row_word(t), i);
  if (s.unmatched_upper.empty()) return std::nullopt;
  Tableau out = t;
  out.at(cells[s.unmatched_upper.front()]) = i;
  return out;
}

int CrystalGraph::index_of(const Tableau& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  if (it == vertices.end() || *it != t) return -1;
  return static_cast<int>(it - vertices.begin());
}

CrystalGraph build_crystal(const Partition& lambda, int bound) {
  CrystalGraph g;
  g.lambda = lambda;
  g.bound = bound;
  if (lambda.empty() || bound < lambda.length()) return g;
  g.vertices = semistandard_tableaux(lambda, bound);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    for (int i = 1; i < bound; ++i) {
      if (auto u = f_op(g.vertices[static_cast<std::size_t>(v)], i)) {
        g.edges.push_back({v, i, g.index_of(*u)});
      }
    }
  }
  return g;
}

std::vector<QuasiCrystal> quasi_crystal_decomposition(const CrystalGraph& g) {
  std::map<Word, QuasiCrystal> classes;
  for (const Tableau& t : g.vertices) {
    Tableau rep = standardize(t);
    Word key = row_word(rep);
    auto [it, inserted] = classes.try_emplace(std::move(key));
    if (inserted) {
      it->second.descent = descent_composition(rep);
      it->second.representative = std::move(rep);
    }
    it->second.members.push_back(t);
  }
  std::vector<QuasiCrystal> out;
  out.reserve(classes.size());
  for (auto& [key, q] : classes) out.push_back(std::move(q));
  return out;
}

std::vector<QuasiCrystal> fundamental_system(const CrystalGraph& g, const Composition& alpha) {
  std::vector<QuasiCrystal> out;
  for (QuasiCrystal& q : quasi_crystal_decomposition(g)) {
    if (q.descent == alpha) out.push_back(std::move(q));
  }
  return out;
}

std::vector<Tableau> inner_crystal(const CrystalGraph& g) {
  std::vector<Tableau> out;
  for (QuasiCrystal& q : quasi_crystal_decomposition(g)) {
    if (q.descent.length() == g.lambda.length()) out.push_back(std::move(q.representative));
  }
  return out;
}

Tableau evacuation(const Tableau& t) {
  const Word w = row_word(t);
  const int n = t.size();
  Word star(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) star[j] = n + 1 - w[w.size() - 1 - j];
  for (int v : star) {
    if (v < 1) throw std::invalid_argument("evacuation: entries exceed |lambda|");
  }
  return rsk(star).insertion;
}

bool is_connected_class(const CrystalGraph& g, const QuasiCrystal& q) {
  if (q.members.empty()) return true;
  std::vector<int> ids;
  for (const Tableau& t : q.members) ids.push_back(g.index_of(t));
  std::sort(ids.begin(), ids.end());
  auto in_class = [&ids](int v) { return std::binary_search(ids.begin(), ids.end(), v); };
  std::map<int, std::vector<int>> adj;
  for (const CrystalEdge& e : g.edges) {
    if (in_class(e.from) && in_class(e.to)) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
  }
  std::vector<int> seen{ids.front()};
  std::queue<int> todo;
  todo.push(ids.front());
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int u : adj[v]) {
      if (std::find(seen.begin(), seen.end(), u) == seen.end()) {
        seen.push_back(u);
        todo.push(u);
      }
    }
  }
  return seen.size() == ids.size();
}

}  // namespace skel
