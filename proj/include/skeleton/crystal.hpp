#pragma once

#include <optional>
#include <vector>

#include "skeleton/combinatorics.hpp"
#include "skeleton/rsk.hpp"
#include "skeleton/tableau.hpp"

namespace skel {

/// Reading word: rows from bottom to top, each left to right.
Word row_word(const Tableau& t);

/// Kashiwara operators on SSYT via the signature rule on row_word(t): each
/// i+1 opens and each i closes a bracket. f_i raises the rightmost unmatched
/// i, e_i lowers the leftmost unmatched i+1. Empty when no such letter exists.
std::optional<Tableau> f_op(const Tableau& t, int i);
std::optional<Tableau> e_op(const Tableau& t, int i);

struct CrystalEdge {
  int from = 0;
  int color = 0;
  int to = 0;
  auto operator<=>(const CrystalEdge&) const = default;
};

/// The bounded crystal B_N(lambda) on SSYT(lambda) with entries <= N.
struct CrystalGraph {
  Partition lambda;
  int bound = 0;
  std::vector<Tableau> vertices;  // row-reading lexicographic order
  std::vector<CrystalEdge> edges;  // sorted by (from, color)

  int index_of(const Tableau& t) const;  // -1 when absent
};

CrystalGraph build_crystal(const Partition& lambda, int bound);

/// Class of SSYT sharing a standardization.
struct QuasiCrystal {
  Tableau representative;  // the common standardization (an SYT)
  std::vector<Tableau> members;
  Composition descent;
};

/// Classes ordered by the representative's row word, lexicographically.
std::vector<QuasiCrystal> quasi_crystal_decomposition(const CrystalGraph& g);

std::vector<QuasiCrystal> fundamental_system(const CrystalGraph& g, const Composition& alpha);

/// Skeleton representatives with the minimal descent length l(lambda).
std::vector<Tableau> inner_crystal(const CrystalGraph& g);

/// Schutzenberger involution: P of the reverse-complement of the row word,
/// complementing with n = |lambda|.
Tableau evacuation(const Tableau& t);

/// True iff the members of the class induce a connected subgraph of g
/// (ignoring edge direction).
bool is_connected_class(const CrystalGraph& g, const QuasiCrystal& q);

}  // namespace skel
