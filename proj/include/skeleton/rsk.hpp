#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skeleton/combinatorics.hpp"
#include "skeleton/tableau.hpp"

namespace skel {

/// A finite sequence of positive integers.
using Word = std::vector<int>;

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  const Word& word() const { return w_; }
  /// w(i) for 1-based i.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i) - 1]; }
  Permutation inverse() const;
  bool is_involution() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  Word w_;
};

bool is_permutation(const Word& w);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> permutations_of(int n);

struct RskPair {
  Tableau insertion;  // P
  Tableau recording;  // Q
};

/// Schensted row insertion: each letter bumps the leftmost entry strictly
/// greater than it.
RskPair rsk(const Word& w);
inline RskPair rsk(const Permutation& w) { return rsk(w.word()); }

/// Inverse of rsk for P semistandard and Q standard of the same shape.
Word rsk_inverse(const Tableau& p, const Tableau& q);

struct PermutationStats {
  Composition descent_composition;  // des Q(w)
  IndexSet left_descents;           // D_L(w) = {i : i+1 left of i}
  int maj = 0;                      // maj Q(w)
  int depth = 0;                    // dep Q(w)
  int inversions = 0;
  int charge = 0;
  bool is_involution = false;
};

/// `charge` follows the inductive left-descent labeling c_1 = 0,
/// c_i = c_{i-1} + [i-1 in D_L(w)]. Some authors call this cocharge.
PermutationStats perm_stats(const Permutation& w);

int inversions(const Permutation& w);
int charge(const Permutation& w);
IndexSet left_descents(const Permutation& w);

/// True iff P(w^-1) = Q(w) and Q(w^-1) = P(w) for every w in S_n.
bool symmetry_check(int n);

}  // namespace skel
