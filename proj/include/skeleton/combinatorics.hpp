#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace skel {

/// An ordered sequence of nonnegative integers. A composition is *strong*
/// when every part is positive; otherwise it is *weak*. The empty
/// composition is strong and has size 0.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // sum of parts
  bool empty() const { return parts_.empty(); }
  bool is_strong() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  Composition reversed() const;
  std::string to_string() const;  // "221" when every part < 10, else "2,2,1"

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// Part i (0-based), or 0 past the end.
  int part(int i) const { return i < length() ? (*this)[i] : 0; }

  Partition conjugate() const;
  Composition as_composition() const { return Composition(parts_); }
  std::string to_string() const { return as_composition().to_string(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A subset of {1, ..., n-1}, kept strictly sorted.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> members);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int a) const;
  std::string to_string() const;  // "{1, 3}"

  auto operator<=>(const IndexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

Composition flatten(const Composition& c);

/// Every strong composition refining `a` (including `a` itself), sorted.
std::vector<Composition> refinements(const Composition& a);

/// beta <= alpha in dominance order: every prefix sum of alpha is at least the
/// matching prefix sum of beta, shorter sequences padded with zeros.
bool dominance_leq(const Composition& beta, const Composition& alpha);

inline bool dominance_leq(const Partition& beta, const Partition& alpha) {
  return dominance_leq(beta.as_composition(), alpha.as_composition());
}

/// sum_i (i-1) alpha_i with 1-based i.
int depth(const Composition& alpha);
inline int depth(const Partition& lambda) { return depth(lambda.as_composition()); }

/// The raising operations R_1 alpha, ..., R_l alpha that are defined, in
/// order of i. Each result is covered by alpha and is one deeper.
std::vector<Composition> raising_covers(const Composition& alpha);

IndexSet comp_to_set(const Composition& alpha);
Composition set_to_comp(const IndexSet& set);

/// Cover relation of (Comp(n), <=) found by brute force over all pairs:
/// each entry (alpha, beta) has beta covered by alpha. Sorted.
std::vector<std::pair<Composition, Composition>> dominance_covers(int n);

int maj_of_set(const IndexSet& set);

/// Upper covers of A in the superboolean order on subsets of [n-1].
std::vector<IndexSet> superboolean_covers(const IndexSet& set);

struct ShapeStats {
  int m = 0;  // largest possible descent length, n - lambda_1 + 1
  Partition conjugate;
  bool is_hook = false;
  bool is_regular = false;
  Composition lambda_bar;  // descent composition of the anti-supersemistandard tableau
};

ShapeStats shape_stats(const Partition& lambda);

/// Largest descent length over ST(lambda).
int max_descent_length(const Partition& lambda);
Composition lambda_bar(const Partition& lambda);
bool is_hook(const Partition& lambda);
bool is_regular(const Partition& lambda);

// Enumerations. Partitions come in reverse lexicographic order
// (4, 31, 22, 211, 1111); compositions in lexicographic order of parts.
std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);
/// All weak compositions with exactly `parts` parts summing to `total`.
std::vector<Composition> weak_compositions(int total, int parts);
std::vector<IndexSet> subsets_of(int n);  // all subsets of [n-1]

long long binomial(int n, int k);

}  // namespace skel
