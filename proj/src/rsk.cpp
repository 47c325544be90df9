#include "skeleton/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skel {

Permutation::Permutation(Word one_line) : w_(std::move(one_line)) {
  if (!is_permutation(w_)) throw std::invalid_argument("not a permutation");
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  Word inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const { return inverse() == *this; }

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i > 0 && !compact) os << ',';
    os << w_[i];
  }
  return os.str();
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  Word w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

RskPair rsk(const Word& w) {
  std::vector<Row> p;
  std::vector<Row> q;
  int step = 0;
  for (int letter : w) {
    if (letter < 1) throw std::invalid_argument("rsk: letters must be positive");
    ++step;
    int x = letter;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(step);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Word rsk_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("rsk_inverse: shapes differ");
  if (!q.is_standard()) throw std::invalid_argument("rsk_inverse: recording tableau is not standard");
  if (!p.is_semistandard()) throw std::invalid_argument("rsk_inverse: insertion tableau is not semistandard");
  std::vector<Row> prow = p.rows();
  std::vector<Row> qrow = q.rows();
  const int n = p.size();
  Word w(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::size_t r = 0;
    while (qrow[r].back() != k) ++r;  // k is the largest label, so it ends its row
    qrow[r].pop_back();
    int x = prow[r].back();
    prow[r].pop_back();
    if (prow[r].empty()) {
      prow.pop_back();
      qrow.pop_back();
    }
    while (r > 0) {
      --r;
      // Rightmost entry strictly less than x.
      auto it = std::lower_bound(prow[r].begin(), prow[r].end(), x);
      --it;
      std::swap(x, *it);
    }
    w[static_cast<std::size_t>(k) - 1] = x;
  }
  return w;
}

IndexSet left_descents(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i) {
    if (inv(i + 1) < inv(i)) d.push_back(i);
  }
  return IndexSet(w.size(), std::move(d));
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) count += w(i) > w(j) ? 1 : 0;
  }
  return count;
}

int charge(const Permutation& w) {
  const IndexSet d = left_descents(w);
  int label = 0;
  int total = 0;
  for (int i = 2; i <= w.size(); ++i) {
    if (d.contains(i - 1)) ++label;
    total += label;
  }
  return total;
}

PermutationStats perm_stats(const Permutation& w) {
  PermutationStats s;
  const RskPair pq = rsk(w);
  s.descent_composition = descent_composition(pq.recording);
  s.left_descents = left_descents(w);
  s.maj = maj_of_set(comp_to_set(s.descent_composition));
  s.depth = depth(s.descent_composition);
  s.inversions = inversions(w);
  s.charge = charge(w);
  s.is_involution = w.is_involution();
  return s;
}

bool symmetry_check(int n) {
  for (const Permutation& w : permutations_of(n)) {
    const RskPair a = rsk(w);
    const RskPair b = rsk(w.inverse());
    if (a.insertion != b.recording || a.recording != b.insertion) return false;
  }
  return true;
}

}  // namespace skel
