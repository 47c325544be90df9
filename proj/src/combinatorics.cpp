#include "skeleton/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skel {

namespace {

std::vector<int> prefix_sums(const Composition& c) {
  std::vector<int> sums(c.parts().size());
  std::partial_sum(c.parts().begin(), c.parts().end(), sums.begin());
  return sums;
}

std::string join_parts(const std::vector<int>& parts) {
  if (parts.empty()) return "()";
  bool compact = std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0 && p < 10; });
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && !compact) os << ',';
    os << parts[i];
  }
  return os.str();
}

void require_strong(const Composition& c, const char* what) {
  if (!c.is_strong()) throw std::invalid_argument(std::string(what) + ": composition must be strong");
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_strong() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Composition Composition::reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

std::string Composition::to_string() const { return join_parts(parts_); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition();
  for (int c = 1; c <= parts_.front(); ++c) {
    int count = 0;
    for (int p : parts_) count += (p >= c) ? 1 : 0;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

IndexSet::IndexSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("index set has repeated members");
  }
  for (int a : members_) {
    if (a < 1 || a > n - 1) throw std::invalid_argument("index set member outside [n-1]");
  }
}

bool IndexSet::contains(int a) const { return std::binary_search(members_.begin(), members_.end(), a); }

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) os << ", ";
    os << members_[i];
  }
  os << '}';
  return os.str();
}

Composition flatten(const Composition& c) {
  std::vector<int> out;
  std::copy_if(c.parts().begin(), c.parts().end(), std::back_inserter(out), [](int p) { return p != 0; });
  return Composition(std::move(out));
}

std::vector<Composition> refinements(const Composition& a) {
  require_strong(a, "refinements");
  // Each part splits independently into one of its compositions.
  std::vector<std::vector<int>> acc{{}};
  for (int part : a.parts()) {
    std::vector<std::vector<int>> next;
    for (const Composition& piece : compositions_of(part)) {
      for (const auto& prefix : acc) {
        auto v = prefix;
        v.insert(v.end(), piece.parts().begin(), piece.parts().end());
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool dominance_leq(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) throw std::invalid_argument("dominance_leq: sizes differ");
  const auto sb = prefix_sums(beta);
  const auto sa = prefix_sums(alpha);
  const std::size_t len = std::max(sa.size(), sb.size());
  const int n = alpha.size();
  for (std::size_t i = 0; i < len; ++i) {
    int a = i < sa.size() ? sa[i] : n;
    int b = i < sb.size() ? sb[i] : n;
    if (a < b) return false;
  }
  return true;
}

int depth(const Composition& alpha) {
  int d = 0;
  for (int i = 0; i < alpha.length(); ++i) d += i * alpha[i];
  return d;
}

std::vector<Composition> raising_covers(const Composition& alpha) {
  require_strong(alpha, "raising_covers");
  std::vector<Composition> out;
  const int l = alpha.length();
  for (int i = 0; i < l; ++i) {
    if (alpha[i] < 2) continue;
    std::vector<int> v = alpha.parts();
    v[static_cast<std::size_t>(i)] -= 1;
    if (i + 1 < l) {
      v[static_cast<std::size_t>(i) + 1] += 1;
    } else {
      v.push_back(1);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<std::pair<Composition, Composition>> dominance_covers(int n) {
  const auto comps = compositions_of(n);
  const std::size_t k = comps.size();
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));  // below[a][b]: b < a strictly
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) below[a][b] = a != b && dominance_leq(comps[b], comps[a]);
  }
  std::vector<std::pair<Composition, Composition>> out;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!below[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < k && cover; ++c) cover = !(below[a][c] && below[c][b]);
      if (cover) out.emplace_back(comps[a], comps[b]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet comp_to_set(const Composition& alpha) {
  require_strong(alpha, "comp_to_set");
  auto sums = prefix_sums(alpha);
  if (!sums.empty()) sums.pop_back();
  return IndexSet(alpha.size(), std::move(sums));
}

Composition set_to_comp(const IndexSet& set) {
  std::vector<int> parts;
  int prev = 0;
  for (int a : set.members()) {
    parts.push_back(a - prev);
    prev = a;
  }
  if (set.n() > 0) parts.push_back(set.n() - prev);
  return Composition(std::move(parts));
}

int maj_of_set(const IndexSet& set) {
  return std::accumulate(set.members().begin(), set.members().end(), 0);
}

std::vector<IndexSet> superboolean_covers(const IndexSet& set) {
  std::vector<IndexSet> out;
  const int n = set.n();
  if (!set.contains(1) && n >= 2) {
    auto v = set.members();
    v.push_back(1);
    out.emplace_back(n, std::move(v));
  }
  for (int a : set.members()) {
    if (a + 1 > n - 1 || set.contains(a + 1)) continue;
    auto v = set.members();
    std::replace(v.begin(), v.end(), a, a + 1);
    out.emplace_back(n, std::move(v));
  }
  return out;
}

int max_descent_length(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("max_descent_length: empty partition");
  return lambda.size() - lambda[0] + 1;
}

bool is_hook(const Partition& lambda) { return !lambda.empty() && lambda.part(1) <= 1; }

bool is_regular(const Partition& lambda) {
  if (lambda.length() < 2) return true;
  const int c = lambda[0];
  if (c < 2) return true;
  return !std::all_of(lambda.parts().begin(), lambda.parts().end(), [c](int p) { return p == c; });
}

Composition lambda_bar(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("lambda_bar: empty partition");
  const Partition conjugate = lambda.conjugate();
  const auto& conj = conjugate.parts();
  // conj = (c_1, ..., c_l, 1^L) with c_l >= 2.
  int l = 0;
  while (l < static_cast<int>(conj.size()) && conj[static_cast<std::size_t>(l)] >= 2) ++l;
  const int tail = static_cast<int>(conj.size()) - l;
  if (l == 0) return lambda.as_composition();  // one row
  std::vector<int> out(static_cast<std::size_t>(conj[0] - 1), 1);
  for (int j = 1; j < l; ++j) {
    out.push_back(2);
    out.insert(out.end(), static_cast<std::size_t>(conj[static_cast<std::size_t>(j)] - 2), 1);
  }
  out.push_back(tail + 1);
  return Composition(std::move(out));
}

ShapeStats shape_stats(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("shape_stats: empty partition");
  ShapeStats s;
  s.m = max_descent_length(lambda);
  s.conjugate = lambda.conjugate();
  s.is_hook = is_hook(lambda);
  s.is_regular = is_regular(lambda);
  s.lambda_bar = lambda_bar(lambda);
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    cur.push_back(p);
    compositions_rec(remaining - p, cur, out);
    cur.pop_back();
  }
}

void weak_rec(int remaining, int slots, std::vector<int>& cur, std::vector<Composition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int p = 0; p <= remaining; ++p) {
    cur.push_back(p);
    weak_rec(remaining - p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative size");
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(n, cur, out);
  return out;
}

std::vector<Composition> weak_compositions(int total, int parts) {
  std::vector<Composition> out;
  std::vector<int> cur;
  if (total < 0 || parts < 0) return out;
  weak_rec(total, parts, cur, out);
  return out;
}

std::vector<IndexSet> subsets_of(int n) {
  std::vector<IndexSet> out;
  const int k = std::max(n - 1, 0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> members;
    for (int a = 1; a <= k; ++a) {
      if (mask & (1u << (a - 1))) members.push_back(a);
    }
    out.emplace_back(n, std::move(members));
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace skel
