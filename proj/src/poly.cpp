#include "skeleton/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace skel {

namespace {

int effective_length(const std::vector<int>& e) {
  int len = static_cast<int>(e.size());
  while (len > 0 && e[static_cast<std::size_t>(len) - 1] == 0) --len;
  return len;
}

bool all_zero(const std::vector<int>& e) {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

// Shorter effective length sorts first, then larger exponent vectors.
int display_compare(const std::vector<int>& a, const std::vector<int>& b) {
  const int la = effective_length(a);
  const int lb = effective_length(b);
  if (la != lb) return la < lb ? -1 : 1;
  for (int i = 0; i < la; ++i) {
    const int va = a[static_cast<std::size_t>(i)];
    const int vb = b[static_cast<std::size_t>(i)];
    if (va != vb) return va > vb ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial x_monomial(std::vector<int> exponents) {
  Monomial m;
  m.x = std::move(exponents);
  return m;
}

MultiPoly::MultiPoly(int x_arity, int y_arity) : x_arity_(x_arity), y_arity_(y_arity) {
  if (x_arity < 0 || y_arity < 0) throw std::invalid_argument("MultiPoly: negative arity");
}

MultiPoly MultiPoly::constant(const Integer& c) {
  MultiPoly g;
  g.add_term(Monomial{}, c);
  return g;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& c) {
  MultiPoly g(static_cast<int>(m.x.size()), static_cast<int>(m.y.size()));
  g.add_term(m, c);
  return g;
}

void MultiPoly::pad(Monomial& m) const {
  if (static_cast<int>(m.x.size()) > x_arity_ || static_cast<int>(m.y.size()) > y_arity_) {
    throw std::logic_error("MultiPoly: monomial exceeds arity");
  }
  m.x.resize(static_cast<std::size_t>(x_arity_), 0);
  m.y.resize(static_cast<std::size_t>(y_arity_), 0);
}

void MultiPoly::add_term(Monomial m, const Integer& c) {
  if (c == 0) return;
  const int need_x = std::max(x_arity_, effective_length(m.x));
  const int need_y = std::max(y_arity_, effective_length(m.y));
  if (need_x != x_arity_ || need_y != y_arity_) *this = with_arity(need_x, need_y);
  m.x.resize(static_cast<std::size_t>(effective_length(m.x)));
  m.y.resize(static_cast<std::size_t>(effective_length(m.y)));
  pad(m);
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  Monomial key = m;
  if (effective_length(key.x) > x_arity_ || effective_length(key.y) > y_arity_) return 0;
  key.x.resize(static_cast<std::size_t>(effective_length(key.x)));
  key.y.resize(static_cast<std::size_t>(effective_length(key.y)));
  pad(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.x_arity_ > x_arity_ || other.y_arity_ > y_arity_) {
    *this = with_arity(std::max(x_arity_, other.x_arity_), std::max(y_arity_, other.y_arity_));
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += other.scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.x_arity_, b.x_arity_), std::max(a.y_arity_, b.y_arity_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.x.assign(static_cast<std::size_t>(out.x_arity_), 0);
      m.y.assign(static_cast<std::size_t>(out.y_arity_), 0);
      for (std::size_t i = 0; i < ma.x.size(); ++i) m.x[i] += ma.x[i];
      for (std::size_t i = 0; i < mb.x.size(); ++i) m.x[i] += mb.x[i];
      for (std::size_t i = 0; i < ma.y.size(); ++i) m.y[i] += ma.y[i];
      for (std::size_t i = 0; i < mb.y.size(); ++i) m.y[i] += mb.y[i];
      m.p = ma.p + mb.p;
      m.q = ma.q + mb.q;
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
  MultiPoly out(x_arity_, y_arity_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (x_arity_ == other.x_arity_ && y_arity_ == other.y_arity_) return terms_ == other.terms_;
  const int xa = std::max(x_arity_, other.x_arity_);
  const int ya = std::max(y_arity_, other.y_arity_);
  return with_arity(xa, ya).terms_ == other.with_arity(xa, ya).terms_;
}

MultiPoly MultiPoly::with_arity(int x_arity, int y_arity) const {
  MultiPoly out(x_arity, y_arity);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    if (effective_length(key.x) > x_arity || effective_length(key.y) > y_arity) {
      throw std::invalid_argument("with_arity: would drop a variable in use");
    }
    key.x.resize(static_cast<std::size_t>(x_arity), 0);
    key.y.resize(static_cast<std::size_t>(y_arity), 0);
    out.terms_.emplace(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::reverse_x() const {
  MultiPoly out(x_arity_, y_arity_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    std::reverse(key.x.begin(), key.x.end());
    out.terms_.emplace(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::specialize_x(int ones) const {
  MultiPoly out(0, y_arity_);
  for (const auto& [m, c] : terms_) {
    bool survives = true;
    for (std::size_t i = static_cast<std::size_t>(std::max(ones, 0)); i < m.x.size(); ++i) survives &= m.x[i] == 0;
    if (!survives) continue;
    Monomial key = m;
    key.x.clear();
    out.add_term(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::specialize_y(int ones) const {
  MultiPoly out(x_arity_, 0);
  for (const auto& [m, c] : terms_) {
    bool survives = true;
    for (std::size_t i = static_cast<std::size_t>(std::max(ones, 0)); i < m.y.size(); ++i) survives &= m.y[i] == 0;
    if (!survives) continue;
    Monomial key = m;
    key.y.clear();
    out.add_term(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::set_p_one() const {
  MultiPoly out(x_arity_, y_arity_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    key.p = 0;
    out.add_term(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::set_q_one() const {
  MultiPoly out(x_arity_, y_arity_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    key.q = 0;
    out.add_term(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::grade_x(bool into_p) const {
  MultiPoly out(x_arity_, y_arity_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    int shift = 0;
    for (std::size_t i = 0; i < key.x.size(); ++i) shift += static_cast<int>(i) * key.x[i];
    (into_p ? key.p : key.q) += shift;
    out.add_term(std::move(key), c);
  }
  return out;
}

MultiPoly MultiPoly::grade_y() const {
  MultiPoly out(x_arity_, y_arity_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    for (std::size_t i = 0; i < key.y.size(); ++i) key.q += static_cast<int>(i) * key.y[i];
    out.add_term(std::move(key), c);
  }
  return out;
}

Integer MultiPoly::evaluate_ones() const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

bool MultiPoly::is_x_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (int e : m.x) deg += e;
    if (deg != d) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, Integer>> MultiPoly::display_order() const {
  std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (int cx = display_compare(a.first.x, b.first.x); cx != 0) return cx < 0;
    if (int cy = display_compare(a.first.y, b.first.y); cy != 0) return cy < 0;
    if (a.first.p != b.first.p) return a.first.p < b.first.p;
    return a.first.q < b.first.q;
  });
  return out;
}

UniPoly::UniPoly(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(int degree, const Integer& c) {
  UniPoly g;
  g.add_term(degree, c);
  return g;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPoly::low_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

Integer UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Integer UniPoly::evaluate_one() const {
  Integer total = 0;
  for (const Integer& c : c_) total += c;
  return total;
}

void UniPoly::add_term(int degree, const Integer& c) {
  if (degree < 0) throw std::invalid_argument("UniPoly: negative degree");
  if (c == 0) return;
  if (static_cast<int>(c_.size()) <= degree) c_.resize(static_cast<std::size_t>(degree) + 1, 0);
  c_[static_cast<std::size_t>(degree)] += c;
  trim();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

InternalZeros internal_zeros(const UniPoly& g) {
  InternalZeros z;
  if (g.is_zero()) return z;
  for (int k = g.low_degree() + 1; k < g.degree(); ++k) {
    if (g.coefficient(k) == 0) z.positions.push_back(k);
  }
  return z;
}

UniPoly coefficient_of_q(const MultiPoly& g, int k) {
  UniPoly out;
  for (const auto& [m, c] : g.terms()) {
    if (!all_zero(m.x) || !all_zero(m.y)) throw std::invalid_argument("coefficient_of_q: polynomial involves x or y");
    if (m.q == k) out.add_term(m.p, c);
  }
  return out;
}

UniPoly as_q_poly(const MultiPoly& g) {
  UniPoly out;
  for (const auto& [m, c] : g.terms()) {
    if (!all_zero(m.x) || !all_zero(m.y) || m.p != 0) throw std::invalid_argument("as_q_poly: not a polynomial in q");
    out.add_term(m.q, c);
  }
  return out;
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace skel
