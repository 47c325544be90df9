#include "skeleton/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skel {

namespace {

Partition shape_of(const std::vector<Row>& rows) {
  std::vector<int> lengths;
  for (const Row& r : rows) lengths.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lengths));
}

void require_ssyt(const Tableau& t, const char* what) {
  if (!t.is_semistandard()) throw std::invalid_argument(std::string(what) + ": tableau is not semistandard");
}

// Cells in standardization order: by value, equal values left to right.
std::vector<Cell> standardization_order(const Tableau& t) {
  std::vector<Cell> cells;
  for (int r = 0; r < t.shape().length(); ++r) {
    for (int c = 0; c < t.shape()[r]; ++c) cells.push_back({r, c});
  }
  std::sort(cells.begin(), cells.end(), [&t](const Cell& a, const Cell& b) {
    if (t.at(a) != t.at(b)) return t.at(a) < t.at(b);
    return a.col < b.col;
  });
  return cells;
}

bool north_east_of(const Cell& prev, const Cell& next) { return prev.row >= next.row && prev.col < next.col; }

Tableau blank_of_shape(const Partition& lambda) {
  std::vector<Row> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  return Tableau(std::move(rows));
}

}  // namespace

Tableau::Tableau(std::initializer_list<Row> rows) : Tableau(std::vector<Row>(rows)) {}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (const Row& r : rows_) {
    if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
  }
  shape_ = shape_of(rows_);
}

int Tableau::max_entry() const {
  int m = 0;
  for (const Row& r : rows_) {
    for (int v : r) m = std::max(m, v);
  }
  return m;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1) return false;
      if (c > 0 && rows_[r][c - 1] > v) return false;
      if (r > 0 && rows_[r - 1][c] >= v) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(size()) + 1, false);
  for (const Row& r : rows_) {
    for (int v : r) {
      if (v > size() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  const bool compact = max_entry() < 10;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) os << '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && !compact) os << ',';
      os << rows_[r][c];
    }
  }
  return os.str();
}

std::vector<Band> minimal_parsing(const Tableau& t) {
  require_ssyt(t, "minimal_parsing");
  std::vector<Band> bands;
  for (const Cell& cell : standardization_order(t)) {
    const bool extend = !bands.empty() && north_east_of(bands.back().cells.back(), cell) &&
                        bands.back().labels.back() <= t.at(cell);
    if (!extend) bands.emplace_back();
    bands.back().cells.push_back(cell);
    bands.back().labels.push_back(t.at(cell));
  }
  return bands;
}

Composition descent_composition(const Tableau& t) {
  std::vector<int> sizes;
  for (const Band& b : minimal_parsing(t)) sizes.push_back(b.size());
  return Composition(std::move(sizes));
}

Tableau standardize(const Tableau& t) {
  Tableau out = t;
  int label = 0;
  for (const Band& b : minimal_parsing(t)) {
    for (const Cell& c : b.cells) out.at(c) = ++label;
  }
  return out;
}

Tableau destandardize(const Tableau& t) {
  Tableau out = t;
  int index = 0;
  for (const Band& b : minimal_parsing(t)) {
    ++index;
    for (const Cell& c : b.cells) out.at(c) = index;
  }
  return out;
}

Composition weight(const Tableau& t, int length) {
  const int len = length < 0 ? t.max_entry() : length;
  std::vector<int> counts(static_cast<std::size_t>(len), 0);
  for (const Row& r : t.rows()) {
    for (int v : r) {
      if (v <= len) ++counts[static_cast<std::size_t>(v) - 1];
    }
  }
  return Composition(std::move(counts));
}

bool is_quasi_yamanouchi(const Tableau& t) { return descent_composition(t) == weight(t); }

TableauStats stats(const Tableau& t) {
  require_ssyt(t, "stats");
  TableauStats s;
  const Composition des = descent_composition(t);
  s.weight = weight(t);
  s.descent_set = comp_to_set(des);
  s.maj = maj_of_set(s.descent_set);
  s.depth = depth(des);
  s.is_quasi_yamanouchi = des == s.weight;
  return s;
}

namespace {

// Row-major backtracking; values are tried in increasing order, so the
// output is row-reading lexicographic.
void fill_semistandard(Tableau& t, const Partition& conj, int bound, int r, int c, std::vector<Tableau>& out) {
  const Partition& lambda = t.shape();
  if (r == lambda.length()) {
    out.push_back(t);
    return;
  }
  const int next_r = (c + 1 == lambda[r]) ? r + 1 : r;
  const int next_c = (c + 1 == lambda[r]) ? 0 : c + 1;
  int lo = r + 1;
  if (c > 0) lo = std::max(lo, t.at({r, c - 1}));
  if (r > 0) lo = std::max(lo, t.at({r - 1, c}) + 1);
  const int hi = bound - (conj[c] - 1 - r);
  for (int v = lo; v <= hi; ++v) {
    t.at({r, c}) = v;
    fill_semistandard(t, conj, bound, next_r, next_c, out);
  }
  t.at({r, c}) = 0;
}

void place_standard(Tableau& t, std::vector<int>& filled, int next, std::vector<Tableau>& out) {
  const Partition& lambda = t.shape();
  if (next > lambda.size()) {
    out.push_back(t);
    return;
  }
  for (int r = 0; r < lambda.length(); ++r) {
    const int c = filled[static_cast<std::size_t>(r)];
    if (c == lambda[r]) continue;
    if (r > 0 && filled[static_cast<std::size_t>(r) - 1] <= c) continue;
    t.at({r, c}) = next;
    ++filled[static_cast<std::size_t>(r)];
    place_standard(t, filled, next + 1, out);
    --filled[static_cast<std::size_t>(r)];
    t.at({r, c}) = 0;
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  if (lambda.empty()) return {Tableau()};
  Tableau t = blank_of_shape(lambda);
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<Tableau> out;
  place_standard(t, filled, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int bound) {
  if (lambda.empty()) return {Tableau()};
  std::vector<Tableau> out;
  if (bound < lambda.length()) return out;
  Tableau t = blank_of_shape(lambda);
  fill_semistandard(t, lambda.conjugate(), bound, 0, 0, out);
  return out;
}

std::vector<Tableau> quasi_yamanouchi_tableaux(const Partition& lambda) {
  if (lambda.empty()) return {Tableau()};
  std::vector<Tableau> out;
  for (Tableau& t : semistandard_tableaux(lambda, max_descent_length(lambda))) {
    if (is_quasi_yamanouchi(t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tableau> enumerate(const Partition& lambda, const EnumerationRequest& request) {
  switch (request.mode) {
    case EnumerationMode::kStandard:
      return standard_tableaux(lambda);
    case EnumerationMode::kSemistandard:
      return semistandard_tableaux(lambda, request.bound);
    case EnumerationMode::kQuasiYamanouchi:
      return quasi_yamanouchi_tableaux(lambda);
    case EnumerationMode::kWeight: {
      std::vector<Tableau> out;
      const Composition& a = request.composition;
      if (a.size() != lambda.size()) return out;
      for (Tableau& t : semistandard_tableaux(lambda, a.length())) {
        if (weight(t, a.length()) == a) out.push_back(std::move(t));
      }
      return out;
    }
    case EnumerationMode::kDescent: {
      std::vector<Tableau> out;
      for (Tableau& t : standard_tableaux(lambda)) {
        if (descent_composition(t) == request.composition) out.push_back(std::move(t));
      }
      return out;
    }
  }
  throw std::invalid_argument("enumerate: unknown mode");
}

long long quasi_kostka(const Partition& lambda, const Composition& alpha) {
  return static_cast<long long>(enumerate(lambda, {EnumerationMode::kDescent, 0, alpha}).size());
}

long long kostka(const Partition& lambda, const Composition& a) {
  return static_cast<long long>(enumerate(lambda, {EnumerationMode::kWeight, 0, a}).size());
}

Tableau superstandard_tableau(const Partition& lambda) {
  std::vector<Row> rows;
  for (int r = 0; r < lambda.length(); ++r) rows.emplace_back(static_cast<std::size_t>(lambda[r]), r + 1);
  return Tableau(std::move(rows));
}

Tableau anti_supersemistandard_tableau(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("anti_supersemistandard_tableau: empty partition");
  Tableau t = blank_of_shape(lambda);
  const Partition conj = lambda.conjugate();
  const int m = max_descent_length(lambda);
  // Columns of height >= 2 are consecutive runs, each starting on the last
  // value of the previous one; height-1 columns are filled with m(lambda).
  int top = 1;
  for (int c = 0; c < conj.length(); ++c) {
    const int height = conj[c];
    if (height >= 2) {
      for (int r = 0; r < height; ++r) t.at({r, c}) = top + r;
      top += height - 1;
    } else {
      t.at({0, c}) = m;
    }
  }
  return t;
}

SpecialTableaux special_tableaux(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("special_tableaux: empty partition");
  Tableau super = superstandard_tableau(lambda);
  return {super, super, anti_supersemistandard_tableau(lambda)};
}

}  // namespace skel
