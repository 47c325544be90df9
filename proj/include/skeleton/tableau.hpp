#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "skeleton/combinatorics.hpp"

namespace skel {

using Row = std::vector<int>;

/// Zero-based (row, column) position of a box; row 0 is the top row.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// A filling of a Young diagram (English notation) with positive integers.
/// Construction only checks that row lengths form a partition; the SSYT and
/// SYT predicates are queried separately.
class Tableau {
 public:
  Tableau() = default;
  Tableau(std::initializer_list<Row> rows);
  explicit Tableau(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }
  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  bool empty() const { return rows_.empty(); }
  int at(Cell c) const { return rows_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)]; }
  int& at(Cell c) { return rows_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)]; }
  int max_entry() const;

  bool is_semistandard() const;
  bool is_standard() const;

  /// Rows joined by '/', e.g. "1125/38/8".
  std::string to_string() const;

  auto operator<=>(const Tableau& other) const { return rows_ <=> other.rows_; }
  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

 private:
  std::vector<Row> rows_;
  Partition shape_;
};

/// A horizontal band: cells strictly northeast-ordered, labels weakly increasing.
struct Band {
  std::vector<Cell> cells;
  std::vector<int> labels;
  int size() const { return static_cast<int>(cells.size()); }
};

/// Decomposition of an SSYT into maximal horizontal bands.
std::vector<Band> minimal_parsing(const Tableau& t);

Composition descent_composition(const Tableau& t);
Tableau standardize(const Tableau& t);
Tableau destandardize(const Tableau& t);

struct TableauStats {
  Composition weight;        // multiplicities of 1..max entry
  IndexSet descent_set;      // Des(T) = Des(T^st)
  int maj = 0;
  int depth = 0;
  bool is_quasi_yamanouchi = false;
};

TableauStats stats(const Tableau& t);
bool is_quasi_yamanouchi(const Tableau& t);

/// Content weight as a weak composition of length `length` (entries above
/// `length` are ignored), or of length max_entry() when `length` < 0.
Composition weight(const Tableau& t, int length = -1);

enum class EnumerationMode {
  kStandard,         // ST(lambda)
  kSemistandard,     // SSYT(lambda) with entries <= bound
  kQuasiYamanouchi,  // QY(lambda)
  kWeight,           // SSYT(lambda, a) for a weak composition a
  kDescent,          // ST(lambda, alpha)
};

struct EnumerationRequest {
  EnumerationMode mode = EnumerationMode::kStandard;
  int bound = 0;            // kSemistandard
  Composition composition;  // kWeight: weight a; kDescent: descent alpha
};

/// All tableaux of shape lambda selected by the request, in row-reading
/// lexicographic order.
std::vector<Tableau> enumerate(const Partition& lambda, const EnumerationRequest& request);

std::vector<Tableau> standard_tableaux(const Partition& lambda);
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int bound);
std::vector<Tableau> quasi_yamanouchi_tableaux(const Partition& lambda);

/// f_{lambda alpha}: number of SYT of shape lambda with descent composition alpha.
long long quasi_kostka(const Partition& lambda, const Composition& alpha);
/// K_{lambda a}: number of SSYT of shape lambda and weight a.
long long kostka(const Partition& lambda, const Composition& a);

struct SpecialTableaux {
  Tableau superstandard;          // T(lambda): row i filled with i
  Tableau supersemistandard;      // Q(lambda), equal to T(lambda)
  Tableau anti_supersemistandard; // Q-bar(lambda)
};

SpecialTableaux special_tableaux(const Partition& lambda);
Tableau superstandard_tableau(const Partition& lambda);
Tableau anti_supersemistandard_tableau(const Partition& lambda);

}  // namespace skel
