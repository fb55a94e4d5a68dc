#pragma once

// Partitions, Young tableaux and Robinson–Schensted insertion.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rspath/lattice_paths.hpp"
#include "rspath/rational.hpp"
#include "rspath/transform.hpp"

namespace rspath {

/// Non-increasing parts. Trailing zeros are kept as given but ignored by
/// comparison, so (2,1) == (2,1,0).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// From a Weyl chamber point x_1 <= ... <= x_k.
  static Partition from_weyl(std::span<const Value> x);

  const std::vector<int>& parts() const { return parts_; }
  /// Part i (0-based), zero beyond the stored length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const;
  /// Number of non-zero parts.
  int length() const;
  std::vector<int> padded(int k) const;
  /// x* in the Weyl chamber: the k padded parts in increasing order.
  std::vector<int> reversed(int k) const;
  bool contains(const Partition& other) const;
  std::string to_string() const;

  bool operator==(const Partition& other) const;
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  std::vector<int> parts_;
};

/// Rows of positive entries. Semistandard: rows weakly increasing, columns
/// strictly increasing. Standard: entries 1..n, rows and columns strictly
/// increasing.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t size() const;
  bool empty() const { return rows_.empty(); }
  Partition shape() const;
  /// Multiplicity of each entry 1..k.
  std::vector<int> weight(int k) const;
  bool is_semistandard() const;
  bool is_standard() const;
  std::string to_string() const;

  bool operator==(const Tableau&) const = default;

  friend Tableau column_insert(const Tableau& t, int a);
  friend Tableau row_insert(const Tableau& t, int a);
  friend Tableau add_cell(const Tableau& t, std::size_t row, int entry);

 private:
  std::vector<std::vector<int>> rows_;
};

using SemistandardTableau = Tableau;
using StandardTableau = Tableau;

Tableau column_insert(const Tableau& t, int a);
Tableau row_insert(const Tableau& t, int a);
/// Appends an entry at the end of the given row (a new row if row == #rows).
Tableau add_cell(const Tableau& t, std::size_t row, int entry);

enum class InsertionMode { Column, Row };

struct RSResult {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
};

RSResult rs(const Word& w, InsertionMode mode);

/// Row r holds d^(1)_r copies of r, then d^(2)_r - d^(1)_r copies of r+1,
/// and so on up to d^(k-r+1)_r.
Tableau tableau_from_array(const ArrayRows& d);
Tableau tableau_from_array(const TriangularArray& array, std::size_t n);
/// Inverse: d^(j)_r = number of entries <= r + j - 1 in row r.
ArrayRows array_from_tableau(const Tableau& t, int k);

/// Number of standard tableaux of shape λ (hook-length formula).
Integer num_standard(const Partition& lambda);
/// f_{(n-d2, d2)} = n! (n - 2 d2 + 1) / ((n - d2 + 1)! d2!)
Integer num_standard_two_row(int n, int d2);

/// Number of semistandard tableaux of shape λ and weight μ.
Integer kostka(const Partition& lambda, std::span<const int> mu);

/// Maximal total length of i disjoint non-decreasing subsequences of the
/// reversed word.
int greene(const Word& w, int i);

/// l(1), ..., l(n): the shapes of the entries <= m of a standard tableau.
std::vector<Partition> recording_shapes(const Tableau& q);
/// Inverse of recording_shapes; throws unless each step adds one box.
Tableau tableau_from_chain(const std::vector<Partition>& chain);
/// True if each shape adds exactly one box to the previous one, starting
/// from a single box.
bool is_growth_chain(const std::vector<Partition>& chain);

/// Partitions of n with at most max_parts parts, in reverse lexicographic
/// order (so the dominance-maximal (n) comes first).
std::vector<Partition> partitions_of(int n, int max_parts);
/// All semistandard tableaux of shape λ with entries in 1..k.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int k);
/// All standard tableaux of shape λ.
std::vector<Tableau> standard_tableaux(const Partition& lambda);
/// Compositions of n into exactly k non-negative parts.
std::vector<std::vector<int>> compositions_of(int n, int k);

nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace rspath
