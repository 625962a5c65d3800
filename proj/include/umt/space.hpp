#pragma once

#include "umt/error.hpp"
#include "umt/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace umt {

// A finite ultrametric space: distinct point names plus an exact symmetric
// distance matrix satisfying the strong triangle inequality
//   d(x,y) <= max(d(x,z), d(z,y)).
//
// Only validate() and the trusted constructors below produce instances, so a
// held UltrametricSpace always satisfies the axioms. Instances are immutable;
// concurrent reads are safe.
//
// Storage is a dense n*n matrix of small integer ranks into a sorted table of
// the distinct distance values. Ranks are order-isomorphic to the values, so
// all comparisons stay exact while the bulk data stays 4 bytes per entry.
class UltrametricSpace {
public:
  // For matrices that satisfy the axioms by construction (tree-derived,
  // restrictions, scalings, generator output). External data goes through
  // validate().
  static UltrametricSpace trusted(std::vector<std::string> points,
                                  const std::vector<std::vector<Scalar>>& dist);

  // Lowest-level trusted constructor: `values` strictly ascending with
  // values[0] == 0, `rank` a row-major n*n matrix of indices into `values`.
  static UltrametricSpace from_ranks(std::vector<std::string> points,
                                     std::vector<Scalar> values,
                                     std::vector<std::int32_t> rank);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(int i) const { return points_[i]; }

  const Scalar& dist(int i, int j) const { return values_[rank_[i * size() + j]]; }
  std::int32_t rank(int i, int j) const { return rank_[i * size() + j]; }
  const Scalar& value_of_rank(std::int32_t r) const { return values_[r]; }
  // Sorted ascending; may contain values absent from the matrix after a
  // restriction to a subset of points.
  const std::vector<Scalar>& value_table() const { return values_; }

  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const UltrametricSpace& a, const UltrametricSpace& b);

private:
  UltrametricSpace(std::vector<std::string> points, std::vector<Scalar> values,
                   std::vector<std::int32_t> rank);

  std::vector<std::string> points_;
  std::vector<Scalar> values_;
  std::vector<std::int32_t> rank_;
  std::unordered_map<std::string, int> index_;
};

// A nonempty subset of a space's points with the induced (restricted) metric.
struct Subspace {
  const UltrametricSpace* space = nullptr;
  std::vector<int> members;  // sorted, distinct, nonempty

  static Subspace whole(const UltrametricSpace& s);
  int size() const { return static_cast<int>(members.size()); }
};

// ---------------------------------------------------------------------------
// Validation

enum class ValidationErrorCode {
  EmptyPointSet,
  DuplicateLabels,
  NonSquareMatrix,
  UnparsableEntry,
  NonzeroDiagonal,
  Asymmetry,
  ZeroOffDiagonal,
  StrongTriangleViolation,
};

std::string_view to_string(ValidationErrorCode code);

// One issue per violation class, each with a single witness.
struct ValidationIssue {
  ValidationErrorCode code;
  std::vector<int> where;  // witness indices (point/row/column/triple), if any
  std::string message;     // human-readable, names the witness
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

struct ValidationResult {
  std::optional<UltrametricSpace> space;  // engaged iff report.ok()
  ValidationReport report;
  bool ok() const { return space.has_value(); }
};

// Entry strings use the Scalar grammar ("3", "1/2", "0.25").
ValidationResult validate(std::vector<std::string> points,
                          const std::vector<std::vector<std::string>>& entries);
ValidationResult validate_parsed(std::vector<std::string> points,
                                 const std::vector<std::vector<Scalar>>& dist);

// ---------------------------------------------------------------------------
// Queries and derived spaces

// Max pairwise distance over the members; 0 for a singleton.
Scalar diameter(const Subspace& s);

// Sorted distinct distances from point t to all points; always contains 0.
std::vector<Scalar> spectrum(const UltrametricSpace& s, int t);

// Induced subspace as a standalone space (keeps point names).
UltrametricSpace restrict_space(const UltrametricSpace& s, const std::vector<int>& members);

// Every distance multiplied by factor > 0.
UltrametricSpace scaled(const UltrametricSpace& s, const Scalar& factor);

}  // namespace umt
