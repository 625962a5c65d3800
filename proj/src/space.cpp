#include "umt/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace umt {

namespace {

// value -> rank table shared by trusted() and the validators.
struct RankCompression {
  std::vector<Scalar> values;        // sorted ascending, distinct
  std::vector<std::int32_t> rank;    // row-major n*n
};

RankCompression compress(const std::vector<std::vector<Scalar>>& dist) {
  std::unordered_map<Scalar, std::int32_t, ScalarHash> ids;
  std::vector<Scalar> values;
  for (const auto& row : dist)
    for (const Scalar& v : row)
      if (ids.emplace(v, 0).second) values.push_back(v);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) ids[values[i]] = static_cast<std::int32_t>(i);

  const std::size_t n = dist.size();
  std::vector<std::int32_t> rank(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rank[i * n + j] = ids.at(dist[i][j]);
  return {std::move(values), std::move(rank)};
}

}  // namespace

UltrametricSpace::UltrametricSpace(std::vector<std::string> points, std::vector<Scalar> values,
                                   std::vector<std::int32_t> rank)
    : points_(std::move(points)), values_(std::move(values)), rank_(std::move(rank)) {
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], static_cast<int>(i));
}

UltrametricSpace UltrametricSpace::from_ranks(std::vector<std::string> points,
                                              std::vector<Scalar> values,
                                              std::vector<std::int32_t> rank) {
  const std::size_t n = points.size();
  if (n == 0) throw Error("UltrametricSpace: empty point set");
  if (rank.size() != n * n) throw Error("UltrametricSpace: rank matrix is not n*n");
  if (values.empty() || !values.front().is_zero())
    throw Error("UltrametricSpace: value table must start at 0");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i])) throw Error("UltrametricSpace: value table not strictly ascending");
  const auto limit = static_cast<std::int32_t>(values.size());
  for (std::int32_t r : rank)
    if (r < 0 || r >= limit) throw Error("UltrametricSpace: rank out of range");
  return UltrametricSpace(std::move(points), std::move(values), std::move(rank));
}

UltrametricSpace UltrametricSpace::trusted(std::vector<std::string> points,
                                           const std::vector<std::vector<Scalar>>& dist) {
  const std::size_t n = points.size();
  if (dist.size() != n) throw Error("UltrametricSpace::trusted: matrix size mismatch");
  for (const auto& row : dist)
    if (row.size() != n) throw Error("UltrametricSpace::trusted: matrix not square");
  auto rc = compress(dist);
  return from_ranks(std::move(points), std::move(rc.values), std::move(rc.rank));
}

std::optional<int> UltrametricSpace::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

bool operator==(const UltrametricSpace& a, const UltrametricSpace& b) {
  if (a.points_ != b.points_) return false;
  if (a.values_ == b.values_ && a.rank_ == b.rank_) return true;
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.dist(i, j) != b.dist(i, j)) return false;
  return true;
}

Subspace Subspace::whole(const UltrametricSpace& s) {
  Subspace sub;
  sub.space = &s;
  sub.members.resize(s.size());
  for (int i = 0; i < s.size(); ++i) sub.members[i] = i;
  return sub;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ValidationErrorCode code) {
  switch (code) {
    case ValidationErrorCode::EmptyPointSet: return "empty-point-set";
    case ValidationErrorCode::DuplicateLabels: return "duplicate-labels";
    case ValidationErrorCode::NonSquareMatrix: return "non-square-matrix";
    case ValidationErrorCode::UnparsableEntry: return "unparsable-entry";
    case ValidationErrorCode::NonzeroDiagonal: return "nonzero-diagonal";
    case ValidationErrorCode::Asymmetry: return "asymmetry";
    case ValidationErrorCode::ZeroOffDiagonal: return "zero-off-diagonal";
    case ValidationErrorCode::StrongTriangleViolation: return "strong-triangle-violation";
  }
  return "unknown";
}

namespace {

void check_labels(const std::vector<std::string>& points, ValidationReport& report) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen.insert(points[i]).second) {
      report.issues.push_back({ValidationErrorCode::DuplicateLabels,
                               {static_cast<int>(i)},
                               "duplicate point label \"" + points[i] + "\""});
      return;
    }
  }
}

// Diagonal, symmetry, positivity and the strong triangle inequality, one
// witness per class. Assumes a square, fully parsed matrix.
void check_metric(const std::vector<std::string>& points,
                  const std::vector<std::vector<Scalar>>& dist, const RankCompression& rc,
                  ValidationReport& report) {
  const int n = static_cast<int>(points.size());

  for (int i = 0; i < n; ++i) {
    if (!dist[i][i].is_zero()) {
      report.issues.push_back({ValidationErrorCode::NonzeroDiagonal,
                               {i},
                               "d(" + points[i] + "," + points[i] + ") = " + dist[i][i].str() +
                                   ", diagonal must be 0"});
      break;
    }
  }
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) {
        report.issues.push_back({ValidationErrorCode::Asymmetry,
                                 {i, j},
                                 "d(" + points[i] + "," + points[j] + ") = " + dist[i][j].str() +
                                     " but d(" + points[j] + "," + points[i] + ") = " +
                                     dist[j][i].str()});
        found = true;
        break;
      }
    }
    if (found) break;
  }
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j].is_zero()) {
        report.issues.push_back({ValidationErrorCode::ZeroOffDiagonal,
                                 {i, j},
                                 "distinct points " + points[i] + " and " + points[j] +
                                     " are at distance 0"});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  // Strong triangle inequality on ranks (order-isomorphic to the values).
  const auto* r = rc.rank.data();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int32_t rij = r[i * n + j];
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (rij > std::max(r[i * n + k], r[k * n + j])) {
          report.issues.push_back(
              {ValidationErrorCode::StrongTriangleViolation,
               {i, k, j},
               "d(" + points[i] + "," + points[j] + ") = " + dist[i][j].str() + " > max(d(" +
                   points[i] + "," + points[k] + ") = " + dist[i][k].str() + ", d(" + points[k] +
                   "," + points[j] + ") = " + dist[k][j].str() + ")"});
          return;
        }
      }
    }
  }
}

ValidationResult validate_impl(std::vector<std::string> points,
                               std::vector<std::vector<Scalar>> dist, ValidationReport report) {
  auto rc = compress(dist);
  check_metric(points, dist, rc, report);

  ValidationResult result;
  if (report.ok())
    result.space = UltrametricSpace::from_ranks(std::move(points), std::move(rc.values),
                                                std::move(rc.rank));
  result.report = std::move(report);
  return result;
}

}  // namespace

ValidationResult validate(std::vector<std::string> points,
                          const std::vector<std::vector<std::string>>& entries) {
  ValidationReport report;
  const std::size_t n = points.size();
  if (n == 0) {
    report.issues.push_back({ValidationErrorCode::EmptyPointSet, {}, "no points given"});
    return {std::nullopt, std::move(report)};
  }
  check_labels(points, report);

  if (entries.size() != n) {
    report.issues.push_back({ValidationErrorCode::NonSquareMatrix,
                             {},
                             "matrix has " + std::to_string(entries.size()) + " rows for " +
                                 std::to_string(n) + " points"});
    return {std::nullopt, std::move(report)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) {
      report.issues.push_back({ValidationErrorCode::NonSquareMatrix,
                               {static_cast<int>(i)},
                               "row " + std::to_string(i) + " has " +
                                   std::to_string(entries[i].size()) + " entries, expected " +
                                   std::to_string(n)});
      return {std::nullopt, std::move(report)};
    }
  }

  std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto parsed = Scalar::parse(entries[i][j]);
      if (!parsed) {
        report.issues.push_back({ValidationErrorCode::UnparsableEntry,
                                 {static_cast<int>(i), static_cast<int>(j)},
                                 "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                                     "] = \"" + entries[i][j] +
                                     "\" is not a nonnegative rational"});
        return {std::nullopt, std::move(report)};
      }
      dist[i][j] = std::move(*parsed);
    }
  }
  return validate_impl(std::move(points), std::move(dist), std::move(report));
}

ValidationResult validate_parsed(std::vector<std::string> points,
                                 const std::vector<std::vector<Scalar>>& dist) {
  ValidationReport report;
  const std::size_t n = points.size();
  if (n == 0) {
    report.issues.push_back({ValidationErrorCode::EmptyPointSet, {}, "no points given"});
    return {std::nullopt, std::move(report)};
  }
  check_labels(points, report);
  if (dist.size() != n) {
    report.issues.push_back({ValidationErrorCode::NonSquareMatrix, {}, "matrix size mismatch"});
    return {std::nullopt, std::move(report)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      report.issues.push_back(
          {ValidationErrorCode::NonSquareMatrix, {static_cast<int>(i)}, "matrix not square"});
      return {std::nullopt, std::move(report)};
    }
  }
  return validate_impl(std::move(points), dist, std::move(report));
}

// ---------------------------------------------------------------------------
// Queries and derived spaces

Scalar diameter(const Subspace& s) {
  if (!s.space || s.members.empty()) throw Error("diameter: empty subspace");
  const auto& sp = *s.space;
  std::int32_t best = 0;
  for (std::size_t a = 0; a < s.members.size(); ++a)
    for (std::size_t b = a + 1; b < s.members.size(); ++b)
      best = std::max(best, sp.rank(s.members[a], s.members[b]));
  return sp.value_of_rank(best);
}

std::vector<Scalar> spectrum(const UltrametricSpace& s, int t) {
  if (t < 0 || t >= s.size()) throw Error("spectrum: point index out of range");
  std::vector<char> seen(s.value_table().size(), 0);
  for (int x = 0; x < s.size(); ++x) seen[s.rank(t, x)] = 1;
  std::vector<Scalar> out;
  for (std::size_t r = 0; r < seen.size(); ++r)
    if (seen[r]) out.push_back(s.value_table()[r]);
  return out;
}

UltrametricSpace restrict_space(const UltrametricSpace& s, const std::vector<int>& members) {
  if (members.empty()) throw Error("restrict_space: empty member set");
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] < 0 || members[a] >= s.size()) throw Error("restrict_space: index out of range");
    if (a > 0 && members[a - 1] >= members[a])
      throw Error("restrict_space: members must be sorted and distinct");
  }
  const int m = static_cast<int>(members.size());
  std::vector<std::string> points(m);
  std::vector<std::int32_t> rank(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    points[a] = s.point_name(members[a]);
    for (int b = 0; b < m; ++b) rank[a * m + b] = s.rank(members[a], members[b]);
  }
  return UltrametricSpace::from_ranks(std::move(points), s.value_table(), std::move(rank));
}

UltrametricSpace scaled(const UltrametricSpace& s, const Scalar& factor) {
  if (factor.is_zero()) throw Error("scaled: factor must be positive");
  std::vector<Scalar> values;
  values.reserve(s.value_table().size());
  for (const Scalar& v : s.value_table()) values.push_back(v * factor);
  std::vector<std::int32_t> rank(s.size() * s.size());
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) rank[i * s.size() + j] = s.rank(i, j);
  return UltrametricSpace::from_ranks(s.points(), std::move(values), std::move(rank));
}

}  // namespace umt
