#include "umt/space.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace umt;
using testutil::equilateral;
using testutil::four_point_example;
using testutil::make_space;

namespace {

bool has_code(const ValidationReport& rep, ValidationErrorCode code) {
  return std::any_of(rep.issues.begin(), rep.issues.end(),
                     [&](const ValidationIssue& i) { return i.code == code; });
}

const ValidationIssue& issue_of(const ValidationReport& rep, ValidationErrorCode code) {
  for (const auto& i : rep.issues)
    if (i.code == code) return i;
  REQUIRE(false);
  return rep.issues.front();
}

}  // namespace

TEST_CASE("validate accepts the 3-point example and the triangle holds on all triples") {
  auto res = validate({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
  REQUIRE(res.ok());
  const auto& s = *res.space;
  CHECK(s.size() == 3);
  CHECK(s.dist(0, 1) == Scalar::from_int(1));
  CHECK(s.dist(0, 2) == Scalar::from_int(2));
  CHECK(s.dist(1, 2) == Scalar::from_int(2));
  // independent oracle: check every one of the 27 triples directly
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(s.dist(i, j) <= std::max(s.dist(i, k), s.dist(k, j)));
}

TEST_CASE("validate accepts a singleton space") {
  auto res = validate({"a"}, {{"0"}});
  REQUIRE(res.ok());
  CHECK(res.space->size() == 1);
  CHECK(res.space->dist(0, 0).is_zero());
}

TEST_CASE("validate reports a strong-triangle violation with the witness triple") {
  auto res = validate({"a", "b", "c"}, {{"0", "1", "3"}, {"1", "0", "1"}, {"3", "1", "0"}});
  REQUIRE_FALSE(res.ok());
  const auto& issue = issue_of(res.report, ValidationErrorCode::StrongTriangleViolation);
  CHECK(issue.where == std::vector<int>{0, 1, 2});  // d(a,c) > max(d(a,b), d(b,c))
  CHECK(issue.message.find("a") != std::string::npos);
  CHECK(issue.message.find("b") != std::string::npos);
  CHECK(issue.message.find("c") != std::string::npos);
  CHECK(issue.message.find("3") != std::string::npos);
}

TEST_CASE("validate reports one witness per violation class") {
  // many triangle violations, but only one is reported
  auto res = validate({"a", "b", "c", "d"}, {{"0", "1", "9", "9"},
                                             {"1", "0", "1", "9"},
                                             {"9", "1", "0", "1"},
                                             {"9", "9", "1", "0"}});
  REQUIRE_FALSE(res.ok());
  int triangle_issues = 0;
  for (const auto& i : res.report.issues)
    if (i.code == ValidationErrorCode::StrongTriangleViolation) ++triangle_issues;
  CHECK(triangle_issues == 1);
}

TEST_CASE("validate reports asymmetry, nonzero diagonal and zero off-diagonal") {
  auto asym = validate({"a", "b"}, {{"0", "1"}, {"2", "0"}});
  REQUIRE_FALSE(asym.ok());
  CHECK(issue_of(asym.report, ValidationErrorCode::Asymmetry).where == std::vector<int>{0, 1});

  auto diag = validate({"a", "b"}, {{"1", "1"}, {"1", "0"}});
  REQUIRE_FALSE(diag.ok());
  CHECK(issue_of(diag.report, ValidationErrorCode::NonzeroDiagonal).where ==
        std::vector<int>{0});

  auto zero = validate({"a", "b"}, {{"0", "0"}, {"0", "0"}});
  REQUIRE_FALSE(zero.ok());
  CHECK(issue_of(zero.report, ValidationErrorCode::ZeroOffDiagonal).where ==
        std::vector<int>{0, 1});
}

TEST_CASE("validate reports structural errors as distinct codes") {
  auto empty = validate({}, {});
  CHECK(has_code(empty.report, ValidationErrorCode::EmptyPointSet));

  auto dup = validate({"a", "a"}, {{"0", "1"}, {"1", "0"}});
  REQUIRE_FALSE(dup.ok());
  CHECK(has_code(dup.report, ValidationErrorCode::DuplicateLabels));

  auto rows = validate({"a", "b"}, {{"0", "1"}});
  CHECK(has_code(rows.report, ValidationErrorCode::NonSquareMatrix));

  auto ragged = validate({"a", "b"}, {{"0", "1"}, {"1"}});
  CHECK(has_code(ragged.report, ValidationErrorCode::NonSquareMatrix));

  auto bad = validate({"a", "b"}, {{"0", "x"}, {"x", "0"}});
  REQUIRE_FALSE(bad.ok());
  const auto& issue = issue_of(bad.report, ValidationErrorCode::UnparsableEntry);
  CHECK(issue.where == std::vector<int>{0, 1});

  auto negative = validate({"a", "b"}, {{"0", "-1"}, {"-1", "0"}});
  CHECK(has_code(negative.report, ValidationErrorCode::UnparsableEntry));
}

TEST_CASE("validate parses decimals and fractions to equal values") {
  auto res = validate({"a", "b", "c"},
                      {{"0", "0.5", "1/2"}, {"0.5", "0", "2/4"}, {"1/2", "2/4", "0"}});
  // d(a,b)=d(a,c)=d(b,c)=1/2: a valid equilateral space
  REQUIRE(res.ok());
  CHECK(res.space->dist(0, 1) == Scalar::from_fraction(1, 2));
  CHECK(res.space->dist(0, 2) == res.space->dist(1, 2));
}

TEST_CASE("diameter matches the examples") {
  auto s = make_space({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
  CHECK(diameter(Subspace::whole(s)) == Scalar::from_int(2));
  CHECK(diameter(Subspace{&s, {0}}) == Scalar{});
  CHECK(diameter(Subspace{&s, {0, 1}}) == Scalar::from_int(1));
}

TEST_CASE("spectrum matches the examples") {
  auto s = make_space({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
  CHECK(spectrum(s, 0) ==
        std::vector<Scalar>{Scalar{}, Scalar::from_int(1), Scalar::from_int(2)});
  CHECK(spectrum(s, 2) == std::vector<Scalar>{Scalar{}, Scalar::from_int(2)});

  auto single = make_space({"a"}, {{"0"}});
  CHECK(spectrum(single, 0) == std::vector<Scalar>{Scalar{}});

  auto eq = equilateral({"a", "b", "c"}, "5");
  for (int t = 0; t < 3; ++t)
    CHECK(spectrum(eq, t) == std::vector<Scalar>{Scalar{}, Scalar::from_int(5)});

  CHECK_THROWS_AS(spectrum(s, 3), Error);
  CHECK_THROWS_AS(spectrum(s, -1), Error);
}

TEST_CASE("restrict_space keeps names and induced distances") {
  auto s = four_point_example();
  auto sub = restrict_space(s, {0, 2, 3});
  CHECK(sub.size() == 3);
  CHECK(sub.points() == std::vector<std::string>{"a", "c", "d"});
  CHECK(sub.dist(0, 1) == Scalar::from_int(2));  // d(a,c)
  CHECK(sub.dist(0, 2) == Scalar::from_int(3));  // d(a,d)
  CHECK(sub.dist(1, 2) == Scalar::from_int(3));  // d(c,d)

  CHECK_THROWS_AS(restrict_space(s, {}), Error);
  CHECK_THROWS_AS(restrict_space(s, {2, 1}), Error);
  CHECK_THROWS_AS(restrict_space(s, {0, 0}), Error);
  CHECK_THROWS_AS(restrict_space(s, {0, 9}), Error);
}

TEST_CASE("scaled multiplies every distance") {
  auto s = four_point_example();
  auto s3 = scaled(s, Scalar::from_int(3));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      CHECK(s3.dist(i, j) == s.dist(i, j) * Scalar::from_int(3));
  auto half = scaled(s, Scalar::from_fraction(1, 2));
  CHECK(half.dist(0, 1) == Scalar::from_fraction(1, 2));
  CHECK_THROWS_AS(scaled(s, Scalar{}), Error);
}

TEST_CASE("space equality is semantic") {
  auto s1 = four_point_example();
  auto s2 = four_point_example();
  CHECK(s1 == s2);
  CHECK_FALSE(s1 == scaled(s1, Scalar::from_int(2)));
  auto renamed = make_space({"a", "b", "c", "x"}, {{"0", "1", "2", "3"},
                                                   {"1", "0", "2", "3"},
                                                   {"2", "2", "0", "3"},
                                                   {"3", "3", "3", "0"}});
  CHECK_FALSE(s1 == renamed);
}

TEST_CASE("trusted and from_ranks enforce their structural preconditions") {
  CHECK_THROWS_AS(UltrametricSpace::from_ranks({"a"}, {Scalar::from_int(1)}, {0}), Error);
  CHECK_THROWS_AS(
      UltrametricSpace::from_ranks({"a", "b"}, {Scalar{}, Scalar{}}, {0, 1, 1, 0}), Error);
  CHECK_THROWS_AS(UltrametricSpace::from_ranks({"a", "b"}, {Scalar{}}, {0, 1, 1, 0}), Error);
  CHECK_THROWS_AS(UltrametricSpace::from_ranks({"a"}, {Scalar{}}, {0, 0}), Error);
  CHECK_THROWS_AS(UltrametricSpace::trusted({"a", "b"}, {{Scalar{}}}), Error);

  auto s = UltrametricSpace::trusted(
      {"x", "y"}, {{Scalar{}, Scalar::from_int(4)}, {Scalar::from_int(4), Scalar{}}});
  CHECK(s.dist(0, 1) == Scalar::from_int(4));
  CHECK(s.index_of("y") == 1);
  CHECK_FALSE(s.index_of("z").has_value());
}
