#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace umt {

// Exact nonnegative rational. Every distance, radius and internal tree label
// is a Scalar; comparisons are exact and there is no tolerance anywhere.
// Stored in lowest terms with a positive denominator (the backend keeps it
// normalized).
class Scalar {
public:
  using Rep = boost::multiprecision::cpp_rational;

  Scalar() = default;  // zero

  static Scalar from_int(std::int64_t n);
  // den > 0, num >= 0; normalizes (from_fraction(2,4) == from_fraction(1,2)).
  static Scalar from_fraction(std::int64_t num, std::int64_t den);

  // Grammar (surrounding blanks allowed):  INT | INT "/" INT | INT "." INT
  // where INT is a nonempty digit run. The "/" form needs a nonzero
  // denominator. Signs and exponents are rejected: values are nonnegative
  // and exact by contract. parse("0.5") == parse("1/2").
  static std::optional<Scalar> parse(std::string_view text);

  bool is_zero() const { return v_.is_zero(); }

  // Canonical rendering: integers as "p", denominators that are powers of
  // ten as plain decimals ("3/10" -> "0.3"), everything else as "p/q" in
  // lowest terms. parse(x.str()) == x, bit-exact.
  std::string str() const;

  std::size_t hash() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.v_ + b.v_); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(a.v_ * b.v_); }

  const Rep& rep() const { return v_; }

private:
  explicit Scalar(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace umt
