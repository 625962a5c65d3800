#include "umt/scalar.hpp"

#include <boost/container_hash/hash.hpp>

#include <stdexcept>

namespace umt {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

cpp_int int_from_digits(std::string_view s) {
  cpp_int v = 0;
  for (char c : s) {
    v *= 10;
    v += c - '0';
  }
  return v;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar Scalar::from_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Scalar::from_int: negative value");
  return Scalar(Rep(n));
}

Scalar Scalar::from_fraction(std::int64_t num, std::int64_t den) {
  if (num < 0) throw std::invalid_argument("Scalar::from_fraction: negative numerator");
  if (den <= 0) throw std::invalid_argument("Scalar::from_fraction: denominator must be positive");
  return Scalar(Rep(cpp_int(num), cpp_int(den)));
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s.empty()) return std::nullopt;

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    cpp_int d = int_from_digits(den);
    if (d.is_zero()) return std::nullopt;
    return Scalar(Rep(int_from_digits(num), d));
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
    cpp_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    return Scalar(Rep(int_from_digits(ip) * scale + int_from_digits(fp), scale));
  }

  if (!all_digits(s)) return std::nullopt;
  return Scalar(Rep(int_from_digits(s)));
}

std::string Scalar::str() const {
  cpp_int num = numerator(v_), den = denominator(v_);
  if (den == 1) return num.str();

  // Power of ten?  Lowest terms guarantee there are no trailing zeros to strip.
  cpp_int t = den;
  int k = 0;
  while (t % 10 == 0) {
    t /= 10;
    ++k;
  }
  if (t == 1) {
    std::string digits = num.str();
    if (static_cast<int>(digits.size()) <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, 1, '.');
    return digits;
  }
  return num.str() + "/" + den.str();
}

std::size_t Scalar::hash() const {
  boost::hash<Rep> h;
  return h(v_);
}

}  // namespace umt
