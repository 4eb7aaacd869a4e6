#include "gamedep/rational.hpp"

#include <charconv>
#include <numeric>

#include "gamedep/error.hpp"

namespace gamedep {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::Input, "zero denominator");
  if (denominator < 0) {
    if (numerator == INT64_MIN || denominator == INT64_MIN) {
      throw Error(ErrorKind::Input, "rational out of range");
    }
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  std::int64_t num = 0;
  std::int64_t den = 1;

  auto read = [](std::string_view part, std::int64_t& out, bool allow_sign) {
    if (part.empty()) return false;
    if (part.front() == '+') return false;
    if (!allow_sign && part.front() == '-') return false;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc() && ptr == part.data() + part.size();
  };

  if (!read(num_text, num, true) || num == INT64_MIN) return std::nullopt;
  if (slash != std::string_view::npos) {
    if (!read(text.substr(slash + 1), den, false) || den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gamedep
