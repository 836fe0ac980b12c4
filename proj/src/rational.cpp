#include "nullity/rational.hpp"

#include "nullity/error.hpp"

#include <algorithm>
#include <cctype>

namespace nullity {

namespace {

BigInt parse_int(const std::string& text, const std::string& whole) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start || !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                                           [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw Error(ErrorCode::parse, "bad rational '" + whole + "'");
  // cpp_int reads a leading 0 as octal
  const auto first = std::min(text.find_first_not_of('0', start), text.size() - 1);
  const BigInt value(text.substr(std::max(first, start)));
  return start == 1 ? BigInt(-value) : value;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_int(text, text));
  const BigInt num = parse_int(text.substr(0, slash), text);
  const BigInt den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::parse, "zero denominator in '" + text + "'");
  return BigRational(num, den);
}

std::string to_decimal(const BigRational& r, int digits) {
  digits = std::clamp(digits, 1, 20);
  if (r == 0) return "0";
  const bool negative = r < 0;
  BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(r));
  const BigInt den = boost::multiprecision::denominator(r);
  // Find e with 10^e <= |r| < 10^(e+1).
  int e = 0;
  BigInt scaled_num = num, scaled_den = den;
  while (scaled_num >= 10 * scaled_den) {
    scaled_den *= 10;
    ++e;
  }
  while (scaled_num < scaled_den) {
    scaled_num *= 10;
    --e;
  }
  // mantissa = round(|r| * 10^(digits-1-e))
  const int shift = digits - 1 - e;
  BigInt n = num, d = den;
  if (shift >= 0)
    n *= big_pow(10, static_cast<std::uint64_t>(shift));
  else
    d *= big_pow(10, static_cast<std::uint64_t>(-shift));
  BigInt mantissa = (2 * n + d) / (2 * d);
  std::string m = mantissa.str();
  int point = static_cast<int>(m.size()) - shift;  // digits before the decimal point
  std::string out;
  if (point <= 0)
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + m;
  else if (point >= static_cast<int>(m.size()))
    out = m + std::string(static_cast<std::size_t>(point) - m.size(), '0');
  else
    out = m.substr(0, static_cast<std::size_t>(point)) + "." + m.substr(static_cast<std::size_t>(point));
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace nullity
