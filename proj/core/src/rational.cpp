#include "negacantor/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace negacantor {

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return Int(std::string(text));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rat(num, den);
}

std::string fraction_string(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

Int pow10(long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= 10;
  return r;
}

Int floor_rat(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

std::string decimal_string(const Rat& x, int significant) {
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  if (x == 0) return "0";

  const bool neg = x < 0;
  const Int n = neg ? Int(-numerator(x)) : numerator(x);
  const Int d = denominator(x);

  // Decimal exponent e with 10^e <= n/d < 10^(e+1).
  long e = static_cast<long>(n.str().size()) - static_cast<long>(d.str().size());
  while (e >= 0 ? n >= d * pow10(e + 1) : n * pow10(-e - 1) >= d) ++e;
  while (e >= 0 ? n < d * pow10(e) : n * pow10(-e) < d) --e;

  // q = round(n/d * 10^(significant-1-e)), half away from zero.
  const long k = significant - 1 - e;
  Int num = n, den = d;
  if (k >= 0) num *= pow10(k); else den *= pow10(-k);
  Int q = (2 * num + den) / (2 * den);
  if (q >= pow10(significant)) {  // rounding carried into a new digit
    q /= 10;
    ++e;
  }

  std::string digits = q.str();
  std::string out;
  if (e >= 0 && e < 21) {
    if (e + 1 >= static_cast<long>(digits.size())) {
      out = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else if (e < 0 && e >= -6) {
    out = "0." + std::string(-e - 1, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

}  // namespace negacantor
