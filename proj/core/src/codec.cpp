#include "negacantor/codec.hpp"

#include <json.hpp>

#include <stdexcept>

namespace negacantor {

using nlohmann::json;

void check_digits(const Params& ps, const std::vector<int>& digits, long offset) {
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const long n = offset + static_cast<long>(j) + 1;
    if (digits[j] < 0 || digits[j] >= ps.d(n))
      throw std::out_of_range("digit " + std::to_string(digits[j]) + " outside alphabet at n=" +
                              std::to_string(n));
  }
}

int tail_digit(const Params& ps, NegaTail tail, long n) {
  switch (tail) {
    case NegaTail::LowHigh:  // positive image all-zero
      return n % 2 == 1 ? 0 : ps.d(n) - 1;
    case NegaTail::HighLow:  // positive image all-max
      return n % 2 == 1 ? ps.d(n) - 1 : 0;
    case NegaTail::Truncated:
      break;
  }
  throw std::invalid_argument("truncated tail has no digits");
}

PositiveDigits to_positive(const Params& ps, const NegaDigits& x) {
  check_digits(ps, x.digits);
  PositiveDigits y;
  y.digits.reserve(x.digits.size());
  for (std::size_t j = 0; j < x.digits.size(); ++j) {
    const long n = static_cast<long>(j) + 1;
    y.digits.push_back(n % 2 == 1 ? x.digits[j] : ps.d(n) - 1 - x.digits[j]);
  }
  switch (x.tail) {
    case NegaTail::Truncated: y.tail = PosTail::Truncated; break;
    case NegaTail::LowHigh: y.tail = PosTail::AllZero; break;
    case NegaTail::HighLow: y.tail = PosTail::AllMax; break;
  }
  return y;
}

NegaDigits from_positive(const Params& ps, const PositiveDigits& y) {
  check_digits(ps, y.digits);
  NegaDigits x;
  x.digits.reserve(y.digits.size());
  for (std::size_t j = 0; j < y.digits.size(); ++j) {
    const long n = static_cast<long>(j) + 1;
    x.digits.push_back(n % 2 == 1 ? y.digits[j] : ps.d(n) - 1 - y.digits[j]);
  }
  switch (y.tail) {
    case PosTail::Truncated: x.tail = NegaTail::Truncated; break;
    case PosTail::AllZero: x.tail = NegaTail::LowHigh; break;
    case PosTail::AllMax: x.tail = NegaTail::HighLow; break;
  }
  return x;
}

Rat positive_prefix_value(const Params& ps, const std::vector<int>& digits, long offset) {
  check_digits(ps, digits, offset);
  Int num = 0, den = 1;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const int dn = ps.d(offset + static_cast<long>(j) + 1);
    num = num * dn + digits[j];
    den *= dn;
  }
  return Rat(num, den);
}

Rat positive_value(const Params& ps, const PositiveDigits& y, long offset) {
  Rat v = positive_prefix_value(ps, y.digits, offset);
  if (y.tail == PosTail::AllMax) {
    Int den = 1;
    for (std::size_t j = 0; j < y.digits.size(); ++j) den *= ps.d(offset + static_cast<long>(j) + 1);
    v += Rat(1, den);
  }
  return v;
}

PositiveDigits encode_positive(const Params& ps, const Rat& x, long depth) {
  if (x < 0 || x > 1) throw std::domain_error("argument " + fraction_string(x) + " outside [0,1]");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  PositiveDigits y;
  Rat r = x;
  for (long n = 1;; ++n) {
    if (r == 0) { y.tail = PosTail::AllZero; return y; }
    if (r == 1) { y.tail = PosTail::AllMax; return y; }
    if (n > depth) { y.tail = PosTail::Truncated; return y; }
    const Rat t = r * ps.d(n);
    const Int dig = floor_rat(t);
    y.digits.push_back(static_cast<int>(dig));
    r = t - Rat(dig);
  }
}

NegaDigits encode(const Params& ps, const Rat& x, long depth) {
  return from_positive(ps, encode_positive(ps, x, depth));
}

Interval decode(const Params& ps, const NegaDigits& x) {
  const PositiveDigits y = to_positive(ps, x);
  const Rat lo = positive_prefix_value(ps, y.digits);
  const Rat w = ps.cylinder_width(static_cast<long>(y.digits.size()));
  switch (y.tail) {
    case PosTail::AllZero: return {lo, lo};
    case PosTail::AllMax: return {lo + w, lo + w};
    case PosTail::Truncated: return {lo, lo + w};
  }
  throw std::logic_error("unreachable");
}

PositiveDigits normalize_positive(const Params& ps, PositiveDigits y) {
  check_digits(ps, y.digits);
  if (y.tail == PosTail::Truncated)
    throw std::invalid_argument("cannot normalize a truncated digit string");
  while (!y.digits.empty()) {
    const long n = static_cast<long>(y.digits.size());
    const int redundant = y.tail == PosTail::AllZero ? 0 : ps.d(n) - 1;
    if (y.digits.back() != redundant) break;
    y.digits.pop_back();
  }
  return y;
}

bool is_nega_rational(const Params& ps, const NegaDigits& x) {
  if (!x.canonical()) return false;
  return !normalize_positive(ps, to_positive(ps, x)).digits.empty();
}

NegaDigits dual_representation(const Params& ps, const NegaDigits& x) {
  if (!x.canonical()) throw std::invalid_argument("dual requires a canonical tail");
  PositiveDigits y = normalize_positive(ps, to_positive(ps, x));
  if (y.digits.empty()) throw std::domain_error("endpoint");
  if (y.tail == PosTail::AllZero) {
    y.digits.back() -= 1;  // minimal form guarantees the last digit is >= 1
    y.tail = PosTail::AllMax;
  } else {
    y.digits.back() += 1;  // normalization left it <= d-2
    y.tail = PosTail::AllZero;
  }
  return from_positive(ps, y);
}

PositiveDigits shift(const PositiveDigits& y, long k) {
  if (k < 0) throw std::invalid_argument("shift count must be >= 0");
  PositiveDigits out;
  out.tail = y.tail;
  const long n = static_cast<long>(y.digits.size());
  if (k > n) {
    if (y.tail == PosTail::Truncated)
      throw std::out_of_range("shift by " + std::to_string(k) + " exceeds " + std::to_string(n) +
                              " available digits");
    return out;  // canonical tails shift to themselves
  }
  out.digits.assign(y.digits.begin() + k, y.digits.end());
  return out;
}

Interval cylinder_interval(const Params& ps, const CylinderId& c) {
  check_digits(ps, c.digits);
  const Rat left = decode(ps, NegaDigits{c.digits, NegaTail::LowHigh}).lo;
  return {left, left + ps.cylinder_width(static_cast<long>(c.digits.size()))};
}

std::string tail_name(NegaTail tail) {
  switch (tail) {
    case NegaTail::Truncated: return "trunc";
    case NegaTail::LowHigh: return "lowhigh";
    case NegaTail::HighLow: return "highlow";
  }
  return "?";
}

NegaTail tail_from_name(std::string_view name) {
  if (name == "trunc") return NegaTail::Truncated;
  if (name == "lowhigh") return NegaTail::LowHigh;
  if (name == "highlow") return NegaTail::HighLow;
  throw std::invalid_argument("unknown tail tag \"" + std::string(name) +
                              "\" (expected trunc|lowhigh|highlow)");
}

std::string to_json_string(const NegaDigits& x) {
  json j;
  j["digits"] = x.digits;
  j["tail"] = tail_name(x.tail);
  return j.dump();
}

NegaDigits nega_from_json_string(const Params& ps, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("digit string is not valid JSON: ") + e.what());
  }
  NegaDigits x;
  x.digits = j.at("digits").get<std::vector<int>>();
  x.tail = tail_from_name(j.at("tail").get<std::string>());
  check_digits(ps, x.digits);
  return x;
}

NegaDigits parse_nega_digits(const Params& ps, std::string_view text) {
  NegaDigits x;
  std::string_view digits = text;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    x.tail = tail_from_name(text.substr(colon + 1));
    digits = text.substr(0, colon);
  }
  if (!digits.empty() && digits.back() == ',')
    throw std::invalid_argument("trailing comma in \"" + std::string(text) + "\"");
  std::size_t pos = 0;
  while (pos < digits.size()) {
    auto comma = digits.find(',', pos);
    if (comma == std::string_view::npos) comma = digits.size();
    const std::string tok(digits.substr(pos, comma - pos));
    if (tok.empty()) throw std::invalid_argument("empty digit in \"" + std::string(text) + "\"");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad digit \"" + tok + "\"");
    }
    if (used != tok.size()) throw std::invalid_argument("bad digit \"" + tok + "\"");
    x.digits.push_back(v);
    pos = comma + 1;
  }
  check_digits(ps, x.digits);
  return x;
}

}  // namespace negacantor
