#pragma once

#include "negacantor/params.hpp"
#include "negacantor/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace negacantor {

// Canonical alternating tails are named after their positive-Cantor image:
// LowHigh completes to the all-zero image (the low cylinder endpoint),
// HighLow to the all-(d-1) image (the high endpoint). On the alternating
// side the spelled-out pattern starts with 0 after an even-length prefix and
// with d-1 after an odd-length one; tail_digit() resolves a position.
enum class NegaTail { Truncated, LowHigh, HighLow };
enum class PosTail { Truncated, AllZero, AllMax };

// Digit string of an alternating-Cantor representation: a finite prefix
// eps_1..eps_N plus a tail tag. A canonical tail denotes one exact number, a
// truncated tail the cylinder of all continuations.
struct NegaDigits {
  std::vector<int> digits;
  NegaTail tail = NegaTail::Truncated;

  bool canonical() const { return tail != NegaTail::Truncated; }
};

struct PositiveDigits {
  std::vector<int> digits;
  PosTail tail = PosTail::Truncated;

  bool canonical() const { return tail != PosTail::Truncated; }
};

// Prefix c_1..c_n naming the cylinder of all points whose alternating
// representation starts with it.
struct CylinderId {
  std::vector<int> digits;
};

struct Interval {
  Rat lo, hi;

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
};

// Throws std::out_of_range unless every digit fits its alphabet (digit j
// checked against d(offset+j+1)).
void check_digits(const Params& ps, const std::vector<int>& digits, long offset = 0);

// Digit at absolute position n implied by a canonical tail.
int tail_digit(const Params& ps, NegaTail tail, long n);

// The g-involution between alternating and positive representations of the
// same number: even positions flip eps -> d-1-eps, tails map LowHigh <->
// AllZero and HighLow <-> AllMax.
PositiveDigits to_positive(const Params& ps, const NegaDigits& x);
NegaDigits from_positive(const Params& ps, const PositiveDigits& y);

// Value of the positive prefix read against columns offset+1, offset+2, ...:
// sum_j digits[j] / (d_{offset+1} ... d_{offset+j+1}). Tail ignored.
Rat positive_prefix_value(const Params& ps, const std::vector<int>& digits, long offset = 0);

// Prefix value plus the tail closure (AllMax adds one trailing cylinder
// width; AllZero and Truncated add nothing, giving the low endpoint).
Rat positive_value(const Params& ps, const PositiveDigits& y, long offset = 0);

// Greedy positive-Cantor digit extraction followed by the g-involution.
// Terminates with a canonical tail as soon as the remainder hits exactly 0
// or 1, and the result is then exact; otherwise truncates after `depth`
// digits. Throws std::domain_error when x is outside [0, 1].
NegaDigits encode(const Params& ps, const Rat& x, long depth);
PositiveDigits encode_positive(const Params& ps, const Rat& x, long depth);

// Exact value (lo == hi) for canonical tails; for truncated input the
// cylinder [lo, lo + 1/(d_1...d_N)] of all completions.
Interval decode(const Params& ps, const NegaDigits& x);

// Strips tail-redundant trailing digits (0 before AllZero, d-1 before
// AllMax). Canonical input only.
PositiveDigits normalize_positive(const Params& ps, PositiveDigits y);

// True when the digits denote a number with exactly two representations:
// a nonempty minimal positive prefix, i.e. any point of (0,1) of the form
// m/(d_1...d_N).
bool is_nega_rational(const Params& ps, const NegaDigits& x);

// The sibling representation of a nega-rational:
//   ...eps_n [d-1] 0 [d-1] 0 ...  <->  ...[eps_n - 1] 0 [d-1] 0 [d-1] ...
// Throws std::domain_error("endpoint") when the input denotes 0 or 1 and
// std::invalid_argument when the tail is truncated.
NegaDigits dual_representation(const Params& ps, const NegaDigits& x);

// Drops the leading k digits; what remains reads against the schedule
// shifted by k. Truncated input must have at least k digits.
PositiveDigits shift(const PositiveDigits& y, long k);

// [left, right] with left the LowHigh completion of the prefix and
// right = left + 1/(d_1...d_n).
Interval cylinder_interval(const Params& ps, const CylinderId& c);

// Serialization: tails are named "trunc" | "lowhigh" | "highlow"; digit
// strings travel as JSON {"digits": [...], "tail": "..."} and on the command
// line as "1,0,2" with an optional ":tag" suffix.
std::string tail_name(NegaTail tail);
NegaTail tail_from_name(std::string_view name);
std::string to_json_string(const NegaDigits& x);
NegaDigits nega_from_json_string(const Params& ps, const std::string& text);
NegaDigits parse_nega_digits(const Params& ps, std::string_view text);

}  // namespace negacantor
