#pragma once

#include "negacantor/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace negacantor {

// Radix schedule (d_n): eventually periodic, every entry >= 2.
// d(n) is 1-based: preperiod entries first, then the period repeats.
struct BaseSequence {
  std::vector<int> preperiod;
  std::vector<int> period;

  int d(long n) const;
};

// One column of the parameter matrix: the weights p_{0,n} ... p_{d_n-1,n}.
struct ColumnSpec {
  std::vector<Rat> probabilities;
};

// Eventually periodic column matrix P. The sign class is derived during
// validation, never user-set.
struct MatrixP {
  std::vector<ColumnSpec> preperiod;
  std::vector<ColumnSpec> period;
};

enum class SignClass { AllPositive, AllNonnegative, MixedSigns };

std::string to_string(SignClass c);

// Admissibility check of (d_n, P):
//   1: every entry strictly inside (-1, 1)
//   2: every column sums to exactly 1
//   3: contraction over one joint period, rho = prod_n max_i |p_{i,n}| < 1
//   4: every proper partial column sum beta_{i,n} (i >= 1) is > 0
// Columns are first aligned with the base sequence by padding preperiods to
// a common length and unrolling both periods to their least common multiple;
// arity mismatches surface as structural errors naming the position.
struct ValidationReport {
  struct Violation {
    int property = 0;   // 1..4
    long position = 0;  // column index n, 1-based in the normalized layout
    int digit = -1;     // offending digit index, -1 when not digit-specific
    std::string detail;
  };

  bool structural_ok = true;
  std::string structural_error;
  std::vector<Violation> violations;
  SignClass sign_class = SignClass::AllPositive;
  Rat rho;

  bool passed() const { return structural_ok && violations.empty(); }
  bool property_failed(int property) const;
  std::string summary() const;
  std::string to_json_string() const;
};

ValidationReport validate(const BaseSequence& base, const MatrixP& matrix);

// Normalized, validated view of a schedule/matrix pair. Positions 1 ..
// preperiod_length() are the joint preperiod; after that the joint period
// of length period_length() repeats forever. Immutable after construction
// and safe to share between threads.
class Params {
 public:
  // Throws std::invalid_argument carrying the validation summary when the
  // pair fails the admissibility system.
  static Params make(const BaseSequence& base, const MatrixP& matrix);

  long preperiod_length() const { return static_cast<long>(pre_.size()); }
  long period_length() const { return static_cast<long>(per_.size()); }

  int d(long n) const;
  const std::vector<Rat>& column(long n) const;

  Rat p(int i, long n) const;
  // 0 for i = 0, otherwise p_{0,n} + ... + p_{i-1,n}.
  Rat beta(int i, long n) const;

  // Parity reflection of digit indices: identity at odd n, i -> d_n-1-i at
  // even n. tilde_* compose the table lookups with it.
  int reflect(int i, long n) const;
  Rat tilde_p(int i, long n) const;
  Rat tilde_beta(int i, long n) const;
  std::pair<Rat, Rat> tilde(int i, long n) const;  // {beta~, p~}

  SignClass sign_class() const { return sign_class_; }
  bool nonnegative() const { return sign_class_ != SignClass::MixedSigns; }
  const Rat& rho() const { return rho_; }
  const ValidationReport& report() const { return report_; }

  // Sup bound for |F| evaluated against columns offset+1, offset+2, ...
  // over every digit completion. Exactly 1 for non-negative matrices; for
  // mixed signs the majorant sum_m maxbeta_m prod_{l<m} maxp_l, closed over
  // the period geometrically.
  const Rat& tail_sup(long offset) const;

  Int radix_product(long n) const;          // d_1 d_2 ... d_n
  Rat cylinder_width(long n) const;         // 1 / (d_1 ... d_n)

  const Rat& column_beta_sum(long n) const;  // beta_{0,n} + ... + beta_{d_n-1,n}
  const Rat& column_max_abs_p(long n) const;
  const Rat& column_max_beta(long n) const;

 private:
  struct Col {
    int d = 0;
    std::vector<Rat> p;
    std::vector<Rat> beta;  // beta[i] for i = 0..d-1
    Rat beta_sum;
    Rat max_abs_p;
    Rat max_beta;
  };

  Params() = default;
  const Col& col(long n) const;

  std::vector<Col> pre_, per_;
  SignClass sign_class_ = SignClass::AllPositive;
  Rat rho_;
  std::vector<Rat> sup_;  // tail_sup for offsets 0 .. pre+per-1
  ValidationReport report_;
};

// JSON config document:
//   {"base":   {"preperiod": [..], "period": [..]},
//    "matrix": {"preperiod": [[..]], "period": [[..]]}}
// with rationals encoded as integers or "num/den" strings.
std::pair<BaseSequence, MatrixP> parse_config_json(const std::string& text);
std::string config_json(const BaseSequence& base, const MatrixP& matrix);
Params load_params(const std::string& config_text);

}  // namespace negacantor
