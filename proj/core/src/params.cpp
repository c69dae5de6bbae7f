#include "negacantor/params.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace negacantor {

using nlohmann::json;

int BaseSequence::d(long n) const {
  if (n < 1) throw std::out_of_range("position must be >= 1");
  const long pre = static_cast<long>(preperiod.size());
  if (n <= pre) return preperiod[n - 1];
  if (period.empty()) throw std::invalid_argument("base sequence has an empty period");
  return period[(n - 1 - pre) % period.size()];
}

std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::AllPositive: return "AllPositive";
    case SignClass::AllNonnegative: return "AllNonnegative";
    case SignClass::MixedSigns: return "MixedSigns";
  }
  return "?";
}

bool ValidationReport::property_failed(int property) const {
  for (const auto& v : violations)
    if (v.property == property) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (!structural_ok) {
    out << "structure: FAIL (" << structural_error << ")\n";
    return out.str();
  }
  for (int prop = 1; prop <= 4; ++prop) {
    out << "property " << prop << "°: ";
    bool failed = false;
    for (const auto& v : violations) {
      if (v.property != prop) continue;
      if (!failed) out << "FAIL";
      failed = true;
      out << " [n=" << v.position;
      if (v.digit >= 0) out << ", i=" << v.digit;
      out << ": " << v.detail << "]";
    }
    if (!failed) out << "pass";
    out << "\n";
  }
  out << "sign class: " << to_string(sign_class) << "\n";
  out << "contraction rho: " << fraction_string(rho) << "\n";
  return out.str();
}

std::string ValidationReport::to_json_string() const {
  json j;
  j["structural_ok"] = structural_ok;
  if (!structural_ok) j["structural_error"] = structural_error;
  j["passed"] = passed();
  j["sign_class"] = to_string(sign_class);
  j["rho"] = fraction_string(rho);
  j["violations"] = json::array();
  for (const auto& v : violations) {
    json e;
    e["property"] = v.property;
    e["position"] = v.position;
    if (v.digit >= 0) e["digit"] = v.digit;
    e["detail"] = v.detail;
    j["violations"].push_back(e);
  }
  return j.dump(2);
}

namespace {

struct Layout {
  std::vector<int> pre_d, per_d;
  std::vector<const ColumnSpec*> pre_cols, per_cols;
};

const ColumnSpec& raw_column(const MatrixP& m, long n) {
  const long pre = static_cast<long>(m.preperiod.size());
  if (n <= pre) return m.preperiod[n - 1];
  return m.period[(n - 1 - pre) % m.period.size()];
}

// Pads both preperiods to a common length and unrolls both periods to the
// lcm of their lengths, sampling the original accessors position by position.
Layout normalized_layout(const BaseSequence& base, const MatrixP& matrix, std::string& error) {
  Layout lay;
  if (base.period.empty()) {
    error = "base sequence period is empty";
    return lay;
  }
  if (matrix.period.empty()) {
    error = "matrix period is empty";
    return lay;
  }
  for (std::size_t i = 0; i < base.preperiod.size(); ++i) {
    if (base.preperiod[i] < 2) {
      error = "d_" + std::to_string(i + 1) + " = " + std::to_string(base.preperiod[i]) + " < 2";
      return lay;
    }
  }
  for (int v : base.period) {
    if (v < 2) {
      error = "period entry " + std::to_string(v) + " < 2";
      return lay;
    }
  }
  const long pre = std::max(base.preperiod.size(), matrix.preperiod.size());
  const long per = std::lcm(static_cast<long>(base.period.size()),
                            static_cast<long>(matrix.period.size()));
  for (long n = 1; n <= pre + per; ++n) {
    const int dn = base.d(n);
    const ColumnSpec& c = raw_column(matrix, n);
    if (static_cast<long>(c.probabilities.size()) != dn) {
      error = "column at n=" + std::to_string(n) + " has " +
              std::to_string(c.probabilities.size()) + " entries, expected d_n=" +
              std::to_string(dn);
      return lay;
    }
    if (n <= pre) {
      lay.pre_d.push_back(dn);
      lay.pre_cols.push_back(&c);
    } else {
      lay.per_d.push_back(dn);
      lay.per_cols.push_back(&c);
    }
  }
  return lay;
}

}  // namespace

ValidationReport validate(const BaseSequence& base, const MatrixP& matrix) {
  ValidationReport rep;
  std::string error;
  const Layout lay = normalized_layout(base, matrix, error);
  if (!error.empty()) {
    rep.structural_ok = false;
    rep.structural_error = error;
    return rep;
  }

  bool any_zero = false, any_negative = false;
  const long pre = static_cast<long>(lay.pre_d.size());
  const long per = static_cast<long>(lay.per_d.size());
  rep.rho = 1;
  for (long n = 1; n <= pre + per; ++n) {
    const ColumnSpec& c = n <= pre ? *lay.pre_cols[n - 1] : *lay.per_cols[n - pre - 1];
    Rat sum = 0;
    Rat max_abs = 0;
    for (std::size_t i = 0; i < c.probabilities.size(); ++i) {
      const Rat& pv = c.probabilities[i];
      if (pv <= -1 || pv >= 1) {
        rep.violations.push_back({1, n, static_cast<int>(i),
                                  fraction_string(pv) + " outside (-1,1)"});
      }
      if (pv == 0) any_zero = true;
      if (pv < 0) any_negative = true;
      if (i >= 1 && sum <= 0) {
        rep.violations.push_back({4, n, static_cast<int>(i),
                                  "beta_" + std::to_string(i) + " = " + fraction_string(sum)});
      }
      const Rat a = abs_rat(pv);
      if (a > max_abs) max_abs = a;
      sum += pv;
    }
    if (sum != 1) {
      rep.violations.push_back({2, n, -1, "column sum " + fraction_string(sum)});
    }
    if (n > pre) rep.rho *= max_abs;
  }
  if (rep.rho >= 1) {
    rep.violations.push_back({3, pre + 1, -1,
                              "per-period contraction " + fraction_string(rep.rho) + " >= 1"});
  }
  rep.sign_class = any_negative ? SignClass::MixedSigns
                 : any_zero     ? SignClass::AllNonnegative
                                : SignClass::AllPositive;
  return rep;
}

Params Params::make(const BaseSequence& base, const MatrixP& matrix) {
  ValidationReport rep = validate(base, matrix);
  if (!rep.passed()) {
    throw std::invalid_argument("invalid parameters:\n" +
                                (rep.structural_ok ? rep.summary() : rep.structural_error));
  }
  std::string error;
  const Layout lay = normalized_layout(base, matrix, error);

  Params ps;
  auto build = [](int dn, const ColumnSpec& spec) {
    Col c;
    c.d = dn;
    c.p = spec.probabilities;
    c.beta.resize(dn);
    Rat run = 0;
    c.beta_sum = 0;
    c.max_abs_p = 0;
    c.max_beta = 0;
    for (int i = 0; i < dn; ++i) {
      c.beta[i] = run;
      c.beta_sum += run;
      if (run > c.max_beta) c.max_beta = run;
      const Rat a = abs_rat(c.p[i]);
      if (a > c.max_abs_p) c.max_abs_p = a;
      run += c.p[i];
    }
    return c;
  };
  for (std::size_t i = 0; i < lay.pre_d.size(); ++i)
    ps.pre_.push_back(build(lay.pre_d[i], *lay.pre_cols[i]));
  for (std::size_t i = 0; i < lay.per_d.size(); ++i)
    ps.per_.push_back(build(lay.per_d[i], *lay.per_cols[i]));
  ps.sign_class_ = rep.sign_class;
  ps.rho_ = rep.rho;
  ps.report_ = std::move(rep);

  // Tail sup bounds per offset. For non-negative matrices the shifted
  // function ranges inside [0,1]; otherwise close the majorant series over
  // one period: M_o = maxbeta_{o+1} + maxp_{o+1} M_{o+1}, periodic in o.
  const long A = ps.preperiod_length();
  const long L = ps.period_length();
  ps.sup_.assign(A + L, Rat(1));
  if (ps.sign_class_ == SignClass::MixedSigns) {
    Rat rho_abs = 1;
    for (const auto& c : ps.per_) rho_abs *= c.max_abs_p;
    for (long r = 0; r < L; ++r) {
      Rat sum = 0, prod = 1;
      for (long t = 0; t < L; ++t) {
        const Col& c = ps.per_[(r + t) % L];
        sum += c.max_beta * prod;
        prod *= c.max_abs_p;
      }
      ps.sup_[A + r] = sum / (1 - rho_abs);
    }
    for (long o = A - 1; o >= 0; --o) {
      const Col& c = ps.pre_[o];
      ps.sup_[o] = c.max_beta + c.max_abs_p * ps.sup_[o + 1];
    }
  }
  return ps;
}

const Params::Col& Params::col(long n) const {
  if (n < 1) throw std::out_of_range("position must be >= 1");
  const long A = preperiod_length();
  if (n <= A) return pre_[n - 1];
  return per_[(n - 1 - A) % period_length()];
}

int Params::d(long n) const { return col(n).d; }

const std::vector<Rat>& Params::column(long n) const { return col(n).p; }

Rat Params::p(int i, long n) const {
  const Col& c = col(n);
  if (i < 0 || i >= c.d)
    throw std::out_of_range("digit " + std::to_string(i) + " outside alphabet at n=" +
                            std::to_string(n));
  return c.p[i];
}

Rat Params::beta(int i, long n) const {
  const Col& c = col(n);
  if (i < 0 || i >= c.d)
    throw std::out_of_range("digit " + std::to_string(i) + " outside alphabet at n=" +
                            std::to_string(n));
  return c.beta[i];
}

int Params::reflect(int i, long n) const {
  const Col& c = col(n);
  if (i < 0 || i >= c.d)
    throw std::out_of_range("digit " + std::to_string(i) + " outside alphabet at n=" +
                            std::to_string(n));
  return n % 2 == 0 ? c.d - 1 - i : i;
}

Rat Params::tilde_p(int i, long n) const { return col(n).p[reflect(i, n)]; }

Rat Params::tilde_beta(int i, long n) const { return col(n).beta[reflect(i, n)]; }

std::pair<Rat, Rat> Params::tilde(int i, long n) const {
  const int r = reflect(i, n);
  const Col& c = col(n);
  return {c.beta[r], c.p[r]};
}

const Rat& Params::tail_sup(long offset) const {
  if (offset < 0) throw std::out_of_range("offset must be >= 0");
  const long A = preperiod_length();
  if (offset < A) return sup_[offset];
  return sup_[A + (offset - A) % period_length()];
}

Int Params::radix_product(long n) const {
  Int r = 1;
  for (long j = 1; j <= n; ++j) r *= d(j);
  return r;
}

Rat Params::cylinder_width(long n) const { return Rat(1, radix_product(n)); }

const Rat& Params::column_beta_sum(long n) const { return col(n).beta_sum; }
const Rat& Params::column_max_abs_p(long n) const { return col(n).max_abs_p; }
const Rat& Params::column_max_beta(long n) const { return col(n).max_beta; }

namespace {

Rat rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"num/den\" string, got " +
                              v.dump());
}

std::vector<ColumnSpec> columns_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("matrix rows must be arrays");
  std::vector<ColumnSpec> cols;
  for (const auto& row : arr) {
    if (!row.is_array()) throw std::invalid_argument("matrix column must be an array");
    ColumnSpec c;
    for (const auto& v : row) c.probabilities.push_back(rational_from_json(v));
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

std::pair<BaseSequence, MatrixP> parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.contains("base") || !j.contains("matrix"))
    throw std::invalid_argument("config needs \"base\" and \"matrix\" objects");

  BaseSequence base;
  const json& jb = j["base"];
  if (jb.contains("preperiod"))
    base.preperiod = jb["preperiod"].get<std::vector<int>>();
  if (!jb.contains("period")) throw std::invalid_argument("base needs a \"period\" array");
  base.period = jb["period"].get<std::vector<int>>();

  MatrixP matrix;
  const json& jm = j["matrix"];
  if (jm.contains("preperiod")) matrix.preperiod = columns_from_json(jm["preperiod"]);
  if (!jm.contains("period")) throw std::invalid_argument("matrix needs a \"period\" array");
  matrix.period = columns_from_json(jm["period"]);
  return {std::move(base), std::move(matrix)};
}

std::string config_json(const BaseSequence& base, const MatrixP& matrix) {
  json j;
  j["base"]["preperiod"] = base.preperiod;
  j["base"]["period"] = base.period;
  auto cols_to_json = [](const std::vector<ColumnSpec>& cols) {
    json arr = json::array();
    for (const auto& c : cols) {
      json row = json::array();
      for (const auto& p : c.probabilities) row.push_back(fraction_string(p));
      arr.push_back(row);
    }
    return arr;
  };
  j["matrix"]["preperiod"] = cols_to_json(matrix.preperiod);
  j["matrix"]["period"] = cols_to_json(matrix.period);
  return j.dump(2);
}

Params load_params(const std::string& config_text) {
  auto [base, matrix] = parse_config_json(config_text);
  return Params::make(base, matrix);
}

}  // namespace negacantor
