// Command-line front end: loads a JSON schedule/matrix config and exposes
// the codec, evaluator, analysis, probability and self-affinity routines.
// Exit codes: 0 success, 1 validation/domain failure, 2 usage error.

#include <CLI11.hpp>

#include "negacantor/analysis.hpp"
#include "negacantor/codec.hpp"
#include "negacantor/evaluator.hpp"
#include "negacantor/params.hpp"
#include "negacantor/probability.hpp"
#include "negacantor/rng.hpp"
#include "negacantor/selfaffine.hpp"
#include "negacantor/selftest.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace negacantor;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Rat arg_rational(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (expected \"num/den\" or an integer)");
  }
}

NegaDigits arg_digits(const Params& ps, const std::string& text) {
  try {
    return parse_nega_digits(ps, text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << payload;
}

std::string eval_lines(const EvalResult& r) {
  std::ostringstream out;
  out << "value: " << fraction_string(r.value);
  if (r.exact()) out << " (exact)";
  else out << " ± " << fraction_string(r.error_bound);
  out << "\ndecimal: " << decimal_string(r.value, 17) << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating-Cantor digit codecs and the matrix-parameterised "
               "function family built on them"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("-c,--config", config_path, "JSON config with base sequence and matrix")
      ->envname("NEGACANTOR_CONFIG");

  std::string arg_x, arg_digits_text, arg_out = "-", arg_format = "csv", arg_tol = "1/1000000";
  long opt_depth = 32;
  int opt_quad_depth = 0, opt_grid = 512;
  long opt_n = 100000, opt_kmax = 12;
  std::uint64_t opt_seed = 1;
  bool opt_random = false;

  auto* c_validate = app.add_subcommand("validate", "check the admissibility system 1-4");

  auto* c_encode = app.add_subcommand("encode", "digit expansion of a rational in [0,1]");
  c_encode->add_option("x", arg_x, "argument, num/den or integer")->required();
  c_encode->add_option("--depth", opt_depth, "truncation depth (default 32)");

  auto* c_decode = app.add_subcommand("decode", "value (or value interval) of a digit string");
  c_decode->add_option("digits", arg_digits_text, "e.g. 1,0,2:lowhigh or :highlow")->required();

  auto* c_eval = app.add_subcommand("eval", "evaluate the function at a rational argument");
  c_eval->add_option("x", arg_x, "argument in [0,1]")->required();
  c_eval->add_option("--tol", arg_tol, "absolute error tolerance (default 1/1000000)");

  auto* c_integral = app.add_subcommand("integral", "Lebesgue integral over [0,1]");
  c_integral->add_option("--tol", arg_tol, "tail tolerance for the closed form");
  c_integral->add_option("--quadrature-depth", opt_quad_depth,
                         "also compute the cylinder-partition enclosure at this depth");

  auto* c_cylinder = app.add_subcommand("cylinder", "interval and increment of a digit prefix");
  c_cylinder->add_option("prefix", arg_digits_text, "comma-separated digits")->required();

  auto* c_derivative = app.add_subcommand("derivative", "derivative classification along digits");
  c_derivative->add_option("digits", arg_digits_text, "digit path, e.g. 0,1,0:lowhigh");
  c_derivative->add_flag("--random", opt_random, "classify a random digit germ instead");
  c_derivative->add_option("--depth", opt_depth, "germ length for --random (default 32)");
  c_derivative->add_option("--seed", opt_seed, "germ seed");

  auto* c_quotients = app.add_subcommand("quotients", "one-sided difference quotient sequences");
  c_quotients->add_option("x0", arg_digits_text, "nega-rational digits, e.g. 1:lowhigh")
      ->required();
  c_quotients->add_option("--kmax", opt_kmax, "number of quotient pairs (default 12)");
  c_quotients->add_option("--out", arg_out, "output path or - for stdout");
  c_quotients->add_option("--format", arg_format, "csv or json");

  auto* c_graph = app.add_subcommand("graph", "graph point cloud from the affine map system");
  c_graph->add_option("--depth", opt_depth, "digit depth")->required();
  c_graph->add_option("--out", arg_out, "output path or - for stdout");
  c_graph->add_option("--format", arg_format, "csv or json");

  auto* c_cdf = app.add_subcommand("sample-cdf",
                                   "sample the digit-distributed point and compare its "
                                   "empirical CDF with the function");
  c_cdf->add_option("--n", opt_n, "sample count")->required();
  c_cdf->add_option("--seed", opt_seed, "sampler seed")->required();
  c_cdf->add_option("--grid", opt_grid, "comparison grid size (default 512)");
  c_cdf->add_option("--depth", opt_depth, "digit depth per sample (default: auto)");
  c_cdf->add_option("--out", arg_out, "CSV output path or - for stdout");

  auto* c_selftest = app.add_subcommand("selftest", "run the full built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_selftest->parsed()) {
      return print_selftest(std::cout) == 0 ? 0 : 1;
    }

    if (config_path.empty()) throw UsageError("--config is required for this command");
    const auto [base, matrix] = parse_config_json(read_file(config_path));

    if (c_validate->parsed()) {
      const ValidationReport rep = validate(base, matrix);
      std::cout << (rep.structural_ok ? rep.summary() : "structure: FAIL (" +
                                                            rep.structural_error + ")\n");
      std::cout << (rep.passed() ? "valid\n" : "invalid\n");
      return rep.passed() ? 0 : 1;
    }

    const Params ps = Params::make(base, matrix);

    if (c_encode->parsed()) {
      std::cout << to_json_string(encode(ps, arg_rational(arg_x), opt_depth)) << "\n";
    } else if (c_decode->parsed()) {
      const Interval v = decode(ps, arg_digits(ps, arg_digits_text));
      std::cout << "{\"lo\": \"" << fraction_string(v.lo) << "\", \"hi\": \""
                << fraction_string(v.hi) << "\", \"exact\": " << (v.lo == v.hi ? "true" : "false")
                << "}\n";
      std::cout << "decimal: " << decimal_string(v.lo, 17);
      if (v.hi != v.lo) std::cout << " .. " << decimal_string(v.hi, 17);
      std::cout << "\n";
    } else if (c_eval->parsed()) {
      std::cout << eval_lines(eval(ps, arg_rational(arg_x), arg_rational(arg_tol)));
    } else if (c_integral->parsed()) {
      const EvalResult v = integral_closed_form(ps, arg_rational(arg_tol));
      std::cout << eval_lines(v);
      if (opt_quad_depth > 0) {
        const Interval enc = integral_quadrature(ps, opt_quad_depth);
        std::cout << "quadrature: [" << fraction_string(enc.lo) << ", "
                  << fraction_string(enc.hi) << "]\n";
        std::cout << "closed form inside enclosure: " << (enc.contains(v.value) ? "yes" : "NO")
                  << "\n";
      }
    } else if (c_cylinder->parsed()) {
      const NegaDigits prefix = arg_digits(ps, arg_digits_text);
      if (prefix.canonical()) throw UsageError("cylinder prefix takes plain digits, no tail tag");
      const CylinderId id{prefix.digits};
      const Interval iv = cylinder_interval(ps, id);
      std::cout << "{\"left\": \"" << fraction_string(iv.lo) << "\", \"right\": \""
                << fraction_string(iv.hi) << "\", \"width\": \"" << fraction_string(iv.width())
                << "\", \"increment\": \"" << fraction_string(cylinder_increment(ps, id))
                << "\"}\n";
    } else if (c_derivative->parsed()) {
      NegaDigits path;
      if (opt_random) {
        for (long j = 1; j <= opt_depth; ++j)
          path.digits.push_back(
              static_cast<int>(uniform_below(ps.d(j), rng_stream(opt_seed, 0xD1, j))));
      } else if (!arg_digits_text.empty()) {
        path = arg_digits(ps, arg_digits_text);
      } else {
        throw UsageError("derivative needs a digit path or --random");
      }
      const DerivativeClass cls = derivative_limit(ps, path);
      const long upto = static_cast<long>(path.digits.size());
      std::cout << "class: " << to_string(cls.tag) << "\n";
      std::cout << "log_rate: " << cls.log_rate << "\n";
      std::cout << "partial_product[" << upto
                << "]: " << fraction_string(derivative_partial_product(ps, path, upto)) << "\n";
    } else if (c_quotients->parsed()) {
      const auto rows =
          quotient_sequences(ps, arg_digits(ps, arg_digits_text), static_cast<int>(opt_kmax));
      write_output(arg_out, arg_format == "json" ? quotients_json(rows) + "\n"
                                                 : quotients_csv(rows));
    } else if (c_graph->parsed()) {
      if (ps.sign_class() != SignClass::AllPositive)
        std::cerr << "note: matrix is not strictly positive; the point cloud still satisfies the "
                     "composition identity pointwise\n";
      const auto pts = graph_points(ps, static_cast<int>(opt_depth));
      write_output(arg_out, arg_format == "json" ? graph_json(pts) + "\n" : graph_csv(pts));
    } else if (c_cdf->parsed()) {
      const CdfReport rep = cdf_distance(ps, opt_n, opt_grid, opt_seed,
                                         c_cdf->count("--depth") ? opt_depth : 0);
      write_output(arg_out, rep.csv());
      std::cout << "sup_distance: " << decimal_string(rep.distance, 6) << " (exact "
                << fraction_string(rep.distance) << ")\n";
      std::cout << "ks_reference: " << rep.ks_reference << "\n";
      std::cout << "depth: " << rep.depth << "\n";
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
