#include "gcfib/cli.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gcfib/contact.hpp"
#include "gcfib/error.hpp"
#include "gcfib/germ_io.hpp"
#include "gcfib/grassmann.hpp"
#include "gcfib/matrix_io.hpp"
#include "gcfib/pfaffian.hpp"
#include "gcfib/report.hpp"

namespace gcfib::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Collects results as "key: value" lines (text) or a single JSON object
// per invocation (json-lines), preserving insertion order.
class Emitter {
 public:
  Emitter(std::ostream& out, OutputFormat format)
      : out_(out), format_(format), exceptions_(std::uncaught_exceptions()) {}
  Emitter(const Emitter&) = delete;
  Emitter& operator=(const Emitter&) = delete;
  ~Emitter() {
    if (format_ == OutputFormat::kJsonLines && std::uncaught_exceptions() == exceptions_) {
      out_ << record_.dump() << '\n';
    }
  }

  void put(const std::string& key, const std::string& text, nlohmann::ordered_json json) {
    if (format_ == OutputFormat::kText) {
      out_ << key << ": " << text << '\n';
    } else {
      record_[key] = std::move(json);
    }
  }
  void put(const std::string& key, double v) { put(key, format_double(v), v); }
  void put(const std::string& key, bool v) { put(key, v ? "true" : "false", v); }
  void put(const std::string& key, int v) { put(key, std::to_string(v), v); }
  void put(const std::string& key, const char* v) { put(key, std::string(v), std::string(v)); }
  void put_string(const std::string& key, const std::string& v) { put(key, v, v); }

  void put_vector(const std::string& key, const Vector& v) {
    std::string text;
    auto arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i > 0) text += ' ';
      text += format_double(v(i));
      arr.push_back(v(i));
    }
    put(key, text, std::move(arr));
  }

  void put_matrix(const std::string& key, const Matrix& m) {
    if (format_ == OutputFormat::kText) {
      out_ << key << ":\n" << format_matrix(m);
    } else {
      record_[key] = matrix_json(m);
    }
  }

  void put_report(const ContactReport& r) {
    if (format_ == OutputFormat::kText) {
      out_ << format_report(r);
    } else {
      record_["report"] = report_json(r);
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  int exceptions_;
  nlohmann::ordered_json record_ = nlohmann::ordered_json::object();
};

const std::string& require_input(const CliConfig& c) {
  if (!c.input_path) throw UsageError(c.subcommand + " needs an input file");
  return *c.input_path;
}

int require_n(const CliConfig& c) {
  if (!c.n) throw UsageError(c.subcommand + " needs --n");
  if (*c.n < 1) throw UsageError("--n must be positive");
  return *c.n;
}

bool close_relative(double a, double b, double tol, double scale) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Vector sample_ball(std::mt19937_64& rng, int d, double radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  return radius * std::pow(unit(rng), 1.0 / d) * v / v.norm();
}

void emit_germ_and_report(const GermSpec& g, const CliConfig& c, Emitter& emit) {
  if (c.out_path) {
    write_germ_file(g, *c.out_path);
    const GermSpec reread = read_germ_file(*c.out_path);
    if (!(reread == g)) throw Error("germ file '" + *c.out_path + "' did not round-trip");
    emit.put_string("germ_file", *c.out_path);
  }
  emit.put_report(analyze(g));
}

}  // namespace

int run_pfaffian(const CliConfig& c, std::ostream& out) {
  const ScalarMatrix parsed = read_matrix_file(require_input(c));
  if (parsed.rows != parsed.cols) {
    throw DimensionError("Pfaffian needs a square matrix, got " + std::to_string(parsed.rows) + "x" +
                         std::to_string(parsed.cols));
  }
  if (parsed.rows % 2 != 0) {
    throw DimensionError("Pfaffian needs an even dimension, got " + std::to_string(parsed.rows));
  }
  const bool exact = parsed.all_exact();
  if (exact) require_exactly_skew(parsed);
  const SkewMatrix b = SkewMatrix::from_dense(parsed.to_matrix(), exact ? 0.0 : 1e-12);

  Emitter emit(out, c.format);
  emit.put("dim", b.dim());
  const double det = determinant(b.dense());
  const double pf_normal = pfaffian_normal_form(b);
  double pf = pf_normal;
  if (b.dim() <= kMaxCombinatorialDim) {
    pf = pfaffian_combinatorial(b);
    emit.put("pfaffian_combinatorial", pf);
  }
  emit.put("pfaffian_normal_form", pf_normal);
  if (exact && b.dim() <= kMaxCombinatorialDim) {
    const Rational pf_exact = pfaffian_by_matchings<Rational>(
        b.dim(), [&parsed](int i, int j) { return parsed.at(i, j).rational(); });
    emit.put_string("pfaffian_exact", pf_exact.to_string());
  }
  emit.put("determinant", det);
  emit.put("residual", pf * pf - det);
  return kOk;
}

int run_eigs(const CliConfig& c, std::ostream& out) {
  const Matrix a = read_matrix_file(require_input(c)).to_matrix();
  require_square(a, "eigs");
  auto values = eigenvalues(a);
  Emitter emit(out, c.format);
  emit.put("dim", static_cast<int>(a.rows()));
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& l = values[k];
    emit.put("eigenvalue_" + std::to_string(k + 1), format_double(l.real()) + " " + format_double(l.imag()),
             nlohmann::ordered_json::array({l.real(), l.imag()}));
  }
  const bool real = has_real_eigenvalue(a);
  emit.put("has_real_eigenvalue", real);
  if (a.rows() == 2) emit.put("criterion_2x2_no_real_eigenvalues", no_real_eigs_2x2_criterion(a));
  if (a.rows() % 2 == 0) {
    const SkewMatrix skew = SkewMatrix::skew_part(a);
    emit.put("pfaffian_of_skew_part", pfaffian(skew));
    emit.put("determinant_of_skew_part", determinant(skew.dense()));
  }
  return kOk;
}

int run_hopf(const CliConfig& c, std::ostream& out) {
  const GermSpec g = hopf_germ(require_n(c));
  Emitter emit(out, c.format);
  emit.put_string("family", "hopf");
  emit_germ_and_report(g, c, emit);
  return kOk;
}

int run_counterexample(const CliConfig& c, std::ostream& out) {
  const int n = require_n(c);
  const GermSpec g = counterexample_germ(n);
  Emitter emit(out, c.format);
  emit.put_string("family", "counterexample");
  emit.put_matrix("constructed_matrix", counterexample_matrix(n));
  emit_germ_and_report(g, c, emit);
  return kOk;
}

int run_analyze(const CliConfig& c, std::ostream& out) {
  const GermSpec g = read_germ_file(require_input(c));
  Emitter emit(out, c.format);
  emit.put_report(analyze(g));
  return kOk;
}

int run_tube_sample(const CliConfig& c, std::ostream& out) {
  const GermSpec g = read_germ_file(require_input(c));
  const double eps = g.domain_radius();
  const double radius = c.radius.value_or(std::min(0.05, eps));
  if (!(radius > 0.0) || radius > eps) {
    throw DomainError("--radius " + format_double(radius) + " must lie in (0, domain_radius = " +
                      g.domain_radius_exact().to_string() + "]");
  }
  const int samples = c.samples.value_or(200);
  if (samples < 1) throw UsageError("--samples must be positive");
  std::mt19937_64 rng(c.seed.value_or(0));

  double best = std::numeric_limits<double>::infinity();
  Vector best_x1;
  Vector best_x2;
  for (int k = 0; k < samples; ++k) {
    const Vector x1 = sample_ball(rng, g.dim(), radius);
    const Vector x2 = sample_ball(rng, g.dim(), radius);
    const double d = circle_min_distance(g, x1, x2);
    if (d < best) {
      best = d;
      best_x1 = x1;
      best_x2 = x2;
    }
  }

  Emitter emit(out, c.format);
  emit.put("radius", radius);
  emit.put("samples", samples);
  emit.put("seed", std::to_string(c.seed.value_or(0)), c.seed.value_or(0));
  emit.put("min_distance", best);
  emit.put_vector("argmin_x1", best_x1);
  emit.put_vector("argmin_x2", best_x2);
  // Distance from the base circle to the circle at radius * e_j.
  const Vector origin = Vector::Zero(g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    const double d = circle_min_distance(g, origin, radius * Vector::Unit(g.dim(), j));
    emit.put("axis_" + std::to_string(j + 1),
             "distance " + format_double(d) + " ratio " + format_double(d / radius),
             nlohmann::ordered_json{{"distance", d}, {"ratio", d / radius}});
  }
  return kOk;
}

int run_validate(const CliConfig& c, std::ostream& out) {
  const GermSpec g = read_germ_file(require_input(c));
  const int d = g.dim();
  Emitter emit(out, c.format);
  bool all = true;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    emit.put(name, std::string(ok ? "pass" : "FAIL") + " (" + detail + ")",
             nlohmann::ordered_json{{"pass", ok}, {"detail", detail}});
    all = all && ok;
  };

  const Vector a0 = alpha_coefficients(g, Vector::Zero(d), 0.0);
  const double max_a = a0.head(d).cwiseAbs().maxCoeff();
  check("alpha_is_dt_at_origin", max_a <= 1e-12 && a0(d) == 1.0,
        "max |a_j(0,0)| = " + format_double(max_a));

  const double fd = validate_d_alpha_fd(g);
  check("d_alpha_finite_difference", fd <= 1e-6, "max deviation " + format_double(fd));

  check("alpha_prime_matches", alpha_prime_check(g), "d alpha' = d alpha and alpha' = dt at origin");

  const SkewMatrix b = contact_skew_matrix(g);
  const double via_forms = contact_defect(g);
  const double via_pfaffian = factorial(g.n()) * pfaffian(b);
  const double scale = factorial(g.n()) * std::pow(b.infinity_norm(), g.n());
  check("pfaffian_consistency", close_relative(via_forms, via_pfaffian, 1e-9, scale),
        "(d alpha)^n coefficient " + format_double(via_forms) + ", n! Pf(B) " + format_double(via_pfaffian));

  const Matrix a = twisting_matrix(g);
  const bool fibration = is_local_fibration(g);
  const bool transverse = transverse_to_bad_cone(tangent_basis_from_twisting(a)).transverse;
  check("fibration_bridge", fibration == transverse,
        std::string("eigenvalue test ") + (fibration ? "true" : "false") + ", chart transversality " +
            (transverse ? "true" : "false"));

  const ContactReport r = analyze(g);
  emit.put("is_local_fibration", r.is_local_fibration);
  emit.put("is_contact_at_origin", r.is_contact_at_origin);
  emit.put_string("verdict", report_verdict(r));
  return all ? kOk : kCheckFailed;
}

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "pfaffian") return run_pfaffian(c, out);
    if (c.subcommand == "eigs") return run_eigs(c, out);
    if (c.subcommand == "hopf") return run_hopf(c, out);
    if (c.subcommand == "counterexample") return run_counterexample(c, out);
    if (c.subcommand == "analyze") return run_analyze(c, out);
    if (c.subcommand == "tube-sample") return run_tube_sample(c, out);
    if (c.subcommand == "validate") return run_validate(c, out);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    if (c.subcommand == "counterexample") {
      err << "refused: " << e.what() << '\n';
      return kUnsupported;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace gcfib::cli
