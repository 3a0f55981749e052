#include "gcfib/germ.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gcfib/error.hpp"

namespace gcfib {
namespace {

// Radical-inverse (Halton) coordinate of `index` in base `prime`.
double radical_inverse(int index, int prime) {
  double result = 0.0;
  double f = 1.0 / prime;
  for (int i = index; i > 0; i /= prime) {
    result += f * (i % prime);
    f /= prime;
  }
  return result;
}

constexpr std::array<int, 16> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Deterministic cover of the closed ball: Halton points of the cube
// [-1, 1]^d pulled radially into the unit ball (points outside land on the
// sphere, where sum f_i^2 tends to peak), plus the axis endpoints.
std::vector<Vector> ball_samples(int d, double radius, int count) {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count + 2 * d));
  for (int k = 1; k <= count; ++k) {
    Vector h(d);
    for (int j = 0; j < d; ++j) h(j) = 2.0 * radical_inverse(k, kPrimes[j % kPrimes.size()]) - 1.0;
    out.push_back(radius * h / std::max(1.0, h.norm()));
  }
  for (int j = 0; j < d; ++j) {
    out.push_back(radius * Vector::Unit(d, j));
    out.push_back(-radius * Vector::Unit(d, j));
  }
  return out;
}

void require_point(const GermSpec& g, const Vector& x) {
  if (x.size() != g.dim()) {
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, germ needs " +
                         std::to_string(g.dim()));
  }
  if (!(x.squaredNorm() < 1.0)) throw DomainError("point x must satisfy |x| < 1");
}

// Embeds a vector of V-coordinates into R^{2n+2}.
Vector from_v(const Vector& v) {
  Vector out = Vector::Zero(v.size() + 2);
  out.tail(v.size()) = v;
  return out;
}

double h_value(const Vector& f) {
  const double s = f.squaredNorm();
  if (!(s < 1.0)) throw GermValidityError("sum of f_i^2 reaches 1; h(x) is not real");
  return std::sqrt(1.0 - s);
}

}  // namespace

GermSpec::GermSpec(int n, std::vector<Polynomial> twist_functions, Scalar domain_radius)
    : n_(n), twist_(std::move(twist_functions)), radius_(std::move(domain_radius)) {
  if (n_ < 1) throw GermValidityError("germ needs n >= 1");
  if (static_cast<int>(twist_.size()) != 2 * n_) {
    throw GermValidityError("germ with n = " + std::to_string(n_) + " needs " +
                            std::to_string(2 * n_) + " twist functions, got " +
                            std::to_string(twist_.size()));
  }
  for (std::size_t i = 0; i < twist_.size(); ++i) {
    if (twist_[i].variables() != 2 * n_) {
      throw GermValidityError("twist function f" + std::to_string(i + 1) + " must have " +
                              std::to_string(2 * n_) + " variables");
    }
    if (twist_[i].constant_term() != 0.0) {
      throw GermValidityError("twist function f" + std::to_string(i + 1) + " does not vanish at 0");
    }
  }
  const double r = radius_.value();
  if (!(r > 0.0 && r < 1.0)) throw GermValidityError("domain radius must lie in (0, 1)");
  for (const auto& x : ball_samples(dim(), r, kValiditySamples)) {
    if (!(twist_values(x).squaredNorm() < 1.0)) {
      throw GermValidityError("sum of f_i^2 reaches 1 inside the ball of radius " + radius_.to_string() +
                              "; h(x) would not be real");
    }
  }
}

Vector GermSpec::twist_values(const Vector& x) const {
  Vector f(dim());
  for (int i = 0; i < dim(); ++i) f(i) = twist_[i](x);
  return f;
}

Matrix GermSpec::twist_jacobian(const Vector& x) const {
  Matrix j(dim(), dim());
  for (int i = 0; i < dim(); ++i) j.row(i) = twist_[i].gradient(x).transpose();
  return j;
}

Vector base_point(const GermSpec& g, const Vector& x) {
  require_point(g, x);
  Vector p = from_v(x);
  p(0) = std::sqrt(1.0 - x.squaredNorm());
  return p;
}

Frame frame_at(const GermSpec& g, const Vector& x) {
  require_point(g, x);
  const int m = g.ambient_dim();
  const double c = std::sqrt(1.0 - x.squaredNorm());
  const Vector big_x = from_v(x);
  Frame frame{x, Matrix::Zero(m, m)};
  frame.vectors.col(0) = base_point(g, x);
  frame.vectors(1, 1) = 1.0;
  for (int i = 0; i < g.dim(); ++i) {
    Vector v = Vector::Unit(m, i + 2) - x(i) * big_x / (1.0 + c);
    v(0) -= x(i);
    frame.vectors.col(i + 2) = v;
  }
  return frame;
}

Vector q_point(const GermSpec& g, const Vector& x) {
  const Frame frame = frame_at(g, x);
  const Vector f = g.twist_values(x);
  Vector q = h_value(f) * frame.u2();
  for (int i = 0; i < g.dim(); ++i) q += f(i) * frame.v(i);
  return q;
}

Vector circle_point(const GermSpec& g, const Vector& x, double t) {
  return std::cos(t) * base_point(g, x) + std::sin(t) * q_point(g, x);
}

Matrix p_partials(const GermSpec& g, const Vector& x) {
  require_point(g, x);
  const double c = std::sqrt(1.0 - x.squaredNorm());
  Matrix out = Matrix::Zero(g.ambient_dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    out(0, j) = -x(j) / c;
    out(j + 2, j) = 1.0;
  }
  return out;
}

Matrix q_partials(const GermSpec& g, const Vector& x) {
  const Frame frame = frame_at(g, x);
  const int m = g.ambient_dim();
  const double c = std::sqrt(1.0 - x.squaredNorm());
  const Vector big_x = from_v(x);
  const Vector f = g.twist_values(x);
  const Matrix jac = g.twist_jacobian(x);
  const double h = h_value(f);
  const double inv = 1.0 / (1.0 + c);
  const double d_inv = 1.0 / (c * (1.0 + c) * (1.0 + c));  // d(1/(1+c))/dx_j = x_j * d_inv

  Matrix out(m, g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    Vector col = (-f.dot(jac.col(j)) / h) * frame.u2();
    for (int i = 0; i < g.dim(); ++i) {
      col += jac(i, j) * frame.v(i);
      if (f(i) == 0.0) continue;
      // d V_i(x) / d x_j
      Vector dv = -x(i) * inv * Vector::Unit(m, j + 2) - x(i) * x(j) * d_inv * big_x;
      if (i == j) {
        dv -= inv * big_x;
        dv(0) -= 1.0;
      }
      col += f(i) * dv;
    }
    out.col(j) = col;
  }
  return out;
}

Matrix p_partials_fd(const GermSpec& g, const Vector& x, double step) {
  Matrix out(g.ambient_dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    Vector e = step * Vector::Unit(g.dim(), j);
    out.col(j) = (base_point(g, x + e) - base_point(g, x - e)) / (2.0 * step);
  }
  return out;
}

Matrix q_partials_fd(const GermSpec& g, const Vector& x, double step) {
  Matrix out(g.ambient_dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    Vector e = step * Vector::Unit(g.dim(), j);
    out.col(j) = (q_point(g, x + e) - q_point(g, x - e)) / (2.0 * step);
  }
  return out;
}

Matrix twisting_matrix(const GermSpec& g) {
  Matrix a(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) a(i, j) = g.twist_functions()[i].linear_coefficient(j);
  }
  return a;
}

Matrix twisting_matrix_fd(const GermSpec& g, double step) {
  Matrix a(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    Vector e = step * Vector::Unit(g.dim(), j);
    a.col(j) = (g.twist_values(e) - g.twist_values(-e)) / (2.0 * step);
  }
  return a;
}

bool is_local_fibration(const GermSpec& g) { return !has_real_eigenvalue(twisting_matrix(g)); }

GermSpec linear_germ(const std::vector<std::vector<Scalar>>& twisting, Scalar domain_radius) {
  const auto d = static_cast<int>(twisting.size());
  if (d < 2 || d % 2 != 0) throw DimensionError("twisting matrix must be 2n x 2n");
  std::vector<Polynomial> f;
  f.reserve(twisting.size());
  for (const auto& row : twisting) {
    if (static_cast<int>(row.size()) != d) throw DimensionError("twisting matrix must be square");
    f.push_back(Polynomial::linear(row));
  }
  return GermSpec(d / 2, std::move(f), std::move(domain_radius));
}

GermSpec linear_germ(const Matrix& twisting, Scalar domain_radius) {
  require_square(twisting, "linear_germ");
  std::vector<std::vector<Scalar>> table(static_cast<std::size_t>(twisting.rows()));
  for (Eigen::Index i = 0; i < twisting.rows(); ++i) {
    for (Eigen::Index j = 0; j < twisting.cols(); ++j) table[i].emplace_back(twisting(i, j));
  }
  return linear_germ(table, std::move(domain_radius));
}

GermSpec hopf_germ(int n, Scalar domain_radius) {
  if (n < 1) throw DomainError("Hopf germ needs n >= 1");
  const int d = 2 * n;
  std::vector<std::vector<Scalar>> a(d, std::vector<Scalar>(d));
  for (int k = 0; k < n; ++k) {
    a[2 * k][2 * k + 1] = Rational(-1);
    a[2 * k + 1][2 * k] = Rational(1);
  }
  return linear_germ(a, std::move(domain_radius));
}

Matrix complex_structure(int ambient_dim) {
  if (ambient_dim < 2 || ambient_dim % 2 != 0) throw DimensionError("complex structure needs even dimension");
  Matrix j = Matrix::Zero(ambient_dim, ambient_dim);
  for (int k = 0; k < ambient_dim; k += 2) {
    j(k, k + 1) = -1.0;
    j(k + 1, k) = 1.0;
  }
  return j;
}

namespace {

std::vector<std::vector<Rational>> counterexample_table(int n) {
  if (n < 2) {
    throw DomainError(
        "no counterexample exists for n = 1: a 2x2 matrix without real eigenvalues has "
        "a12 * a21 < 0, so A - A^T is nonsingular and the distribution is contact");
  }
  const int d = 2 * n;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int k = 0; k < n; ++k) {
    m[2 * k][2 * k + 1] = Rational(1, 2);
    m[2 * k + 1][2 * k] = Rational(-1, 2);
  }
  m[0][d - 2] += Rational(1);
  m[1][d - 1] += Rational(1);
  return m;
}

}  // namespace

Matrix counterexample_matrix(int n) {
  const auto table = counterexample_table(n);
  const int d = 2 * n;
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = table[i][j].to_double();
  }
  return m;
}

GermSpec counterexample_germ(int n, Scalar domain_radius) {
  const auto display = counterexample_table(n);
  const int d = 2 * n;
  std::vector<std::vector<Scalar>> twisting(d, std::vector<Scalar>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) twisting[i][j] = display[j][i];
  }
  return linear_germ(twisting, std::move(domain_radius));
}

double circle_min_distance(const GermSpec& g, const Vector& x1, const Vector& x2,
                           const CircleSearch& search) {
  const Vector p1 = base_point(g, x1);
  const Vector q1 = q_point(g, x1);
  const Vector p2 = base_point(g, x2);
  const Vector q2 = q_point(g, x2);
  auto distance = [&](double t, double s) {
    return (std::cos(t) * p1 + std::sin(t) * q1 - std::cos(s) * p2 - std::sin(s) * q2).norm();
  };

  const int grid = std::max(1, search.grid);
  const double spacing = 2.0 * std::numbers::pi / grid;
  std::vector<Vector> first(static_cast<std::size_t>(grid));
  std::vector<Vector> second(static_cast<std::size_t>(grid));
  for (int a = 0; a < grid; ++a) {
    first[a] = std::cos(a * spacing) * p1 + std::sin(a * spacing) * q1;
    second[a] = std::cos(a * spacing) * p2 + std::sin(a * spacing) * q2;
  }
  double best = std::numeric_limits<double>::infinity();
  double t = 0.0;
  double s = 0.0;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      const double d = (first[a] - second[b]).norm();
      if (d < best) {
        best = d;
        t = a * spacing;
        s = b * spacing;
      }
    }
  }

  double step = spacing;
  for (int k = 0; k < search.descent_steps; ++k) {
    for (double* coord : {&t, &s}) {
      const double start = *coord;
      for (double delta : {step, -step}) {
        *coord = start + delta;
        const double d = distance(t, s);
        if (d < best) {
          best = d;
          break;
        }
        *coord = start;
      }
    }
    step *= 0.5;
  }
  return best;
}

}  // namespace gcfib
