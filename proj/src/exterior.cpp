#include "gcfib/exterior.hpp"

#include <bit>
#include <string>

#include "gcfib/error.hpp"

namespace gcfib {
namespace {

using Mask = AlternatingForm::Mask;

// Sign of the permutation sorting (indices of a) followed by (indices of b),
// a and b disjoint: one transposition per pair (i in a, j in b) with i > j.
int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Mask and permutation sign for a list of indices; sign 0 on repeats.
std::pair<Mask, int> sort_indices(std::span<const int> indices, int ambient_dim) {
  Mask mask = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    const int i = indices[a];
    if (i < 0 || i >= ambient_dim) {
      throw DimensionError("form index " + std::to_string(i) + " outside 0.." +
                           std::to_string(ambient_dim - 1));
    }
    if (mask & (Mask{1} << i)) return {mask, 0};
    mask |= Mask{1} << i;
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[b] < i) ++inversions;
    }
  }
  return {mask, inversions % 2 == 0 ? 1 : -1};
}

}  // namespace

AlternatingForm::AlternatingForm(int ambient_dim, int degree)
    : ambient_dim_(ambient_dim), degree_(degree) {
  if (ambient_dim < 1 || ambient_dim > kMaxAmbientDim) {
    throw DimensionError("ambient dimension must be in 1.." + std::to_string(kMaxAmbientDim));
  }
  if (degree < 0) throw DimensionError("form degree must be non-negative");
}

AlternatingForm AlternatingForm::basis_one_form(int ambient_dim, int index) {
  AlternatingForm f(ambient_dim, 1);
  f.set_coefficient({index}, 1.0);
  return f;
}

double AlternatingForm::coefficient(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != degree_) {
    throw DimensionError("coefficient lookup needs " + std::to_string(degree_) + " indices");
  }
  auto [mask, sign] = sort_indices(indices, ambient_dim_);
  if (sign == 0) return 0.0;
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? 0.0 : sign * it->second;
}

void AlternatingForm::set_coefficient(std::span<const int> indices, double value) {
  if (static_cast<int>(indices.size()) != degree_) {
    throw DimensionError("coefficient needs " + std::to_string(degree_) + " indices");
  }
  auto [mask, sign] = sort_indices(indices, ambient_dim_);
  if (sign == 0) throw ValidationError("repeated index in an alternating form coefficient");
  if (value == 0.0) {
    coeffs_.erase(mask);
  } else {
    coeffs_[mask] = sign * value;
  }
}

bool AlternatingForm::is_zero() const {
  for (const auto& [mask, c] : coeffs_) {
    if (c != 0.0) return false;
  }
  return true;
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& other) {
  if (other.ambient_dim_ != ambient_dim_ || other.degree_ != degree_) {
    throw DimensionError("adding forms of different ambient dimension or degree");
  }
  for (const auto& [mask, c] : other.coeffs_) coeffs_[mask] += c;
  return *this;
}

AlternatingForm operator*(double s, AlternatingForm f) {
  for (auto& [mask, c] : f.coeffs_) c *= s;
  return f;
}

AlternatingForm wedge(const AlternatingForm& f, const AlternatingForm& g) {
  if (f.ambient_dim_ != g.ambient_dim_) {
    throw DimensionError("wedge of forms on R^" + std::to_string(f.ambient_dim_) + " and R^" +
                         std::to_string(g.ambient_dim_));
  }
  AlternatingForm out(f.ambient_dim_, f.degree_ + g.degree_);
  if (out.degree_ > out.ambient_dim_) return out;
  for (const auto& [a, ca] : f.coeffs_) {
    for (const auto& [b, cb] : g.coeffs_) {
      if (a & b) continue;
      out.coeffs_[a | b] += shuffle_sign(a, b) * ca * cb;
    }
  }
  return out;
}

AlternatingForm power(const AlternatingForm& f, int n) {
  if (f.degree() != 2) throw DimensionError("power is defined here for 2-forms only");
  if (n < 1) throw DomainError("power exponent must be positive");
  AlternatingForm out = f;
  for (int k = 1; k < n; ++k) out = wedge(out, f);
  return out;
}

AlternatingForm bivector_from_skew(const SkewMatrix& b) {
  AlternatingForm omega(b.dim(), 2);
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = i + 1; j < b.dim(); ++j) {
      if (b(i, j) != 0.0) omega.set_coefficient({i, j}, b(i, j));
    }
  }
  return omega;
}

double top_coefficient(const AlternatingForm& f) {
  if (f.degree() != f.ambient_dim()) {
    throw DimensionError("top coefficient needs a form of degree " + std::to_string(f.ambient_dim()) +
                         ", got degree " + std::to_string(f.degree()));
  }
  const Mask full = f.ambient_dim() == 32 ? ~Mask{0} : (Mask{1} << f.ambient_dim()) - 1;
  auto it = f.terms().find(full);
  return it == f.terms().end() ? 0.0 : it->second;
}

}  // namespace gcfib
