#include "gcfib/report.hpp"

#include <cmath>
#include <sstream>

#include "gcfib/matrix_io.hpp"
#include "gcfib/scalar.hpp"

namespace gcfib {
namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

bool is_real(const std::complex<double>& l) {
  return std::abs(l.imag()) <= kRealnessTol * (1.0 + std::abs(l));
}

}  // namespace

std::string report_verdict(const ContactReport& r) {
  if (!r.is_local_fibration) {
    return "not a local fibration: the twisting matrix has a real eigenvalue, so nearby circles "
           "meet; contact verdict not applicable";
  }
  if (r.is_contact_at_origin) {
    return "local fibration; the orthogonal distribution is a contact structure at the base point";
  }
  return "NON-CONTACT FIBRATION: the circles fibre a tube around P, but Pf(A - A^T) = 0 so the "
         "orthogonal distribution is not a contact structure at the base point";
}

std::string format_report(const ContactReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << '\n';
  out << "is_local_fibration: " << yes_no(r.is_local_fibration) << '\n';
  out << "is_contact_at_origin: " << yes_no(r.is_contact_at_origin) << '\n';
  out << "pfaffian: " << format_double(r.pfaffian_value) << '\n';
  out << "contact_defect: " << format_double(r.contact_defect) << '\n';
  out << "contact_tolerance: " << format_double(r.contact_tolerance) << '\n';
  for (const auto& l : r.eigenvalues) {
    out << "eigenvalue: " << format_double(l.real()) << ' ' << format_double(l.imag())
        << (is_real(l) ? " real" : "") << '\n';
  }
  out << "verdict: " << report_verdict(r) << '\n';
  out << "twisting:\n" << format_matrix(r.twisting);
  out << "skew_part:\n" << format_matrix(r.skew_part.dense());
  return out.str();
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json report_json(const ContactReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["is_local_fibration"] = r.is_local_fibration;
  j["is_contact_at_origin"] = r.is_contact_at_origin;
  j["pfaffian"] = r.pfaffian_value;
  j["contact_defect"] = r.contact_defect;
  j["contact_tolerance"] = r.contact_tolerance;
  auto eig = nlohmann::ordered_json::array();
  for (const auto& l : r.eigenvalues) eig.push_back({l.real(), l.imag()});
  j["eigenvalues"] = std::move(eig);
  j["verdict"] = report_verdict(r);
  j["twisting"] = matrix_json(r.twisting);
  j["skew_part"] = matrix_json(r.skew_part.dense());
  return j;
}

}  // namespace gcfib
