#pragma once

#include <string>

#include "gcfib/contact.hpp"
#include <json.hpp>

namespace gcfib {

/// "key: value" lines followed by the twisting and skew matrices in the
/// shared matrix text format. Deterministic byte-for-byte.
std::string format_report(const ContactReport& r);

/// One-line verdict; the non-contact fibration case is spelled out.
std::string report_verdict(const ContactReport& r);

nlohmann::ordered_json report_json(const ContactReport& r);

nlohmann::ordered_json matrix_json(const Matrix& m);

}  // namespace gcfib
