#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "grace/config.hpp"
#include "grace/verify.hpp"

namespace grace {

// Stable serialization of a sweep report. Keys come out sorted and numbers
// are integers, so equal reports serialize to equal bytes. Wall time is
// deliberately not part of the payload.
nlohmann::json report_to_json(const VerificationReport& report);

std::string report_to_csv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

// Serializes any report object (sweep report or single-result JSON) in the
// requested format to path or, when path is empty, to out. I/O failures
// surface as IoError naming the path.
void emit_report(const nlohmann::json& payload, OutputFormat format,
                 const std::string& path, std::ostream& out);
void emit_report(const VerificationReport& report, OutputFormat format,
                 const std::string& path, std::ostream& out);

// Single-result payloads are emitted as JSON in all formats except csv,
// where they flatten to key,value rows.
std::string single_result_csv(const nlohmann::json& payload);

}  // namespace grace
