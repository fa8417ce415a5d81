#pragma once

// Tabular output of computed rows as CSV or JSON. Every number crosses the
// interface as a decimal string.

#include "euler/bounds.hpp"
#include "euler/transform.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace euler {

struct ReportRow {
    std::string scheme;
    std::uint32_t n = 0;
    /// Canonical "k=v,k=v".
    std::string params;
    std::string approx;
    std::string abs_error;
    /// Empty when the scheme has no printed bound.
    std::string bound;
    bool bound_ok = true;
    long prec_bits = 0;
    long time_ms = 0;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

enum class Format { csv, json };

Format parse_format(const std::string& s);

inline constexpr const char* kCsvHeader = "scheme,n,params,approx,abs_error,bound,bound_ok,prec_bits,time_ms";

ReportRow make_row(const VerificationRow& v, long time_ms);
/// Row for a scheme without a printed bound: bound is empty and bound_ok is true.
ReportRow make_row(const SchemeSpec& s, const ApproxResult& r, long time_ms);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);
/// Inverse of to_json.
std::vector<ReportRow> parse_json(const std::string& text);

/// Writes rows to `destination` ("" or "-" for stdout). Throws DomainError
/// for an empty row set or an unwritable destination.
void emit(const std::vector<ReportRow>& rows, Format format, const std::string& destination,
          std::ostream& standard_out);

}  // namespace euler
