#include "euler/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace euler {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw DomainError("unknown format '" + s + "'");
}

ReportRow make_row(const VerificationRow& v, long time_ms) {
    return ReportRow{v.scheme.name,
                     v.scheme.n,
                     v.scheme.params_text(),
                     v.approx.to_string(),
                     v.abs_error.to_string(),
                     v.bound_value.to_string(),
                     v.passed(),
                     v.working_precision,
                     time_ms};
}

ReportRow make_row(const SchemeSpec& s, const ApproxResult& r, long time_ms) {
    return ReportRow{s.name,
                     s.n,
                     s.params_text(),
                     r.approx.to_string(),
                     r.abs_error ? r.abs_error->to_string() : std::string(),
                     "",
                     true,
                     r.working_precision,
                     time_ms};
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << csv_field(r.scheme) << ',' << r.n << ',' << csv_field(r.params) << ',' << r.approx << ','
           << r.abs_error << ',' << r.bound << ',' << (r.bound_ok ? "true" : "false") << ',' << r.prec_bits
           << ',' << r.time_ms << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["scheme"] = r.scheme;
        o["n"] = std::to_string(r.n);
        o["params"] = r.params;
        o["approx"] = r.approx;
        o["abs_error"] = r.abs_error;
        o["bound"] = r.bound;
        o["bound_ok"] = r.bound_ok;
        o["prec_bits"] = std::to_string(r.prec_bits);
        o["time_ms"] = std::to_string(r.time_ms);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_json(const std::string& text) {
    std::vector<ReportRow> rows;
    try {
        for (const auto& o : nlohmann::json::parse(text)) {
            rows.push_back(ReportRow{o.at("scheme").get<std::string>(),
                                     static_cast<std::uint32_t>(std::stoul(o.at("n").get<std::string>())),
                                     o.at("params").get<std::string>(),
                                     o.at("approx").get<std::string>(),
                                     o.at("abs_error").get<std::string>(),
                                     o.at("bound").get<std::string>(),
                                     o.at("bound_ok").get<bool>(),
                                     std::stol(o.at("prec_bits").get<std::string>()),
                                     std::stol(o.at("time_ms").get<std::string>())});
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("parse_json: ") + e.what());
    }
    return rows;
}

void emit(const std::vector<ReportRow>& rows, Format format, const std::string& destination,
          std::ostream& standard_out) {
    if (rows.empty()) throw DomainError("emit: no rows");
    const std::string text = format == Format::csv ? to_csv(rows) : to_json(rows);
    if (destination.empty() || destination == "-") {
        standard_out << text << std::flush;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw DomainError("emit: cannot open '" + destination + "' for writing");
    out << text;
    out.flush();
    if (!out) throw DomainError("emit: write to '" + destination + "' failed");
}

}  // namespace euler
