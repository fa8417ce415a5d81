#include "euler/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace euler;

namespace {

ReportRow sample(int i) {
    return ReportRow{"thm2", static_cast<std::uint32_t>(i), "a=0,b=1,c=1,r=1", "5.7721566490153286e-01",
                     "1.0e-20", i % 2 ? "" : "2.5e-01", i % 3 != 0, 128 + i, i};
}

}  // namespace

TEST_CASE("csv") {
    const std::string text = to_csv({sample(1)});
    std::istringstream is(text);
    std::string header, row, extra;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == kCsvHeader);
    CHECK(row == "thm2,1,\"a=0,b=1,c=1,r=1\",5.7721566490153286e-01,1.0e-20,,true,129,1");
    CHECK_FALSE(std::getline(is, extra));
}

TEST_CASE("json round trip") {
    std::vector<ReportRow> rows;
    for (int i = 0; i < 7; ++i) rows.push_back(sample(i));
    CHECK(parse_json(to_json(rows)) == rows);
    CHECK(to_json(rows).find("\"prec_bits\": \"128\"") != std::string::npos);
    CHECK_THROWS_AS(parse_json("[{\"scheme\": 1}]"), DomainError);
}

TEST_CASE("rows from verification") {
    const VerificationRow v = verify(SchemeSpec{"elsner", 2, {{"tau", 3}}});
    const ReportRow r = make_row(v, 5);
    CHECK(r.scheme == "elsner");
    CHECK(r.params == "tau=3");
    CHECK(r.bound_ok);
    CHECK(r.prec_bits == v.working_precision);
    // full precision survives the decimal round trip
    const BigReal back = BigReal::from_string(r.approx, Precision(r.prec_bits));
    CHECK(back == v.approx);
}

TEST_CASE("emit") {
    std::ostringstream out;
    CHECK_THROWS_AS(emit({}, Format::csv, "", out), DomainError);
    emit({sample(2)}, Format::csv, "-", out);
    CHECK(out.str().rfind(kCsvHeader, 0) == 0);

    const auto path = std::filesystem::temp_directory_path() / "euler_report_test.json";
    emit({sample(2), sample(3)}, Format::json, path.string(), out);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(parse_json(buf.str()).size() == 2);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(emit({sample(2)}, Format::csv, "/nonexistent-dir/x.csv", out), DomainError);
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}
