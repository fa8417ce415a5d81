#include "euler/cli.hpp"
#include "euler/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace euler;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

// CSV text with the trailing time_ms column removed.
std::string without_time(const std::string& csv) {
    std::string out;
    for (const auto& l : lines(csv)) out += l.substr(0, l.rfind(',')) + "\n";
    return out;
}

}  // namespace

TEST_CASE("parameter parsing") {
    CHECK(cli::parse_params("a=1,b=-2") == std::vector<std::pair<std::string, long>>{{"a", 1}, {"b", -2}});
    const auto g = cli::parse_grid("n=1..3,tau=2");
    REQUIRE(g.size() == 2);
    CHECK(g[0].second == std::vector<long>{1, 2, 3});
    CHECK(g[1].second == std::vector<long>{2});
    CHECK_THROWS_AS(cli::parse_grid("n=3..1"), DomainError);
    CHECK_THROWS_AS(cli::parse_grid("n=1..2,n=3"), DomainError);
    CHECK_THROWS_AS(cli::parse_params("a"), DomainError);
    CHECK_THROWS_AS(cli::parse_params("a=x"), DomainError);
}

TEST_CASE("approx") {
    const Run r = run({"approx", "--scheme", "cor2_5", "--n", "1"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == kCsvHeader);
    CHECK(l[1].rfind("cor2_5,1,,5.772156649", 0) == 0);
    CHECK(l[1].find(",5.69606740887689114163866084179827686742821760670721e-11,") != std::string::npos);
    CHECK(l[1].find(",true,") != std::string::npos);
}

TEST_CASE("verify grid") {
    const Run r = run({"verify", "--bound", "eq2", "--grid", "n=1..4,tau=1..4"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.size() == 17);
    for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i].find(",true,") != std::string::npos);
}

TEST_CASE("grid mode skips inadmissible combinations") {
    const Run r = run({"verify", "--bound", "thm2", "--params", "b=1,c=1,r=1", "--grid", "n=1..2,a=0..3"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 5);  // a = 0, 1 only
    const Run none = run({"verify", "--bound", "thm2", "--params", "b=1,c=1,r=1", "--grid", "n=1..2,a=5..6"});
    CHECK(none.code == 2);
    CHECK(none.out.empty());
}

TEST_CASE("digits") {
    const Run r = run({"digits", "--digits", "30", "--scheme", "cor2_5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.577215664901532860606512090082\n");
}

TEST_CASE("oracle") {
    const Run r = run({"oracle", "--digits", "50"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.57721566490153286060651209008240243104215933593992\n");
}

TEST_CASE("compare is deterministic") {
    const std::vector<std::string> args{"compare", "--scheme", "rivoal,symmetric,cor1", "--params", "b=2,c=1,r=1",
                                        "--grid", "n=1..4"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(without_time(a.out) == without_time(b.out));
    // rivoal and symmetric reject b, c, r, so only cor1 rows remain
    const auto l = lines(a.out);
    CHECK(l.size() == 5);

    const Run c = run({"compare", "--scheme", "rivoal,symmetric", "--grid", "n=1..3", "--format", "json"});
    CHECK(c.code == 0);
    const auto rows = parse_json(c.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].scheme == "rivoal");
    CHECK(rows[3].scheme == "symmetric");
    CHECK(rows[5].n == 3);
    CHECK(rows[0].bound.empty());
}

TEST_CASE("exit codes") {
    const Run bad = run({"approx", "--scheme", "thm2", "--n", "1", "--params", "a=3,b=1,c=1,r=1"});
    CHECK(bad.code == 2);
    CHECK(bad.err == "error: invalid_parameters: thm2: hypothesis violated: 0 <= b - a\n");

    CHECK(run({"approx", "--scheme", "nosuch", "--n", "1"}).code == 2);
    CHECK(run({"approx", "--scheme", "cor2_5"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"approx", "--scheme", "cor2_5", "--n", "1", "--format", "xml"}).code == 2);
    CHECK(run({"approx", "--scheme", "cor2_5", "--n", "1", "--out", "/nonexistent-dir/x.csv"}).code == 2);
    CHECK(run({"digits", "--digits", "20", "--scheme", "rivoal"}).code == 2);

    const Run tol = run({"quadcheck", "--tol", "1e-30"});
    CHECK(tol.code == 3);
    CHECK(lines(tol.err).size() == 1);
    CHECK(tol.err.rfind("error: precision: ", 0) == 0);

    setenv("EULER_MAX_PREC_BITS", "100", 1);
    const Run cap = run({"approx", "--scheme", "cor2_5", "--n", "3"});
    unsetenv("EULER_MAX_PREC_BITS");
    CHECK(cap.code == 3);

    setenv("EULER_MAX_PREC_BITS", "lots", 1);
    CHECK(run({"oracle"}).code == 2);
    unsetenv("EULER_MAX_PREC_BITS");
}

TEST_CASE("help") {
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("quadcheck") != std::string::npos);
}
