#include "euler/transform.hpp"

#include <functional>
#include <sstream>

namespace euler {

std::string SchemeSpec::params_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : extra) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}

const std::vector<std::string>& scheme_names() {
    static const std::vector<std::string> names = {"elsner", "rivoal", "symmetric", "elsner2", "thm2",  "thm3",
                                                   "cor1",   "cor2",   "cor2_5",    "thm5",    "cor4",  "cor5"};
    return names;
}

namespace {

class Args {
public:
    explicit Args(const SchemeSpec& s) : s_(s) {}

    long get(const std::string& key) const {
        auto it = s_.extra.find(key);
        if (it == s_.extra.end()) throw DomainError(s_.name + ": missing parameter '" + key + "'");
        return it->second;
    }

    long get_or(const std::string& key, long fallback) const {
        auto it = s_.extra.find(key);
        return it == s_.extra.end() ? fallback : it->second;
    }

    void require(bool ok, const std::string& inequality) const {
        if (!ok) throw DomainError(s_.name + ": hypothesis violated: " + inequality);
    }

    void only(std::initializer_list<const char*> allowed) const {
        for (const auto& [k, v] : s_.extra) {
            bool known = false;
            for (const char* a : allowed) known = known || k == a;
            if (!known) throw DomainError(s_.name + ": unknown parameter '" + k + "'");
        }
    }

private:
    const SchemeSpec& s_;
};

std::uint32_t u32(long v, const std::string& what) {
    if (v < 0 || v > 0x7fffffffL) throw DomainError("parameter out of range: " + what);
    return static_cast<std::uint32_t>(v);
}

TransformParams single(long r, long n1, long tau1, long tau0) {
    TransformParams p;
    p.r = u32(r, "r");
    p.n = {u32(n1, "n_1")};
    p.tau = {u32(tau0, "tau_0"), u32(tau1, "tau_1")};
    return p;
}

// thm2: m=1, n_1=cn, tau_1=an, tau_0=bn.
TransformParams thm2_params(const Args& g, long a, long b, long c, long r, long n) {
    g.require(b >= 1, "b >= 1");
    g.require(c >= 1, "c >= 1");
    g.require(r >= 1, "r >= 1");
    g.require(a >= 0, "a >= 0");
    g.require(b - a >= 0, "0 <= b - a");
    g.require(b - a <= c, "b - a <= c");
    return single(r, c * n, a * n, b * n);
}

// thm3: m=2, n_1=n_2=cn, tau_1=tau_2=an, tau_0=bn.
TransformParams thm3_params(const Args& g, long a, long b, long c, long r, long n) {
    g.require(b >= 1, "b >= 1");
    g.require(c >= 1, "c >= 1");
    g.require(r >= 1, "r >= 1");
    g.require(a >= 0, "a >= 0");
    g.require(b - a >= 0, "0 <= b - a");
    g.require(b - a <= c, "b - a <= c");
    g.require(n * c >= 2, "n >= 2/c");
    TransformParams p;
    p.r = u32(r, "r");
    p.n = {u32(c * n, "n_1"), u32(c * n, "n_2")};
    p.tau = {u32(b * n, "tau_0"), u32(a * n, "tau_1"), u32(a * n, "tau_2")};
    return p;
}

// thm5: n_j = c_j n, tau_1 = an + 1, tau_{j+1} = n_j + tau_j + 1,
// tau_0 = bn + m.
TransformParams thm5_params(const Args& g, const std::vector<long>& c, long a, long b, long r, long n) {
    g.require(!c.empty(), "m >= 1");
    long C = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        g.require(c[j] >= 1, "c" + std::to_string(j + 1) + " >= 1");
        C += c[j];
    }
    g.require(r >= 1, "r >= 1");
    g.require(b >= 1, "b >= 1");
    g.require(a >= 0, "a >= 0");
    g.require(a - c.back() <= b - C, "a - c_m <= b - C");
    g.require(b - C <= a, "b - C <= a");
    const long m = static_cast<long>(c.size());
    TransformParams p;
    p.r = u32(r, "r");
    p.tau.push_back(u32(b * n + m, "tau_0"));
    long tau = a * n + 1;
    for (std::size_t j = 0; j < c.size(); ++j) {
        p.n.push_back(u32(c[j] * n, "n_j"));
        p.tau.push_back(u32(tau, "tau_j"));
        tau += c[j] * n + 1;
    }
    return p;
}

std::vector<long> thm5_widths(const Args& g, const SchemeSpec& s) {
    std::vector<long> c;
    for (long j = 1;; ++j) {
        auto it = s.extra.find("c" + std::to_string(j));
        if (it == s.extra.end()) break;
        c.push_back(it->second);
    }
    const long m = g.get_or("m", static_cast<long>(c.size()));
    g.require(m == static_cast<long>(c.size()), "m equals the number of c_j values");
    return c;
}

}  // namespace

TransformParams scheme(const SchemeSpec& s) {
    const Args g(s);
    const long n = s.n;
    g.require(n >= 1, "n >= 1");
    const std::string& name = s.name;

    if (name == "elsner") {
        g.only({"tau"});
        const long tau = g.get("tau");
        g.require(tau >= 1, "tau >= 1");
        return single(1, n, tau - 1, tau - 1);
    }
    if (name == "rivoal") {
        g.only({});
        return single(2, n, n, n);
    }
    if (name == "symmetric") {
        g.only({});
        return single(1, n, 0, n);
    }
    if (name == "elsner2") {
        g.only({"tau1", "tau2"});
        const long t1 = g.get("tau1");
        const long t2 = g.get("tau2");
        g.require(t1 >= 0, "tau1 >= 0");
        g.require(t2 >= 1, "tau2 >= 1");
        return single(1, n, t1, t2 - 1);
    }
    if (name == "thm2") {
        g.only({"a", "b", "c", "r"});
        return thm2_params(g, g.get("a"), g.get("b"), g.get("c"), g.get("r"), n);
    }
    if (name == "cor1") {
        g.only({"b", "c", "r"});
        const long b = g.get("b"), c = g.get("c"), r = g.get("r");
        g.require(b >= 1 && c >= 1 && r >= 1, "b, c, r >= 1");
        g.require(b >= c, "b >= c");
        return thm2_params(g, b - c, b, 2 * c, r, n);
    }
    if (name == "thm3") {
        g.only({"a", "b", "c", "r"});
        return thm3_params(g, g.get("a"), g.get("b"), g.get("c"), g.get("r"), n);
    }
    if (name == "cor2") {
        g.only({"b", "c", "r"});
        const long b = g.get("b"), c = g.get("c"), r = g.get("r");
        g.require(b >= 1 && c >= 1 && r >= 1, "b, c, r >= 1");
        g.require(2 * b >= c, "2b >= c");
        g.require(c % 2 == 0, "c even");
        return thm3_params(g, b - c / 2, b, c, r, n);
    }
    if (name == "cor2_5") {
        g.only({});
        return thm3_params(g, 2, 4, 4, 1, n);
    }
    if (name == "thm5") {
        std::vector<long> c = thm5_widths(g, s);
        for (const auto& [k, v] : s.extra) {
            const bool ok = k == "a" || k == "b" || k == "r" || k == "m" ||
                            (k.size() > 1 && k[0] == 'c' && k.find_first_not_of("0123456789", 1) == std::string::npos &&
                             std::stol(k.substr(1)) >= 1 && std::stol(k.substr(1)) <= static_cast<long>(c.size()));
            if (!ok) throw DomainError("thm5: unknown parameter '" + k + "'");
        }
        return thm5_params(g, c, g.get("a"), g.get("b"), g.get("r"), n);
    }
    if (name == "cor4" || name == "cor5") {
        g.only({"c", "m", "r"});
        const long c = g.get("c"), m = g.get("m"), r = g.get("r");
        g.require(c >= 1, "c >= 1");
        g.require(m >= 1, "m >= 1");
        g.require(r >= 1, "r >= 1");
        const std::vector<long> widths(static_cast<std::size_t>(m), 2 * c);
        if (name == "cor4") return thm5_params(g, widths, c, 2 * m * c, r, n);
        return thm5_params(g, widths, 0, (2 * m - 1) * c, r, n);
    }
    throw DomainError("unknown scheme '" + name + "'");
}

}  // namespace euler
