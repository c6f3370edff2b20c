#pragma once

// JSON and CSV encodings of reports, polynomials, and zero/figure data.
// Both formats carry the same records; the schema string is versioned.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "planepart/aberth.hpp"
#include "planepart/asymptotics.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/report.hpp"
#include "planepart/zero_tables.hpp"

namespace planepart {

inline constexpr const char* kReportSchema = "planepart-report v1";
inline constexpr const char* kPolySchema = "planepart-poly v1";

inline nlohmann::json report_to_json(const IneqReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries()) {
        nlohmann::json je;
        je["i"] = e.i;
        if (e.has_pair()) je["j"] = e.j;
        je["verdict"] = to_string(e.verdict);
        if (e.witness) je["witness"] = *e.witness;
        entries.push_back(std::move(je));
    }
    return nlohmann::json{{"schema", kReportSchema},
                          {"kind", to_string(r.kind())},
                          {"range", r.range()},
                          {"entries", std::move(entries)}};
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string report_to_csv(const IneqReport& r) {
    std::ostringstream out;
    out << "i,j,verdict,witness\n";
    for (const auto& e : r.entries()) {
        out << e.i << ",";
        if (e.has_pair()) out << e.j;
        out << "," << to_string(e.verdict) << ",";
        if (e.witness) out << csv_escape(*e.witness);
        out << "\n";
    }
    return out.str();
}

inline nlohmann::json poly_to_json(const ExactPoly& p, long n = -1) {
    nlohmann::json nums = nlohmann::json::array();
    for (const auto& c : p.numerators()) nums.push_back(c.get_str());
    return nlohmann::json{{"schema", kPolySchema},
                          {"n", n >= 0 ? n : p.degree()},
                          {"denominator", p.denominator().get_str()},
                          {"numerators", std::move(nums)}};
}

inline ExactPoly poly_from_json(const nlohmann::json& j) {
    std::vector<mpz_class> nums;
    for (const auto& s : j.at("numerators")) {
        mpz_class v;
        if (v.set_str(s.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad numerator in polynomial json");
        nums.push_back(std::move(v));
    }
    mpz_class den;
    if (den.set_str(j.at("denominator").get<std::string>(), 10) != 0)
        throw std::invalid_argument("bad denominator in polynomial json");
    return ExactPoly(std::move(nums), std::move(den));
}

// Figure rows: one line per complex zero, conjugates both present.
inline std::string complex_roots_to_csv(
    const std::vector<std::tuple<long, long, ComplexRootEstimate>>& rows) {
    std::ostringstream out;
    out << "a,b,re,im,kind\n";
    for (const auto& [a, b, r] : rows) {
        out << a << "," << b << "," << r.re.to_string(17) << "," << r.im.to_string(17) << ","
            << (r.classified_real ? "real" : "complex") << "\n";
    }
    return out.str();
}

inline std::string corollary_to_csv(const CorollaryReport& r, int digits = 20) {
    std::ostringstream out;
    out << "n,lower,middle,upper,verdict\n";
    for (const auto& s : r.samples)
        out << s.n << "," << s.lower.mid().to_string(digits) << ","
            << s.middle.mid().to_string(digits) << "," << s.upper.mid().to_string(digits) << ","
            << to_string(s.verdict) << "\n";
    return out.str();
}

inline std::string konkav_to_csv(const KonkavReport& r, int digits = 20) {
    std::ostringstream out;
    out << "n,residual_lo,residual_hi\n";
    for (const auto& s : r.samples)
        out << s.n << "," << s.residual.lower().to_string(digits) << ","
            << s.residual.upper().to_string(digits) << "\n";
    return out.str();
}

}  // namespace planepart
