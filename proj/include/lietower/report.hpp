#pragma once

#include "lietower/rational.hpp"
#include "lietower/root.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lietower {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, flagged };

inline std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
    }
    return "?";
}

/// Integers stay numbers; everything else becomes "p/q".
inline Json to_json(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) return Json(c.get_num().get_si());
    return Json(to_string(c));
}

inline Json to_json(const Root& r) {
    Json a = Json::array();
    for (std::size_t i = 0; i < r.rank(); ++i) a.push_back(r[i]);
    return a;
}

inline Json to_json(const std::vector<Root>& roots) {
    Json a = Json::array();
    for (const Root& r : roots) a.push_back(to_json(r));
    return a;
}

inline Json to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const Rational& x : v) a.push_back(to_json(x));
    return a;
}

struct Check {
    std::string name;
    std::string anchor;
    Json expected;
    Json actual;
    Status status = Status::fail;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string type) : type_(std::move(type)) {}

    const std::string& type() const { return type_; }
    const std::vector<Check>& checks() const { return checks_; }

    /// pass iff expected == actual.
    void expect(std::string name, std::string anchor, Json expected, Json actual) {
        const Status s = expected == actual ? Status::pass : Status::fail;
        checks_.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(actual), s});
    }

    void add(Check c) { checks_.push_back(std::move(c)); }

    void append(const std::vector<Check>& more) { checks_.insert(checks_.end(), more.begin(), more.end()); }

    std::size_t count(Status s) const {
        std::size_t n = 0;
        for (const auto& c : checks_)
            if (c.status == s) ++n;
        return n;
    }

    bool ok() const { return count(Status::fail) == 0; }

    Json to_json() const {
        Json j;
        j["type"] = type_;
        j["checks"] = Json::array();
        for (const auto& c : checks_) {
            Json cj;
            cj["name"] = c.name;
            cj["anchor"] = c.anchor;
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            cj["status"] = to_string(c.status);
            j["checks"].push_back(std::move(cj));
        }
        j["summary"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"flagged", count(Status::flagged)}};
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "== " << type_ << " ==\n";
        for (const auto& c : checks_) {
            os << "[" << to_string(c.status) << "] " << c.name << "  expected " << c.expected.dump() << "  actual "
               << c.actual.dump() << "\n";
            if (c.status != Status::pass) os << "        (" << c.anchor << ")\n";
        }
        os << "summary: pass " << count(Status::pass) << ", fail " << count(Status::fail) << ", flagged "
           << count(Status::flagged) << "\n";
        return os.str();
    }

private:
    std::string type_;
    std::vector<Check> checks_;
};

enum class Format { text, json };

/// Compact JSON, one trailing newline.
inline void emit_report(std::ostream& os, const VerificationReport& r, Format fmt) {
    if (fmt == Format::json)
        os << r.to_json().dump() << "\n";
    else
        os << r.to_text();
}

inline void emit_reports(std::ostream& os, const std::vector<VerificationReport>& rs, Format fmt) {
    if (rs.size() == 1) return emit_report(os, rs.front(), fmt);
    if (fmt == Format::json) {
        Json a = Json::array();
        for (const auto& r : rs) a.push_back(r.to_json());
        os << a.dump() << "\n";
        return;
    }
    for (const auto& r : rs) os << r.to_text();
}

}  // namespace lietower
