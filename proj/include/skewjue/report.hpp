#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "io.hpp"
#include "rational.hpp"

namespace skewjue {

// ReportOnly entries record observed tensions without gating: they count in
// neither pass_count nor fail_count.
enum class CheckStatus { Pass, Fail, ReportOnly };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "report-only";
    }
}

struct ReportEntry {
    std::string check;
    std::string params;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    bool equal = false;
    CheckStatus status = CheckStatus::Fail;
};

inline ReportEntry exact_entry(const std::string& check, const std::string& params,
                               const ExactScalar& lhs, const ExactScalar& rhs) {
    ReportEntry e;
    e.check = check;
    e.params = params;
    e.lhs = to_fraction_string(lhs);
    e.rhs = to_fraction_string(rhs);
    e.equal = lhs == rhs;
    e.residual = e.equal ? 0.0 : std::abs(to_double(lhs - rhs));
    e.status = e.equal ? CheckStatus::Pass : CheckStatus::Fail;
    return e;
}

// Aggregate over a case family: passes iff every case agreed.
inline ReportEntry count_entry(const std::string& check, const std::string& params,
                               long long agreed, long long total) {
    ReportEntry e;
    e.check = check;
    e.params = params;
    e.lhs = std::to_string(agreed) + " agreeing cases";
    e.rhs = std::to_string(total) + " cases";
    e.equal = agreed == total;
    e.residual = static_cast<double>(total - agreed);
    e.status = e.equal ? CheckStatus::Pass : CheckStatus::Fail;
    return e;
}

inline ReportEntry numeric_entry(const std::string& check, const std::string& params, double lhs,
                                 double rhs, double tol) {
    ReportEntry e;
    e.check = check;
    e.params = params;
    e.lhs = format_double(lhs);
    e.rhs = format_double(rhs);
    e.residual = std::abs(lhs - rhs);
    e.equal = e.residual <= tol;
    e.status = e.equal ? CheckStatus::Pass : CheckStatus::Fail;
    return e;
}

// Passes iff value <= bound; for residual-style diagnostics.
inline ReportEntry bound_entry(const std::string& check, const std::string& params, double value,
                               double bound) {
    ReportEntry e;
    e.check = check;
    e.params = params;
    e.lhs = format_double(value);
    e.rhs = "<= " + format_double(bound);
    e.residual = value;
    e.equal = value <= bound;
    e.status = e.equal ? CheckStatus::Pass : CheckStatus::Fail;
    return e;
}

inline ReportEntry report_only_entry(const std::string& check, const std::string& params,
                                     const std::string& lhs, const std::string& rhs,
                                     double residual) {
    ReportEntry e;
    e.check = check;
    e.params = params;
    e.lhs = lhs;
    e.rhs = rhs;
    e.residual = residual;
    e.equal = lhs == rhs;
    e.status = CheckStatus::ReportOnly;
    return e;
}

struct Report {
    std::vector<ReportEntry> entries;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void add(std::vector<ReportEntry> more) {
        for (ReportEntry& e : more) entries.push_back(std::move(e));
    }

    long long pass_count() const {
        long long c = 0;
        for (const ReportEntry& e : entries) c += e.status == CheckStatus::Pass;
        return c;
    }
    long long fail_count() const {
        long long c = 0;
        for (const ReportEntry& e : entries) c += e.status == CheckStatus::Fail;
        return c;
    }
    bool all_passed() const { return fail_count() == 0; }

    Json to_json(const MetaInfo& meta) const {
        Json j;
        meta_to_json(j, meta);
        Json list = Json::array();
        for (const ReportEntry& e : entries) {
            Json row;
            row["check"] = e.check;
            row["params"] = e.params;
            row["lhs"] = e.lhs;
            row["rhs"] = e.rhs;
            row["residual"] = e.residual;
            row["equal"] = e.equal;
            row["status"] = status_name(e.status);
            list.push_back(std::move(row));
        }
        j["entries"] = std::move(list);
        j["pass_count"] = pass_count();
        j["fail_count"] = fail_count();
        return j;
    }
};

}  // namespace skewjue
