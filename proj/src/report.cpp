#include "reflectlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace reflectlab {

double ResidualStat::l2_norm() const { return std::sqrt(l2); }

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::exploratory: return "exploratory";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ResidualStat& VerificationReport::residual(const std::string& name, double tolerance) {
    auto& r = residuals[name];
    r.tolerance = tolerance;
    return r;
}

bool VerificationReport::hypotheses_ok() const {
    for (const auto& [name, st] : hypotheses)
        if (st == CheckStatus::fail) return false;
    return true;
}

double VerificationReport::worst_residual() const {
    double w = 0;
    for (const auto& [name, r] : residuals) w = std::max(w, r.max);
    return w;
}

double VerificationReport::worst_tolerance() const {
    double w = 0;
    for (const auto& [name, r] : residuals) w = std::max(w, r.tolerance);
    return w;
}

void VerificationReport::finalize() {
    if (conclusion == CheckStatus::skipped || conclusion == CheckStatus::exploratory) return;
    if (!hypotheses_ok()) {
        conclusion = CheckStatus::not_applicable;
        return;
    }
    for (const auto& [name, r] : residuals) {
        if (!r.pass()) {
            conclusion = CheckStatus::fail;
            return;
        }
    }
    conclusion = CheckStatus::pass;
}

std::string VerificationReport::summary_row() const {
    std::string hyp = "pass";
    for (const auto& [name, st] : hypotheses)
        if (st == CheckStatus::fail) {
            hyp = "violated:" + name;
            break;
        }
    if (hypotheses.empty()) hyp = "n/a";
    std::ostringstream os;
    os << experiment_id << ',' << kind << ",\"" << anchor << "\"," << hyp << ','
       << format_double(worst_residual()) << ',' << format_double(worst_tolerance()) << ','
       << to_string(conclusion) << ',' << runtime_ms;
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "experiment = " << experiment_id << "\n";
    os << "kind = " << kind << "\n";
    os << "anchor = " << anchor << "\n";
    for (const auto& [name, st] : hypotheses)
        os << "hypothesis " << name << " = " << to_string(st) << "\n";
    for (const auto& [name, r] : residuals)
        os << "residual " << name << ": max " << format_double(r.max) << " l2 "
           << format_double(r.l2_norm()) << " count " << r.count << " tol "
           << format_double(r.tolerance) << " -> " << (r.pass() ? "pass" : "fail") << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    os << "status = " << to_string(conclusion) << "\n";
    os << "runtime_ms = " << runtime_ms << "\n";
    return os.str();
}

} // namespace reflectlab
