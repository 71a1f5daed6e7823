#pragma once
#include <map>
#include <string>
#include <vector>

namespace reflectlab {

struct ResidualStat {
    double max = 0.0;
    double l2 = 0.0;
    long count = 0;
    double tolerance = 0.0;

    bool pass() const { return max <= tolerance; }
    void absorb(double r) {
        if (r > max) max = r;
        l2 += r * r;
        ++count;
    }
    double l2_norm() const;
};

enum class CheckStatus { pass, fail, not_applicable, skipped, exploratory };
std::string to_string(CheckStatus s);

/// Structured result of one verification experiment: named residual
/// statistics, per-hypothesis status, and an overall conclusion. pass is
/// only set when every residual is under its tolerance and no hypothesis
/// was violated.
struct VerificationReport {
    std::string experiment_id;
    std::string kind;
    /// theorem / equation identifier of the claim being checked
    std::string anchor;
    std::map<std::string, ResidualStat> residuals;
    std::map<std::string, CheckStatus> hypotheses;
    std::vector<std::string> notes;
    CheckStatus conclusion = CheckStatus::pass;
    long runtime_ms = 0;

    ResidualStat& residual(const std::string& name, double tolerance);
    void note(const std::string& s) { notes.push_back(s); }

    bool hypotheses_ok() const;
    double worst_residual() const;
    double worst_tolerance() const;
    /// Derive the conclusion from hypotheses and residuals. A violated
    /// hypothesis yields not_applicable, never fail.
    void finalize();

    /// one-line comma-separated summary row (no trailing newline)
    std::string summary_row() const;
    /// multi-line report block
    std::string to_text() const;
};

std::string format_double(double v);

} // namespace reflectlab
