#pragma once
#include <optional>
#include <string>
#include <vector>

#include "reflectlab/errors.hpp"

namespace reflectlab {

enum class DomainType { AIII, DIII, BDI_q2, CI };

DomainType domain_type_from_string(const std::string& s);
std::string to_string(DomainType t);

/// One classification row: the symmetric-space symbols are stored as the
/// table prints them, with a machine-checkable key selecting the parameter
/// predicate.
struct RealFormTableEntry {
    DomainType type;
    std::string key;
    std::string dim_formula;
    std::string ambient;
    std::string condition;
    std::vector<std::string> symbols;
};

/// Row of the recursive real-form family table.
struct PropositionRow {
    int index = 0;
    std::string type_name;
    std::string hermitian_symbol;
    std::string real_form_symbol;
    std::string q_range;
};

struct RealFormParams {
    std::optional<int> p, q, n, k;
};

class RealFormRegistry {
public:
    /// Registry parsed from the copy of data/realform_table.txt embedded at
    /// build time.
    static const RealFormRegistry& builtin();
    static RealFormRegistry from_file(const std::string& path);
    static RealFormRegistry parse(const std::string& text);

    const std::vector<RealFormTableEntry>& appendix() const { return appendix_; }
    const std::vector<PropositionRow>& proposition() const { return proposition_; }

    /// All classification rows whose parameter predicate matches.
    /// Throws InvalidParams when required parameters are missing or out of
    /// the type's domain.
    std::vector<RealFormTableEntry> lookup(DomainType type, const RealFormParams& params) const;

    const PropositionRow& proposition_row(int index) const;

private:
    std::vector<RealFormTableEntry> appendix_;
    std::vector<PropositionRow> proposition_;
};

} // namespace reflectlab
