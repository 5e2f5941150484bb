// Error types and validation reports shared by all modules.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slackhopf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero") {}
};

struct NonSquare : Error {
    NonSquare() : Error("matrix is not square") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct SlotOutOfRange : Error {
    explicit SlotOutOfRange(int slot, int rank)
        : Error("slot " + std::to_string(slot) + " out of range for rank " + std::to_string(rank)) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error("not a unit: " + what) {}
};

struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& what) : Error("enumeration bound exceeded: " + what) {}
};

struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& what) : Error("identity violation: " + what) {}
};

struct InverseMismatch : Error {
    explicit InverseMismatch(const std::string& what) : Error("inverse mismatch: " + what) {}
};

struct ModuleAxiomViolation : Error {
    explicit ModuleAxiomViolation(const std::string& what) : Error("module axiom violation: " + what) {}
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_no)
        : Error("parse error (line " + std::to_string(line_no) + "): " + what), line(line_no) {}
};

// Violations are data, not exceptions: validators collect every failed axiom
// instance so reports can show all of them at once.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void require(bool cond, const std::string& what) {
        if (!cond) violations.push_back(what);
    }

    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

} // namespace slackhopf
