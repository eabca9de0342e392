#ifndef LHGF_BASE_HPP
#define LHGF_BASE_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhgf {

using Rat = boost::rational<long long>;

/// Fractional part in [0,1); used for circle angles (values mod 1).
inline Rat frac(const Rat& q) {
    long long n = q.numerator(), d = q.denominator();
    long long m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}

inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline std::string show_rational(const Rat& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

enum class Err {
    SharedNotSubcomplex,
    DimensionMismatch,
    MalformedExpression,
    BoundaryMismatch,
    NotComposable,
    EndpointMismatch,
    EdgeNotInComplex,
    FaceNotLabeled,
    NotClosed,
    BaseMismatch,
    BudgetExceeded,
    ModelNotFinite,
    InvalidGlobalField,
    OverlapDisagreement,
    NotARefinement,
    ModelLevelUnsupported,
    NotAClosedSurface,
    AnchorMismatch,
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::SharedNotSubcomplex: return "SharedNotSubcomplex";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::MalformedExpression: return "MalformedExpression";
        case Err::BoundaryMismatch: return "BoundaryMismatch";
        case Err::NotComposable: return "NotComposable";
        case Err::EndpointMismatch: return "EndpointMismatch";
        case Err::EdgeNotInComplex: return "EdgeNotInComplex";
        case Err::FaceNotLabeled: return "FaceNotLabeled";
        case Err::NotClosed: return "NotClosed";
        case Err::BaseMismatch: return "BaseMismatch";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::ModelNotFinite: return "ModelNotFinite";
        case Err::InvalidGlobalField: return "InvalidGlobalField";
        case Err::OverlapDisagreement: return "OverlapDisagreement";
        case Err::NotARefinement: return "NotARefinement";
        case Err::ModelLevelUnsupported: return "ModelLevelUnsupported";
        case Err::NotAClosedSurface: return "NotAClosedSurface";
        case Err::AnchorMismatch: return "AnchorMismatch";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& detail)
        : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

/// Report-style validation result: one entry per violated invariant.
struct Violation {
    std::string rule;
    std::string detail;
};

struct Report {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::string detail) {
        violations.push_back({std::move(rule), std::move(detail)});
    }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

/// Counts elementary checks in enumeration-heavy operations and aborts
/// loudly instead of hanging when the configured budget is exhausted.
struct Budget {
    long long limit = 10'000'000;
    mutable long long used = 0;
    void tick(long long n = 1) const {
        used += n;
        if (used > limit) throw Error(Err::BudgetExceeded, "budget of " + std::to_string(limit) + " elementary checks exhausted");
    }
};

}  // namespace lhgf

#endif
