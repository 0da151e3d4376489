#pragma once

#include <stdexcept>
#include <string>

namespace qwig {

enum class Errc {
    DivisionByZero,
    PoleAtPoint,
    PoleAtOne,
    IndexOutOfRange,
    SignatureMismatch,
    NonIntegralWeight,
    NotDominant,
    NotABranching,
    DegenerateRoots,
    AdmissibilityError,
    UnknownPhaseConvention,
    MultiplicityAmbiguous,
    NotRealized,
    NotScalar,
    ParseError,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NonIntegralWeight: return "NonIntegralWeight";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotABranching: return "NotABranching";
    case Errc::DegenerateRoots: return "DegenerateRoots";
    case Errc::AdmissibilityError: return "AdmissibilityError";
    case Errc::UnknownPhaseConvention: return "UnknownPhaseConvention";
    case Errc::MultiplicityAmbiguous: return "MultiplicityAmbiguous";
    case Errc::NotRealized: return "NotRealized";
    case Errc::NotScalar: return "NotScalar";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qwig
