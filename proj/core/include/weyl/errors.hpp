#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

/// Base class of all typed library errors. `code()` is the stable error
/// name surfaced by the CLI (exit code 2 reports it verbatim).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define WEYL_ERROR_TYPE(Name)                            \
    class Name : public Error {                          \
    public:                                              \
        explicit Name(const std::string& what)           \
            : Error(#Name, what) {}                      \
    }

// moments
WEYL_ERROR_TYPE(NonFiniteInput);
WEYL_ERROR_TYPE(EmptySequence);
WEYL_ERROR_TYPE(OverflowRisk);
WEYL_ERROR_TYPE(DegreeExceedsMoments);

// orthopoly
WEYL_ERROR_TYPE(InsufficientMoments);
WEYL_ERROR_TYPE(NotPositiveDefinite);
WEYL_ERROR_TYPE(IllConditioned);
WEYL_ERROR_TYPE(IndexOutOfRange);
WEYL_ERROR_TYPE(PoleAtZ);

// moebius
WEYL_ERROR_TYPE(DegenerateMap);
WEYL_ERROR_TYPE(CollinearPoints);

// measures
WEYL_ERROR_TYPE(PoleAtAtom);
WEYL_ERROR_TYPE(RootFindingFailed);

// regions
WEYL_ERROR_TYPE(RealAxisZ);
WEYL_ERROR_TYPE(NotCertified);
WEYL_ERROR_TYPE(PoleAtA);
WEYL_ERROR_TYPE(BadInterval);
WEYL_ERROR_TYPE(OverlappingGaps);

#undef WEYL_ERROR_TYPE

}  // namespace weyl
