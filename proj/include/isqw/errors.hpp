#pragma once

#include <stdexcept>
#include <string>

namespace isqw {

struct DeltaDerivativeUnsupported : std::runtime_error {
    explicit DeltaDerivativeUnsupported(const std::string& what)
        : std::runtime_error(what) {}
};

struct NonRemovableSingularity : std::runtime_error {
    explicit NonRemovableSingularity(const std::string& what)
        : std::runtime_error(what) {}
};

struct UnsiftedDelta : std::runtime_error {
    explicit UnsiftedDelta(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidQuantumNumber : std::invalid_argument {
    explicit InvalidQuantumNumber(const std::string& what)
        : std::invalid_argument(what) {}
};

struct NormalizationViolation : std::invalid_argument {
    explicit NormalizationViolation(const std::string& what)
        : std::invalid_argument(what) {}
};

struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what)
        : std::runtime_error(what) {}
};

struct BracketingFailure : std::runtime_error {
    explicit BracketingFailure(const std::string& what)
        : std::runtime_error(what) {}
};

struct UnsolvedLevel : std::invalid_argument {
    explicit UnsolvedLevel(const std::string& what)
        : std::invalid_argument(what) {}
};

struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isqw
