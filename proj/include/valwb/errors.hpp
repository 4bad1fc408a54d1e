#pragma once

#include <stdexcept>
#include <string>

namespace valwb {

// Base of every error raised by the workbench.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A comparison or valuation needed coefficients beyond the tracked precision.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : Error("precision exhausted: " + what) {}
};

#define VALWB_DECLARE_ERROR(Name, prefix)                                    \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(prefix + what) {}     \
    };

VALWB_DECLARE_ERROR(FieldMismatch, "field mismatch: ")
VALWB_DECLARE_ERROR(DomainError, "domain error: ")
VALWB_DECLARE_ERROR(RamificationCapExceeded, "ramification cap exceeded: ")
VALWB_DECLARE_ERROR(RamifiedInput, "ramified input: ")
VALWB_DECLARE_ERROR(NegativeSupport, "negative support: ")
VALWB_DECLARE_ERROR(NegativeValuation, "negative valuation: ")
VALWB_DECLARE_ERROR(NotARoot, "not a root: ")
VALWB_DECLARE_ERROR(Uncertified, "uncertified: ")
VALWB_DECLARE_ERROR(NoRootOfUnity, "no root of unity: ")
VALWB_DECLARE_ERROR(ZeroPolynomial, "zero polynomial: ")
VALWB_DECLARE_ERROR(NotPcs, "not a pseudo-Cauchy sequence: ")
VALWB_DECLARE_ERROR(HorizonExceeded, "horizon exceeded: ")
VALWB_DECLARE_ERROR(UnsupportedKind, "unsupported kind: ")
VALWB_DECLARE_ERROR(DeltaTooLarge, "delta too large: ")
VALWB_DECLARE_ERROR(InvalidSpec, "invalid spec: ")

#undef VALWB_DECLARE_ERROR

// Index-carrying variant of NotPcs; `index` is the first m with
// v(z_m - z_{m+1}) failing to increase.
class NotPcsAt : public NotPcs {
public:
    NotPcsAt(std::size_t index, const std::string& what)
        : NotPcs("index " + std::to_string(index) + ": " + what), index(index) {}
    std::size_t index;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + what),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace valwb
