#pragma once

#include <stdexcept>
#include <string>

namespace iwasawa {

/// Base class for all library errors. `code()` is a stable short token
/// suitable for machine-readable diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

class PrimeMismatch : public Error {
public:
    explicit PrimeMismatch(const std::string& what) : Error("prime_mismatch", what) {}
};

// Precision family.
class PrecisionError : public Error {
public:
    PrecisionError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

class ZeroWithinPrecision : public PrecisionError {
public:
    explicit ZeroWithinPrecision(const std::string& what)
        : PrecisionError("zero_within_precision", what) {}
};

class InsufficientXPrecision : public PrecisionError {
public:
    explicit InsufficientXPrecision(const std::string& what)
        : PrecisionError("insufficient_x_precision", what) {}
};

class InsufficientPrecision : public PrecisionError {
public:
    explicit InsufficientPrecision(const std::string& what)
        : PrecisionError("insufficient_precision", what) {}
};

class NotUnit : public Error {
public:
    explicit NotUnit(const std::string& what) : Error("not_unit", what) {}
};

class NotTorsion : public Error {
public:
    explicit NotTorsion(const std::string& what) : Error("not_torsion", what) {}
};

class NotCoprime : public Error {
public:
    explicit NotCoprime(const std::string& what) : Error("not_coprime", what) {}
};

class NotStabilized : public Error {
public:
    explicit NotStabilized(const std::string& what) : Error("not_stabilized", what) {}
};

class NonIntegralExponent : public Error {
public:
    explicit NonIntegralExponent(const std::string& what)
        : Error("non_integral_exponent", what) {}
};

class DecreasingRank : public Error {
public:
    explicit DecreasingRank(const std::string& what) : Error("decreasing_rank", what) {}
};

class InadmissibleQuery : public Error {
public:
    explicit InadmissibleQuery(const std::string& what) : Error("inadmissible_query", what) {}
};

class NotSquareFree : public Error {
public:
    explicit NotSquareFree(const std::string& what) : Error("not_square_free", what) {}
};

class InconsistentLedger : public Error {
public:
    explicit InconsistentLedger(const std::string& what) : Error("inconsistent_ledger", what) {}
};

class WindowTooSmall : public Error {
public:
    explicit WindowTooSmall(const std::string& what) : Error("window_too_small", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

}  // namespace iwasawa
