#pragma once

#include <stdexcept>
#include <string>

namespace powerwall_rl {

/// Base class for all library errors.
struct RlError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dataset loading / validation failures.
struct DataError : RlError {
    enum class Code {
        MissingFile,
        BadHeader,
        RowCount,
        NonNumericField,
        NegativeValue,
        PriceTierCount,
    };
    Code code;
    DataError(Code c, const std::string& what) : RlError(what), code(c) {}
};

/// Environment contract violations.
struct EnvError : RlError {
    enum class Code {
        EmptyWindow,
        SocOutOfRange,
        InvalidState,
        OutOfRange,
    };
    Code code;
    EnvError(Code c, const std::string& what) : RlError(what), code(c) {}
};

/// Network / optimizer shape and numeric failures.
struct NnError : RlError {
    enum class Code {
        DimensionMismatch,
        StaleCache,
        ShapeMismatch,
        NonFiniteGradient,
    };
    Code code;
    NnError(Code c, const std::string& what) : RlError(what), code(c) {}
};

/// Agent training failures.
struct TrainError : RlError {
    enum class Code {
        LengthMismatch,
        EmptyBatch,
        NonFiniteLoss,
        IndexOutOfRange,
    };
    Code code;
    TrainError(Code c, const std::string& what) : RlError(what), code(c) {}
};

/// Experiment orchestration failures.
struct HarnessError : RlError {
    enum class Code {
        DivisionByZero,
        DateOutOfRange,
        Config,
    };
    Code code;
    HarnessError(Code c, const std::string& what) : RlError(what), code(c) {}
};

}  // namespace powerwall_rl
