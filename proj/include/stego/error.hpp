#pragma once

#include <stdexcept>
#include <string>

namespace stego {

enum class Err {
    BadMagic,
    BadHeader,
    UnsupportedMaxval,
    Truncated,
    ZeroOffset,
    OffsetTooLarge,
    OffsetMismatch,
    DimensionMismatch,
    BlockTooSmall,
    ImageTooSmall,
    CapacityExceeded,
    IllegalDelta,
    UnusedState,
    NoChange,
    MultipleChanges,
    BlankCellChanged,
    HeaderOverrun,
    CorruptStego,
    NotEnoughData,
    Degenerate,
    NoConvergence,
    BadParams,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
    throw Error(code, what);
}

} // namespace stego
