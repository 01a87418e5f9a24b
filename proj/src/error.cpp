#include "stego/error.hpp"

namespace stego {

const char* err_name(Err e) {
    switch (e) {
        case Err::BadMagic: return "BadMagic";
        case Err::BadHeader: return "BadHeader";
        case Err::UnsupportedMaxval: return "UnsupportedMaxval";
        case Err::Truncated: return "Truncated";
        case Err::ZeroOffset: return "ZeroOffset";
        case Err::OffsetTooLarge: return "OffsetTooLarge";
        case Err::OffsetMismatch: return "OffsetMismatch";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::BlockTooSmall: return "BlockTooSmall";
        case Err::ImageTooSmall: return "ImageTooSmall";
        case Err::CapacityExceeded: return "CapacityExceeded";
        case Err::IllegalDelta: return "IllegalDelta";
        case Err::UnusedState: return "UnusedState";
        case Err::NoChange: return "NoChange";
        case Err::MultipleChanges: return "MultipleChanges";
        case Err::BlankCellChanged: return "BlankCellChanged";
        case Err::HeaderOverrun: return "HeaderOverrun";
        case Err::CorruptStego: return "CorruptStego";
        case Err::NotEnoughData: return "NotEnoughData";
        case Err::Degenerate: return "Degenerate";
        case Err::NoConvergence: return "NoConvergence";
        case Err::BadParams: return "BadParams";
    }
    return "UnknownError";
}

} // namespace stego
