#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "stego/image.hpp"
#include "stego/prng.hpp"
#include "stego/segmenter.hpp"

namespace stego {

/// Two pixels, each moved by -1/0/+1, give 9 joint states; a 3-bit value
/// v selects state perm[v]. State perm[8] is never produced.
struct PairMapping {
    std::array<std::uint8_t, 9> perm;

    static PairMapping identity();
    static PairMapping keyed(Prng& rng);
    bool valid() const;
};

/// m x m grid assigning each modifiable cell a code in [0, 2^b); the cell
/// whose code equals the message chunk is the one that changes. Cells with
/// no code (BLANK) never change.
struct EmbedMatrix {
    static constexpr int BLANK = -1;

    int m = 0;
    std::vector<std::int16_t> cells; // row-major, code or BLANK

    static EmbedMatrix canonical(int m);
    static EmbedMatrix keyed(Prng& rng, int m);
    /// Row-major codes, -1 for blank cells. Validates.
    static EmbedMatrix from_codes(int m, std::span<const int> codes);

    int code_bits() const { return flat_code_bits(m); }
    std::int16_t code_at(int row, int col) const { return cells[row * m + col]; }
    /// Row-major cell index holding `code`.
    int find_code(int code) const;
    bool valid() const;
};

struct PairCarrier {
    int x1, y1, x2, y2;
};

struct FlatCarrier {
    int x0, y0; // top-left pixel of the m x m sub-block
};

struct Carrier {
    std::variant<PairCarrier, FlatCarrier> site;
    int width; // bits consumed by this carrier

    bool is_pair() const { return std::holds_alternative<PairCarrier>(site); }
};

/// Ordered embedding sites: n-blocks row-major; inside a noisy block pixels
/// pair up in row-major order, inside a flat block the m x m sub-blocks go
/// row-major. Total width equals capacity_bits(map).
struct CarrierPlan {
    std::vector<Carrier> carriers;
    std::uint64_t total_bits = 0;
};

CarrierPlan plan_carriers(const RegionMap& map);

/// Pair codec. msg in [0,8); trits (s/3, s%3) of state s = perm[msg] move
/// the pixels by 0/+1/-1. Saturation remap: -1 at value 0 becomes +2,
/// +1 at 255 becomes -2, keeping every state reachable and unambiguous.
std::pair<std::uint8_t, std::uint8_t> encode_pair(std::uint8_t v1, std::uint8_t v2,
                                                  unsigned msg, const PairMapping& map);

/// Informed inverse of encode_pair. Throws IllegalDelta for a difference
/// no encoder produces and UnusedState for state perm[8].
unsigned decode_pair(std::uint8_t cover1, std::uint8_t cover2,
                     std::uint8_t stego1, std::uint8_t stego2,
                     const PairMapping& map);

/// Changes exactly one cell of the m x m sub-block at (x0,y0) by +-1
/// (+-2 under saturation). In PositionSign mode the trailing chunk bit is
/// the sign (1 -> +1); in PositionOnly mode the sign moves the pixel toward
/// the mean of its 8 cover neighbors (border-replicated), ties going to -1.
void embed_flat_block(const Image& cover, Image& stego, const FlatCarrier& fc,
                      std::uint32_t chunk, const EmbedMatrix& matrix, FlatBits mode);

/// Informed inverse; returns the chunk. Throws NoChange / MultipleChanges /
/// BlankCellChanged / IllegalDelta on inconsistent block pairs.
std::uint32_t extract_flat_block(const Image& cover, const Image& stego,
                                 const FlatCarrier& fc, const EmbedMatrix& matrix,
                                 FlatBits mode);

/// Full pipeline: classify the cover, frame the message (32-bit big-endian
/// byte count + payload), consume carriers in plan order. Keyed runs derive
/// one permutation per active carrier from a single PRNG stream; inactive
/// carriers consume nothing and stay untouched.
Image embed(const Image& cover, std::span<const std::uint8_t> message,
            StegoKey key, const SegParams& p);

/// Informed extraction; needs the cover, the key and the same parameters.
std::vector<std::uint8_t> extract(const Image& cover, const Image& stego,
                                  StegoKey key, const SegParams& p);

} // namespace stego
