#include "stego/codec.hpp"

#include <algorithm>

#include "stego/bitstream.hpp"
#include "stego/error.hpp"

namespace stego {

namespace {

// -1/0/+1 with the boundary remap: a -1 at 0 becomes +2, a +1 at 255
// becomes -2. Collision-free because the remapped delta is impossible for
// the other two trits at that value.
std::uint8_t apply_trit(std::uint8_t v, int trit) {
    if (trit == 0) return v;
    if (trit == 1) return v == 255 ? 253 : v + 1;
    return v == 0 ? 2 : v - 1;
}

int trit_from_delta(std::uint8_t cover, std::uint8_t stego) {
    int d = static_cast<int>(stego) - static_cast<int>(cover);
    if (d == 0) return 0;
    if (d == 1 && cover != 255) return 1;
    if (d == -1 && cover != 0) return 2;
    if (d == 2 && cover == 0) return 2;
    if (d == -2 && cover == 255) return 1;
    fail(Err::IllegalDelta, "pixel moved from " + std::to_string(cover) + " to " +
                                std::to_string(stego));
}

std::uint8_t step_pixel(std::uint8_t v, int sign) {
    if (sign > 0) return v == 255 ? 253 : v + 1;
    return v == 0 ? 2 : v - 1;
}

// Logical sign of an observed change, undoing the boundary remap.
int logical_sign(std::uint8_t cover, std::uint8_t stego) {
    int d = static_cast<int>(stego) - static_cast<int>(cover);
    if (d == 1 && cover != 255) return +1;
    if (d == -1 && cover != 0) return -1;
    if (d == 2 && cover == 0) return -1;
    if (d == -2 && cover == 255) return +1;
    fail(Err::IllegalDelta, "cell moved from " + std::to_string(cover) + " to " +
                                std::to_string(stego));
}

} // namespace

PairMapping PairMapping::identity() {
    PairMapping m;
    for (int i = 0; i < 9; ++i) m.perm[i] = static_cast<std::uint8_t>(i);
    return m;
}

PairMapping PairMapping::keyed(Prng& rng) {
    PairMapping m;
    auto p = derive_permutation(rng, 9);
    for (int i = 0; i < 9; ++i) m.perm[i] = static_cast<std::uint8_t>(p[i]);
    return m;
}

bool PairMapping::valid() const {
    std::array<bool, 9> seen{};
    for (auto s : perm) {
        if (s > 8 || seen[s]) return false;
        seen[s] = true;
    }
    return true;
}

EmbedMatrix EmbedMatrix::canonical(int m) {
    EmbedMatrix em;
    em.m = m;
    const int codes = 1 << flat_code_bits(m);
    em.cells.resize(static_cast<std::size_t>(m) * m, BLANK);
    for (int c = 0; c < codes; ++c) em.cells[c] = static_cast<std::int16_t>(c);
    return em;
}

EmbedMatrix EmbedMatrix::keyed(Prng& rng, int m) {
    EmbedMatrix em;
    em.m = m;
    const int codes = 1 << flat_code_bits(m);
    auto p = derive_permutation(rng, static_cast<std::uint32_t>(m) * m);
    em.cells.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        em.cells[i] = p[i] < static_cast<std::uint32_t>(codes)
                          ? static_cast<std::int16_t>(p[i])
                          : static_cast<std::int16_t>(BLANK);
    return em;
}

EmbedMatrix EmbedMatrix::from_codes(int m, std::span<const int> codes) {
    EmbedMatrix em;
    em.m = m;
    if (codes.size() != static_cast<std::size_t>(m) * m)
        fail(Err::BadParams, "matrix needs m*m entries");
    em.cells.reserve(codes.size());
    for (int c : codes) em.cells.push_back(static_cast<std::int16_t>(c));
    if (!em.valid()) fail(Err::BadParams, "not a valid embedding matrix");
    return em;
}

int EmbedMatrix::find_code(int code) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == code) return static_cast<int>(i);
    return -1;
}

bool EmbedMatrix::valid() const {
    if (cells.size() != static_cast<std::size_t>(m) * m) return false;
    const int codes = 1 << flat_code_bits(m);
    std::vector<bool> seen(codes, false);
    int blanks = 0;
    for (int c : cells) {
        if (c == BLANK) {
            ++blanks;
        } else if (c < 0 || c >= codes || seen[c]) {
            return false;
        } else {
            seen[c] = true;
        }
    }
    return blanks == m * m - codes;
}

CarrierPlan plan_carriers(const RegionMap& map) {
    const SegParams& p = map.params;
    const int pairs_per_block = (p.n * p.n) / 2;
    const int subs_per_side = p.n / p.m;
    const int flat_width = flat_chunk_bits(p);

    CarrierPlan plan;
    for (int by = 0; by < map.blocks_y; ++by) {
        for (int bx = 0; bx < map.blocks_x; ++bx) {
            const int ox = bx * p.n, oy = by * p.n;
            if (map.flat(bx, by)) {
                for (int sy = 0; sy < subs_per_side; ++sy)
                    for (int sx = 0; sx < subs_per_side; ++sx) {
                        plan.carriers.push_back(
                            {FlatCarrier{ox + sx * p.m, oy + sy * p.m}, flat_width});
                        plan.total_bits += flat_width;
                    }
            } else {
                for (int k = 0; k < pairs_per_block; ++k) {
                    int i1 = 2 * k, i2 = 2 * k + 1;
                    plan.carriers.push_back({PairCarrier{ox + i1 % p.n, oy + i1 / p.n,
                                                         ox + i2 % p.n, oy + i2 / p.n},
                                             3});
                    plan.total_bits += 3;
                }
            }
        }
    }
    return plan;
}

std::pair<std::uint8_t, std::uint8_t> encode_pair(std::uint8_t v1, std::uint8_t v2,
                                                  unsigned msg, const PairMapping& map) {
    const int state = map.perm[msg];
    return {apply_trit(v1, state / 3), apply_trit(v2, state % 3)};
}

unsigned decode_pair(std::uint8_t cover1, std::uint8_t cover2,
                     std::uint8_t stego1, std::uint8_t stego2,
                     const PairMapping& map) {
    const int state = 3 * trit_from_delta(cover1, stego1) + trit_from_delta(cover2, stego2);
    for (unsigned v = 0; v < 8; ++v)
        if (map.perm[v] == state) return v;
    fail(Err::UnusedState, "pair decodes to the unused ninth state");
}

void embed_flat_block(const Image& cover, Image& stego, const FlatCarrier& fc,
                      std::uint32_t chunk, const EmbedMatrix& matrix, FlatBits mode) {
    const int code = mode == FlatBits::PositionSign ? static_cast<int>(chunk >> 1)
                                                    : static_cast<int>(chunk);
    const int cell = matrix.find_code(code);
    const int x = fc.x0 + cell % matrix.m;
    const int y = fc.y0 + cell / matrix.m;
    const std::uint8_t v = cover.at(x, y);

    int sign;
    if (mode == FlatBits::PositionSign) {
        sign = (chunk & 1u) ? +1 : -1;
    } else {
        // Move toward the 8-neighbor cover mean; an exact tie goes down.
        int neighbor_sum = 0;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                neighbor_sum += cover.at_clamped(x + dx, y + dy);
            }
        sign = 8 * static_cast<int>(v) < neighbor_sum ? +1 : -1;
    }
    stego.at(x, y) = step_pixel(v, sign);
}

std::uint32_t extract_flat_block(const Image& cover, const Image& stego,
                                 const FlatCarrier& fc, const EmbedMatrix& matrix,
                                 FlatBits mode) {
    int changed = -1;
    for (int cell = 0; cell < matrix.m * matrix.m; ++cell) {
        int x = fc.x0 + cell % matrix.m;
        int y = fc.y0 + cell / matrix.m;
        if (cover.at(x, y) == stego.at(x, y)) continue;
        if (changed >= 0) fail(Err::MultipleChanges, "more than one cell changed");
        changed = cell;
    }
    if (changed < 0) fail(Err::NoChange, "active flat carrier shows no change");

    const std::int16_t code = matrix.cells[changed];
    if (code == EmbedMatrix::BLANK) fail(Err::BlankCellChanged, "blank cell changed");

    const int x = fc.x0 + changed % matrix.m;
    const int y = fc.y0 + changed / matrix.m;
    const int sign = logical_sign(cover.at(x, y), stego.at(x, y));

    if (mode == FlatBits::PositionSign)
        return (static_cast<std::uint32_t>(code) << 1) | (sign > 0 ? 1u : 0u);
    return static_cast<std::uint32_t>(code);
}

Image embed(const Image& cover, std::span<const std::uint8_t> message,
            StegoKey key, const SegParams& p) {
    const RegionMap map = classify(cover, p);
    const CarrierPlan plan = plan_carriers(map);

    FrameReader reader(message);
    if (reader.total_bits() > plan.total_bits)
        fail(Err::CapacityExceeded, std::to_string(reader.total_bits()) + " bits needed, " +
                                        std::to_string(plan.total_bits) + " available");

    Image stego = cover;
    Prng rng(key);
    for (const Carrier& c : plan.carriers) {
        if (reader.done()) break;
        const std::uint32_t chunk = reader.take(c.width);
        if (c.is_pair()) {
            const auto& pc = std::get<PairCarrier>(c.site);
            const PairMapping pm = key.keyed() ? PairMapping::keyed(rng)
                                               : PairMapping::identity();
            auto [w1, w2] = encode_pair(cover.at(pc.x1, pc.y1), cover.at(pc.x2, pc.y2),
                                        chunk, pm);
            stego.at(pc.x1, pc.y1) = w1;
            stego.at(pc.x2, pc.y2) = w2;
        } else {
            const auto& fc = std::get<FlatCarrier>(c.site);
            const EmbedMatrix em = key.keyed() ? EmbedMatrix::keyed(rng, p.m)
                                               : EmbedMatrix::canonical(p.m);
            embed_flat_block(cover, stego, fc, chunk, em, p.flat_bits);
        }
    }
    return stego;
}

std::vector<std::uint8_t> extract(const Image& cover, const Image& stego,
                                  StegoKey key, const SegParams& p) {
    if (cover.width != stego.width || cover.height != stego.height)
        fail(Err::DimensionMismatch, "cover and stego dimensions differ");

    const RegionMap map = classify(cover, p);
    const CarrierPlan plan = plan_carriers(map);

    FrameCollector sink;
    std::uint64_t needed = 32;
    bool have_header = false;
    std::uint32_t payload_len = 0;

    Prng rng(key);
    for (const Carrier& c : plan.carriers) {
        if (sink.bit_count() >= needed && have_header) break;
        try {
            if (c.is_pair()) {
                const auto& pc = std::get<PairCarrier>(c.site);
                const PairMapping pm = key.keyed() ? PairMapping::keyed(rng)
                                                   : PairMapping::identity();
                sink.push(decode_pair(cover.at(pc.x1, pc.y1), cover.at(pc.x2, pc.y2),
                                      stego.at(pc.x1, pc.y1), stego.at(pc.x2, pc.y2), pm),
                          3);
            } else {
                const auto& fc = std::get<FlatCarrier>(c.site);
                const EmbedMatrix em = key.keyed() ? EmbedMatrix::keyed(rng, p.m)
                                                   : EmbedMatrix::canonical(p.m);
                sink.push(extract_flat_block(cover, stego, fc, em, p.flat_bits), c.width);
            }
        } catch (const Error& e) {
            if (e.code() == Err::IllegalDelta || e.code() == Err::UnusedState ||
                e.code() == Err::NoChange || e.code() == Err::MultipleChanges ||
                e.code() == Err::BlankCellChanged)
                fail(Err::CorruptStego, e.what());
            throw;
        }
        if (!have_header && sink.bit_count() >= 32) {
            payload_len = sink.header();
            needed = 32 + 8ULL * payload_len;
            if (needed > plan.total_bits)
                fail(Err::HeaderOverrun, "declared payload of " + std::to_string(payload_len) +
                                             " bytes exceeds capacity");
            have_header = true;
        }
    }
    if (!have_header || sink.bit_count() < needed)
        fail(Err::CorruptStego, "carrier stream ended before the declared payload");
    return sink.payload(payload_len);
}

} // namespace stego
