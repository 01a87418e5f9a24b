#include "stego/image.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include "stego/error.hpp"

namespace stego {

namespace {

struct Cursor {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    std::uint8_t peek() const { return data[pos]; }
};

// Whitespace and '#' comments (to end of line) between header tokens.
void skip_separators(Cursor& c) {
    while (!c.eof()) {
        if (std::isspace(c.peek())) {
            ++c.pos;
        } else if (c.peek() == '#') {
            while (!c.eof() && c.peek() != '\n') ++c.pos;
        } else {
            break;
        }
    }
}

long parse_number(Cursor& c, const char* field) {
    skip_separators(c);
    if (c.eof() || !std::isdigit(c.peek()))
        fail(Err::BadHeader, std::string("expected number for ") + field);
    long value = 0;
    while (!c.eof() && std::isdigit(c.peek())) {
        value = value * 10 + (c.peek() - '0');
        if (value > 100'000'000L)
            fail(Err::BadHeader, std::string(field) + " out of range");
        ++c.pos;
    }
    return value;
}

} // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        fail(Err::BadMagic, "not a binary PGM (P5) stream");

    Cursor c{bytes, 2};
    long w = parse_number(c, "width");
    long h = parse_number(c, "height");
    long maxval = parse_number(c, "maxval");
    if (w <= 0 || h <= 0)
        fail(Err::BadHeader, "nonpositive dimensions");
    if (maxval != 255)
        fail(Err::UnsupportedMaxval, "maxval " + std::to_string(maxval));

    // Exactly one whitespace byte separates the header from the payload.
    if (c.eof() || !std::isspace(c.peek()))
        fail(Err::BadHeader, "missing separator before pixel data");
    ++c.pos;

    std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (bytes.size() - c.pos < need)
        fail(Err::Truncated, "payload has " + std::to_string(bytes.size() - c.pos) +
                                 " of " + std::to_string(need) + " bytes");

    Image img(static_cast<int>(w), static_cast<int>(h));
    std::copy_n(bytes.begin() + c.pos, need, img.pixels.begin());
    return img;
}

std::vector<std::uint8_t> write_pgm(const Image& img) {
    char header[64];
    int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", img.width, img.height);
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) + img.pixels.size());
    out.insert(out.end(), header, header + n);
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

Image load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::BadHeader, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

void save_pgm(const Image& img, const std::filesystem::path& path) {
    auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Err::BadHeader, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

} // namespace stego
