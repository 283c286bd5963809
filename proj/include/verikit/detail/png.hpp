#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

namespace verikit::detail {

/// In-memory RGB8 image used by the renderers and scripted image backends.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, row-major

    Raster() = default;
    Raster(int w, int h, std::uint8_t r = 255, std::uint8_t g = 255, std::uint8_t b = 255)
        : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3) {
        for (std::size_t i = 0; i < rgb.size(); i += 3) {
            rgb[i] = r;
            rgb[i + 1] = g;
            rgb[i + 2] = b;
        }
    }

    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        if (!in_bounds(x, y)) return;  // clipped writes keep drawing code simple
        std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }

    std::array<std::uint8_t, 3> get(int x, int y) const {
        std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }

    void fill_rect(int x0, int y0, int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        for (int y = y0; y < y0 + h; ++y)
            for (int x = x0; x < x0 + w; ++x) set(x, y, r, g, b);
    }

    bool operator==(const Raster& o) const = default;
};

struct PngError : std::runtime_error {
    explicit PngError(const std::string& what) : std::runtime_error(what) {}
};

namespace pngimpl {

inline void put_u32be(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v >> 24));
    out.push_back(static_cast<char>(v >> 16));
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v));
}

inline std::uint32_t read_u32be(const unsigned char* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
           std::uint32_t(p[3]);
}

inline void append_chunk(std::string& out, const char type[4], const std::string& data) {
    put_u32be(out, static_cast<std::uint32_t>(data.size()));
    std::size_t crc_start = out.size();
    out.append(type, 4);
    out.append(data);
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(out.data() + crc_start), static_cast<uInt>(out.size() - crc_start));
    put_u32be(out, static_cast<std::uint32_t>(crc));
}

inline constexpr char kSignature[8] = {'\x89', 'P', 'N', 'G', '\r', '\n', '\x1a', '\n'};

}  // namespace pngimpl

inline bool has_png_signature(std::string_view bytes) {
    return bytes.size() >= 8 && std::memcmp(bytes.data(), pngimpl::kSignature, 8) == 0;
}

/// Reads width/height from the IHDR chunk without decoding pixel data.
/// Returns false if the bytes are not a plausible PNG.
inline bool png_dimensions(std::string_view bytes, int& width, int& height) {
    if (!has_png_signature(bytes) || bytes.size() < 33) return false;
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    if (std::memcmp(p + 12, "IHDR", 4) != 0) return false;
    width = static_cast<int>(pngimpl::read_u32be(p + 16));
    height = static_cast<int>(pngimpl::read_u32be(p + 20));
    return width > 0 && height > 0;
}

/// Deterministic PNG encoding: 8-bit RGB, filter None on every row, fixed
/// zlib level. Identical rasters produce identical bytes.
inline std::string png_encode(const Raster& img) {
    if (img.width <= 0 || img.height <= 0 ||
        img.rgb.size() != static_cast<std::size_t>(img.width) * img.height * 3)
        throw PngError("png_encode: inconsistent raster");

    std::string raw;
    raw.reserve(static_cast<std::size_t>(img.height) * (1 + img.width * 3));
    for (int y = 0; y < img.height; ++y) {
        raw.push_back('\0');  // filter type None
        raw.append(reinterpret_cast<const char*>(img.rgb.data() + static_cast<std::size_t>(y) * img.width * 3),
                   static_cast<std::size_t>(img.width) * 3);
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::string compressed(bound, '\0');
    if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &bound,
                  reinterpret_cast<const Bytef*>(raw.data()), static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw PngError("png_encode: deflate failed");
    compressed.resize(bound);

    std::string ihdr;
    pngimpl::put_u32be(ihdr, static_cast<std::uint32_t>(img.width));
    pngimpl::put_u32be(ihdr, static_cast<std::uint32_t>(img.height));
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(2);   // color type RGB
    ihdr.push_back(0);   // compression
    ihdr.push_back(0);   // filter
    ihdr.push_back(0);   // interlace

    std::string out(pngimpl::kSignature, 8);
    pngimpl::append_chunk(out, "IHDR", ihdr);
    pngimpl::append_chunk(out, "IDAT", compressed);
    pngimpl::append_chunk(out, "IEND", "");
    return out;
}

/// Decodes 8-bit non-interlaced RGB or RGBA PNGs (alpha is dropped).
inline Raster png_decode(std::string_view bytes) {
    if (!has_png_signature(bytes)) throw PngError("png_decode: bad signature");
    const auto* base = reinterpret_cast<const unsigned char*>(bytes.data());
    std::size_t pos = 8;
    int width = 0, height = 0, depth = 0, color = 0, interlace = 0;
    std::string idat;
    bool saw_ihdr = false;

    while (pos + 8 <= bytes.size()) {
        std::uint32_t len = pngimpl::read_u32be(base + pos);
        if (pos + 12 + len > bytes.size()) throw PngError("png_decode: truncated chunk");
        std::string_view type(reinterpret_cast<const char*>(base + pos + 4), 4);
        const unsigned char* data = base + pos + 8;
        if (type == "IHDR") {
            if (len != 13) throw PngError("png_decode: bad IHDR");
            width = static_cast<int>(pngimpl::read_u32be(data));
            height = static_cast<int>(pngimpl::read_u32be(data + 4));
            depth = data[8];
            color = data[9];
            interlace = data[12];
            saw_ihdr = true;
        } else if (type == "IDAT") {
            idat.append(reinterpret_cast<const char*>(data), len);
        } else if (type == "IEND") {
            break;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr || width <= 0 || height <= 0) throw PngError("png_decode: missing IHDR");
    if (depth != 8 || (color != 2 && color != 6) || interlace != 0)
        throw PngError("png_decode: unsupported format (need 8-bit RGB/RGBA, no interlace)");

    const int bpp = color == 2 ? 3 : 4;
    const std::size_t stride = static_cast<std::size_t>(width) * bpp;
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(height) * (stride + 1));
    uLongf raw_len = static_cast<uLongf>(raw.size());
    if (uncompress(raw.data(), &raw_len, reinterpret_cast<const Bytef*>(idat.data()),
                   static_cast<uLong>(idat.size())) != Z_OK ||
        raw_len != raw.size())
        throw PngError("png_decode: inflate failed");

    auto paeth = [](int a, int b, int c) {
        int p = a + b - c, pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
        if (pa <= pb && pa <= pc) return a;
        if (pb <= pc) return b;
        return c;
    };

    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(height) * stride);
    for (int y = 0; y < height; ++y) {
        const std::uint8_t filter = raw[static_cast<std::size_t>(y) * (stride + 1)];
        const std::uint8_t* src = raw.data() + static_cast<std::size_t>(y) * (stride + 1) + 1;
        std::uint8_t* dst = pixels.data() + static_cast<std::size_t>(y) * stride;
        const std::uint8_t* up = y > 0 ? pixels.data() + static_cast<std::size_t>(y - 1) * stride : nullptr;
        for (std::size_t i = 0; i < stride; ++i) {
            int a = i >= static_cast<std::size_t>(bpp) ? dst[i - bpp] : 0;
            int b = up ? up[i] : 0;
            int c = (up && i >= static_cast<std::size_t>(bpp)) ? up[i - bpp] : 0;
            int x = src[i];
            switch (filter) {
                case 0: break;
                case 1: x += a; break;
                case 2: x += b; break;
                case 3: x += (a + b) / 2; break;
                case 4: x += paeth(a, b, c); break;
                default: throw PngError("png_decode: bad filter type");
            }
            dst[i] = static_cast<std::uint8_t>(x);
        }
    }

    Raster out;
    out.width = width;
    out.height = height;
    out.rgb.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t px = 0; px < static_cast<std::size_t>(width) * height; ++px) {
        out.rgb[px * 3] = pixels[px * bpp];
        out.rgb[px * 3 + 1] = pixels[px * bpp + 1];
        out.rgb[px * 3 + 2] = pixels[px * bpp + 2];
    }
    return out;
}

}  // namespace verikit::detail
