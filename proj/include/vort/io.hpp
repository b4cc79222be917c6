#pragma once

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vort/grid.hpp"

namespace vort {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Binary field container. Layout (little-endian):
//   bytes 0..3   magic "VFLD"
//   u32          version (1)
//   u32          dim
//   u32          n
//   f64          box_length
//   u8           representation: 0 = physical, 1 = spectral
//   u32          component count
//   payload      row-major f64 per component (physical), or interleaved
//                re/im f64 pairs per component (spectral)
// ---------------------------------------------------------------------------

namespace detail {

inline GridSpec read_field_header(std::istream& is, std::uint8_t& repr, std::uint32_t& ncomp) {
    char magic[4];
    std::uint32_t version = 0, dim = 0, n = 0;
    double box = 0.0;
    is.read(magic, 4);
    is.read(reinterpret_cast<char*>(&version), 4);
    is.read(reinterpret_cast<char*>(&dim), 4);
    is.read(reinterpret_cast<char*>(&n), 4);
    is.read(reinterpret_cast<char*>(&box), 8);
    is.read(reinterpret_cast<char*>(&repr), 1);
    is.read(reinterpret_cast<char*>(&ncomp), 4);
    if (!is || std::memcmp(magic, "VFLD", 4) != 0 || version != 1)
        throw std::runtime_error("field file: bad header");
    return make_grid(static_cast<int>(dim), static_cast<int>(n), box);
}

inline void write_field_header(std::ostream& os, const GridSpec& g, std::uint8_t repr,
                               std::uint32_t ncomp) {
    const std::uint32_t version = 1, dim = static_cast<std::uint32_t>(g.dim),
                        n = static_cast<std::uint32_t>(g.n);
    os.write("VFLD", 4);
    os.write(reinterpret_cast<const char*>(&version), 4);
    os.write(reinterpret_cast<const char*>(&dim), 4);
    os.write(reinterpret_cast<const char*>(&n), 4);
    os.write(reinterpret_cast<const char*>(&g.box_length), 8);
    os.write(reinterpret_cast<const char*>(&repr), 1);
    os.write(reinterpret_cast<const char*>(&ncomp), 4);
}

}  // namespace detail

inline void save_field(const PhysicalField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    detail::write_field_header(os, f.grid, 0, static_cast<std::uint32_t>(f.ncomp()));
    for (const auto& c : f.components)
        os.write(reinterpret_cast<const char*>(c.data()),
                 static_cast<std::streamsize>(c.size() * sizeof(double)));
}

inline void save_field(const SpectralField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    detail::write_field_header(os, f.grid, 1, static_cast<std::uint32_t>(f.ncomp()));
    for (const auto& c : f.components)
        os.write(reinterpret_cast<const char*>(c.data()),
                 static_cast<std::streamsize>(c.size() * 2 * sizeof(double)));
}

struct LoadedField {
    bool spectral = false;
    PhysicalField physical;
    SpectralField spectral_field;
};

inline LoadedField load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path);
    std::uint8_t repr = 0;
    std::uint32_t ncomp = 0;
    GridSpec g = detail::read_field_header(is, repr, ncomp);
    LoadedField out;
    out.spectral = repr == 1;
    if (out.spectral) {
        out.spectral_field = SpectralField(g, static_cast<int>(ncomp));
        for (auto& c : out.spectral_field.components)
            is.read(reinterpret_cast<char*>(c.data()),
                    static_cast<std::streamsize>(c.size() * 2 * sizeof(double)));
    } else {
        out.physical = PhysicalField(g, static_cast<int>(ncomp));
        for (auto& c : out.physical.components)
            is.read(reinterpret_cast<char*>(c.data()),
                    static_cast<std::streamsize>(c.size() * sizeof(double)));
    }
    if (!is) throw std::runtime_error("load_field: truncated payload in " + path);
    return out;
}

// ---------------------------------------------------------------------------
// Hashing and deterministic number formatting
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t hash_string(const std::string& s) { return fnv1a(s.data(), s.size()); }

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Shortest round-trip decimal representation; used for byte-stable CSV.
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    for (int prec = 1; prec < 17; ++prec) {
        char t[40];
        std::snprintf(t, sizeof t, "%.*g", prec, v);
        std::sscanf(t, "%lf", &back);
        if (back == v) return t;
    }
    return buf;
}

inline Json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << text;
}

}  // namespace vort
