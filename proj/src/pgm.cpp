#include "irfocus/pgm.hpp"

#include <cctype>
#include <fstream>
#include <string>

namespace irfocus {

namespace {

// Reads one whitespace-delimited header token, skipping '#' comments. Leaves
// the stream just past the single delimiter that terminated the token.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') {
                c = in.get();
            }
            c = in.get();
            continue;
        }
        if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

long parse_field(std::istream& in, const char* field) {
    const std::string tok = next_token(in);
    if (tok.empty()) {
        throw FormatError(std::string("pgm header: missing ") + field);
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("pgm header: ") + field + " is not a number: '" + tok + "'");
    }
}

} // namespace

void write_pgm(const ThermalFrame& frame, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << "P5\n" << frame.width() << " " << frame.height() << "\n65535\n";
    for (std::uint16_t v : frame.pixels()) {
        out.put(static_cast<char>(v >> 8));
        out.put(static_cast<char>(v & 0xff));
    }
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

ThermalFrame read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    const std::string magic = next_token(in);
    if (magic != "P5") {
        throw FormatError("pgm header: magic is '" + magic + "', expected 'P5'");
    }
    const long width = parse_field(in, "width");
    const long height = parse_field(in, "height");
    if (width <= 0 || height <= 0) {
        throw FormatError("pgm header: width/height must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
    const long maxval = parse_field(in, "maxval");
    if (maxval != 65535) {
        throw FormatError("pgm header: maxval is " + std::to_string(maxval) + ", expected 65535");
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<char> raw(count * 2);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
        throw FormatError("pgm pixel data truncated: expected " + std::to_string(raw.size()) +
                          " bytes, got " + std::to_string(in.gcount()));
    }
    std::vector<std::uint16_t> px(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto hi = static_cast<unsigned char>(raw[2 * i]);
        const auto lo = static_cast<unsigned char>(raw[2 * i + 1]);
        px[i] = static_cast<std::uint16_t>((hi << 8) | lo);
    }
    return ThermalFrame(static_cast<int>(width), static_cast<int>(height), std::move(px));
}

} // namespace irfocus
