#pragma once

// On-disk formats for PointSet.
//
// Binary (little-endian):
//   bytes 0..3   magic "LFPS"
//   bytes 4..7   format version (1)
//   bytes 8..11  dimension n
//   bytes 12..15 modulus p
//   then ceil(p^n / 8) bytes of membership bits; point index i lives in bit
//   (i % 8) of byte (i / 8), index = x*p^2 + y*p + z (n = 3) or y*p + z.
//
// Text:
//   # linefree-pointset v1 n=<n> p=<p>
//   one member per line as comma-separated coordinates, in index order.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "linefree/geometry.hpp"

namespace linefree {

enum class SetFormat { Binary, Text };

inline constexpr char kBinaryMagic[4] = {'L', 'F', 'P', 'S'};
inline constexpr std::uint32_t kFormatVersion = 1;

std::vector<unsigned char> encode_binary(const PointSet& set);
PointSet decode_binary(const std::vector<unsigned char>& bytes);

std::string encode_text(const PointSet& set);
PointSet decode_text(std::istream& in);

/// Binary unless the extension is .txt / .csv.
SetFormat format_for_path(const std::filesystem::path& path);

void save(const PointSet& set, const std::filesystem::path& path, SetFormat format);
/// Detects the format from the leading magic bytes.
PointSet load(const std::filesystem::path& path);

}  // namespace linefree
