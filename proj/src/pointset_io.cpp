#include "linefree/pointset_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace linefree {
namespace {

constexpr std::size_t kHeaderBytes = 16;
constexpr const char* kTextHeader = "# linefree-pointset v";

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

std::uint32_t get_u32(const unsigned char* in) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[i]) << (8 * i);
  return v;
}

Space space_from_header(std::uint64_t n, std::uint64_t p) {
  try {
    return Space(make_modulus(p), static_cast<unsigned>(n));
  } catch (const Error& e) {
    throw Error(ErrorKind::Format, std::string("bad point set header: ") + e.what());
  }
}

}  // namespace

std::vector<unsigned char> encode_binary(const PointSet& set) {
  const Space& sp = set.space();
  const std::uint64_t nbytes = (sp.size() + 7) / 8;
  std::vector<unsigned char> out;
  out.reserve(kHeaderBytes + nbytes);
  out.insert(out.end(), std::begin(kBinaryMagic), std::end(kBinaryMagic));
  put_u32(out, kFormatVersion);
  put_u32(out, sp.dim());
  put_u32(out, sp.p());
  const auto words = set.words();
  for (std::uint64_t b = 0; b < nbytes; ++b)
    out.push_back(static_cast<unsigned char>(words[b / 8] >> (8 * (b % 8))));
  return out;
}

PointSet decode_binary(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < kHeaderBytes || std::memcmp(bytes.data(), kBinaryMagic, 4) != 0)
    throw Error(ErrorKind::Format, "missing LFPS magic");
  if (get_u32(bytes.data() + 4) != kFormatVersion)
    throw Error(ErrorKind::Format, "unsupported point set format version");
  const Space sp = space_from_header(get_u32(bytes.data() + 8), get_u32(bytes.data() + 12));
  const std::uint64_t nbytes = (sp.size() + 7) / 8;
  if (bytes.size() != kHeaderBytes + nbytes)
    throw Error(ErrorKind::Format, "point set payload has the wrong length");
  std::vector<std::uint64_t> words((sp.size() + 63) / 64, 0);
  for (std::uint64_t b = 0; b < nbytes; ++b)
    words[b / 8] |= static_cast<std::uint64_t>(bytes[kHeaderBytes + b]) << (8 * (b % 8));
  PointSet set(sp);
  set.assign_words(std::move(words));
  return set;
}

std::string encode_text(const PointSet& set) {
  const Space& sp = set.space();
  std::ostringstream out;
  out << kTextHeader << kFormatVersion << " n=" << sp.dim() << " p=" << sp.p() << '\n';
  for (const Point& pt : set.points()) {
    for (unsigned i = 0; i < sp.dim(); ++i) out << (i ? "," : "") << pt.c[i];
    out << '\n';
  }
  return out.str();
}

PointSet decode_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kTextHeader, 0) != 0)
    throw Error(ErrorKind::Format, "missing text point set header");
  unsigned version = 0, n = 0, p = 0;
  if (std::sscanf(line.c_str() + std::strlen(kTextHeader), "%u n=%u p=%u", &version, &n, &p) != 3)
    throw Error(ErrorKind::Format, "malformed text point set header");
  if (version != kFormatVersion) throw Error(ErrorKind::Format, "unsupported text format version");
  PointSet set(space_from_header(n, p));
  std::uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    Point pt;
    pt.dim = n;
    long long v = 0;
    unsigned i = 0;
    while (fields >> v) {
      if (i >= n || v < 0 || v >= static_cast<long long>(p))
        throw Error(ErrorKind::Format, "bad coordinate on line " + std::to_string(lineno));
      pt.c[i++] = static_cast<Elem>(v);
    }
    if (i != n || !fields.eof())
      throw Error(ErrorKind::Format, "bad point on line " + std::to_string(lineno));
    set.insert(pt);
  }
  return set;
}

SetFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".txt" || ext == ".csv") ? SetFormat::Text : SetFormat::Binary;
}

void save(const PointSet& set, const std::filesystem::path& path, SetFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  if (format == SetFormat::Binary) {
    const auto bytes = encode_binary(set);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    out << encode_text(set);
  }
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

PointSet load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kBinaryMagic, 4) == 0)
    return decode_binary(bytes);
  std::istringstream text(std::string(bytes.begin(), bytes.end()));
  return decode_text(text);
}

}  // namespace linefree
