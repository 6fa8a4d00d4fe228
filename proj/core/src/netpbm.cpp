#include "fusebench/netpbm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "fusebench/error.hpp"

namespace fusebench::netpbm {

namespace {

struct Header {
  char kind = 0;  // '2', '3', '5' or '6'
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::size_t payload = 0;  // offset of the first sample
};

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  std::uint8_t take() { return bytes_[pos_++]; }

  void skip_space_and_comments() {
    while (!at_end()) {
      const auto c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token, preceded by optional whitespace/comments.
  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    if (at_end()) throw ParseError(std::string("unexpected end of data reading ") + what, pos_);
    if (!std::isdigit(peek())) {
      throw ParseError(std::string("expected decimal digits for ") + what, pos_);
    }
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(peek())) {
      value = value * 10 + static_cast<std::uint64_t>(take() - '0');
      if (value > 0xFFFFFFFFull) throw ParseError(std::string(what) + " is too large", start);
    }
    if (!at_end() && !std::isspace(peek()) && peek() != '#') {
      throw ParseError(std::string("unexpected character after ") + what, pos_);
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

Header parse_header(Cursor& cur, const char* allowed) {
  Header h;
  if (cur.remaining() < 2 || cur.peek() != 'P') throw ParseError("missing Netpbm magic", 0);
  cur.take();
  const char kind = static_cast<char>(cur.take());
  if (kind != allowed[0] && kind != allowed[1]) {
    throw ParseError(std::string("unsupported magic P") + kind + ", expected P" + allowed[0] +
                         " or P" + allowed[1],
                     0);
  }
  h.kind = kind;

  std::size_t at = cur.offset();
  const auto width = cur.number("width");
  if (width < 1 || width > 1u << 20) throw ParseError("width out of range", at);
  at = cur.offset();
  const auto height = cur.number("height");
  if (height < 1 || height > 1u << 20) throw ParseError("height out of range", at);
  at = cur.offset();
  const auto maxval = cur.number("maxval");
  if (maxval < 1 || maxval > static_cast<std::uint64_t>(kMaxMaxval)) {
    throw ParseError("maxval " + std::to_string(maxval) + " outside [1, 65535]", at);
  }
  h.width = static_cast<int>(width);
  h.height = static_cast<int>(height);
  h.maxval = static_cast<int>(maxval);

  if (kind == '5' || kind == '6') {
    // Exactly one whitespace byte separates the header from binary data.
    if (cur.at_end() || !std::isspace(cur.peek())) {
      throw ParseError("missing whitespace before binary payload", cur.offset());
    }
    cur.take();
  }
  h.payload = cur.offset();
  return h;
}

// Decodes width*height*channels samples into a flat interleaved vector.
std::vector<double> decode_samples(Cursor& cur, const Header& h, int channels) {
  const std::size_t count =
      static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height) *
      static_cast<std::size_t>(channels);
  std::vector<double> out(count);
  const bool binary = h.kind == '5' || h.kind == '6';
  if (binary) {
    const std::size_t bytes_per = h.maxval > 255 ? 2 : 1;
    if (cur.remaining() < count * bytes_per) {
      throw ParseError("truncated payload: need " + std::to_string(count * bytes_per) +
                           " bytes, have " + std::to_string(cur.remaining()),
                       cur.offset() + cur.remaining());
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = cur.offset();
      std::uint32_t v = cur.take();
      if (bytes_per == 2) v = (v << 8) | cur.take();
      if (v > static_cast<std::uint32_t>(h.maxval)) {
        throw ParseError("sample " + std::to_string(v) + " exceeds maxval", at);
      }
      out[i] = static_cast<double>(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      const std::size_t at = cur.offset();
      if (cur.at_end()) throw ParseError("truncated payload", at);
      const auto v = cur.number("sample");
      if (v > static_cast<std::uint64_t>(h.maxval)) {
        throw ParseError("sample " + std::to_string(v) + " exceeds maxval", at);
      }
      out[i] = static_cast<double>(v);
    }
  }
  return out;
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void spit(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void check_maxval(int maxval) {
  if (maxval < 1 || maxval > kMaxMaxval) {
    throw ParameterError("maxval must be in [1, 65535], got " + std::to_string(maxval));
  }
}

void put_header(std::vector<std::uint8_t>& out, char kind, int w, int h, int maxval) {
  const std::string header = std::string("P") + kind + "\n" + std::to_string(w) + " " +
                             std::to_string(h) + "\n" + std::to_string(maxval) + "\n";
  out.insert(out.end(), header.begin(), header.end());
}

void put_sample(std::vector<std::uint8_t>& out, double sample, int maxval) {
  const std::uint32_t q = quantize(sample, maxval);
  if (maxval > 255) out.push_back(static_cast<std::uint8_t>(q >> 8));
  out.push_back(static_cast<std::uint8_t>(q & 0xFFu));
}

}  // namespace

std::uint32_t quantize(double sample, int maxval) {
  const double r = std::round(sample);  // half away from zero
  if (!(r > 0.0)) return 0;
  if (r >= maxval) return static_cast<std::uint32_t>(maxval);
  return static_cast<std::uint32_t>(r);
}

Band decode_pgm(std::span<const std::uint8_t> bytes) {
  Cursor cur(bytes);
  const Header h = parse_header(cur, "25");
  return Band(h.width, h.height, decode_samples(cur, h, 1), h.maxval);
}

MultibandImage decode_ppm(std::span<const std::uint8_t> bytes) {
  Cursor cur(bytes);
  const Header h = parse_header(cur, "36");
  const std::vector<double> interleaved = decode_samples(cur, h, 3);
  std::vector<Band> bands(3, Band(h.width, h.height, 0.0, h.maxval));
  const std::size_t n = bands[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 3; ++c) bands[c].samples()[i] = interleaved[i * 3 + c];
  }
  return MultibandImage(std::move(bands));
}

std::vector<std::uint8_t> encode_pgm(const Band& band, int maxval) {
  check_maxval(maxval);
  std::vector<std::uint8_t> out;
  out.reserve(32 + band.size() * (maxval > 255 ? 2 : 1));
  put_header(out, '5', band.width(), band.height(), maxval);
  for (double v : band.samples()) put_sample(out, v, maxval);
  return out;
}

std::vector<std::uint8_t> encode_ppm(const MultibandImage& img, int maxval) {
  check_maxval(maxval);
  require_band_count(img, 3, "encode_ppm");
  std::vector<std::uint8_t> out;
  const std::size_t n = img.band(0).size();
  out.reserve(32 + 3 * n * (maxval > 255 ? 2 : 1));
  put_header(out, '6', img.width(), img.height(), maxval);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 3; ++c) put_sample(out, img.band(c).samples()[i], maxval);
  }
  return out;
}

Band read_pgm(const std::filesystem::path& path) { return decode_pgm(slurp(path)); }

MultibandImage read_ppm(const std::filesystem::path& path) { return decode_ppm(slurp(path)); }

void write_pgm(const Band& band, const std::filesystem::path& path, int maxval) {
  spit(path, encode_pgm(band, maxval));
}

void write_ppm(const MultibandImage& img, const std::filesystem::path& path, int maxval) {
  spit(path, encode_ppm(img, maxval));
}

}  // namespace fusebench::netpbm
