#include "walkreg/graph6.hpp"

#include <cstdint>

#include "walkreg/errors.hpp"

namespace walkreg {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";
constexpr int64_t kMaxN = 68719476735;  // 2^36 - 1

bool valid_char(char c) { return c >= 63 && c <= 126; }

class BitReader {
 public:
  BitReader(std::string_view data, size_t pos) : data_(data), pos_(pos) {}

  int next_bit() {
    if (bit_ == 0) {
      if (pos_ >= data_.size()) throw InputError("graph6: truncated bit field");
      char c = data_[pos_++];
      if (!valid_char(c)) throw InputError("graph6: character outside alphabet");
      cur_ = c - 63;
      bit_ = 6;
    }
    --bit_;
    return (cur_ >> bit_) & 1;
  }

  size_t pos() const { return pos_; }
  int bits_left_in_char() const { return bit_; }
  int current() const { return cur_; }

 private:
  std::string_view data_;
  size_t pos_;
  int cur_ = 0;
  int bit_ = 0;
};

int64_t read_count(std::string_view s, size_t& pos) {
  if (pos >= s.size()) throw InputError("graph6: empty record");
  char c = s[pos];
  if (!valid_char(c)) throw InputError("graph6: malformed header");
  if (c != '~') {
    ++pos;
    return c - 63;
  }
  ++pos;
  int chars = 3;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    chars = 6;
  }
  int64_t n = 0;
  for (int i = 0; i < chars; ++i) {
    if (pos >= s.size()) throw InputError("graph6: truncated header");
    char d = s[pos++];
    if (!valid_char(d)) throw InputError("graph6: malformed header");
    n = (n << 6) | (d - 63);
  }
  return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  size_t pos = 0;
  int64_t n64 = read_count(text, pos);
  if (n64 > kMaxN) throw InputError("graph6: vertex count out of range");
  const int n = static_cast<int>(n64);

  BitReader bits(text, pos);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits.next_bit()) edges.emplace_back(u, v);
  // Only zero padding may remain, and no extra characters.
  while (bits.bits_left_in_char() > 0)
    if (bits.next_bit()) throw InputError("graph6: nonzero padding bits");
  if (bits.pos() != text.size()) throw InputError("graph6: trailing characters");
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int64_t n = g.n();
  if (n > kMaxN) throw InputError("graph6: vertex count out of range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int cur = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.adjacent(u, static_cast<int>(v)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((cur << (6 - nbits)) + 63));
  return out;
}

}  // namespace walkreg
