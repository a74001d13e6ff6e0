#ifndef GRAHAM_COLOURING_HPP_
#define GRAHAM_COLOURING_HPP_

// Full two-colourings of K(C_n): file format, verification, symmetry check
// and the exhaustive solution counter for tiny n.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "graham/cube.hpp"
#include "graham/groups.hpp"

namespace graham {

/// One colour bit per variable of a (possibly quotiented) problem.
using Assignment = std::vector<std::uint8_t>;

/// One colour bit per edge in canonical edge order.
struct Colouring {
  int n = 0;
  std::string symmetry = "I";
  std::string comment;
  std::vector<std::uint8_t> bits;

  Colouring() = default;
  explicit Colouring(int dim) : n(dim), bits(edge_count(dim), 0) { check_dimension(dim); }

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline char hex_digit(unsigned v) { return "0123456789abcdef"[v & 15U]; }

inline std::string to_hex_body(const std::vector<std::uint8_t>& bits) {
  std::string body((bits.size() + 3) / 4, '0');
  for (std::size_t d = 0; d < body.size(); ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t k = d * 4 + b;
      if (k < bits.size() && (bits[k] & 1U)) v |= 1U << b;
    }
    body[d] = hex_digit(v);
  }
  return body;
}

inline std::uint32_t crc32_of(const std::string& s) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t off = 0;
  while (off < s.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(s.size() - off, 1U << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(s.data() + off), chunk);
    off += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

inline std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

/// Shared reader for colouring and assignment files. `expect_count` receives
/// the header fields and returns the number of bits the body must carry.
struct HexRecord {
  int n = 0;
  std::string symmetry;
  std::string comment;
  std::vector<std::uint8_t> bits;
};

template <class CountFn>
HexRecord read_hex_record(std::istream& in, const std::string& magic, const std::string& count_key,
                          CountFn&& expected_bits) {
  HexRecord rec;
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw FormatError(std::string("missing ") + what, lineno + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };
  auto field = [&](const std::string& key) -> std::string {
    if (line.rfind(key + "=", 0) != 0) throw FormatError("expected '" + key + "=...'", lineno);
    return line.substr(key.size() + 1);
  };
  next("header");
  if (line != magic) throw FormatError("bad header, expected '" + magic + "'", lineno);
  next("n line");
  try {
    std::size_t used = 0;
    const std::string v = field("n");
    rec.n = std::stoi(v, &used);
    if (used != v.size() || rec.n < 0 || rec.n > kMaxDimension) throw std::out_of_range("");
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    throw FormatError("bad dimension", lineno);
  }
  next("symmetry line");
  rec.symmetry = field("symmetry");
  if (rec.symmetry.empty()) throw FormatError("empty symmetry", lineno);
  std::size_t count_field = 0;
  bool have_count = false;
  next("body");
  if (!count_key.empty()) {
    try {
      const std::string v = field(count_key);
      std::size_t used = 0;
      count_field = std::stoull(v, &used);
      if (used != v.size()) throw std::out_of_range("");
      have_count = true;
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("bad " + count_key, lineno);
    }
    next("body");
  }
  if (line.rfind("comment=", 0) == 0) {
    rec.comment = line.substr(8);
    next("body");
  }
  const std::size_t nbits = expected_bits(rec.n, have_count ? count_field : 0);
  const std::string body = line;
  const std::size_t body_line = lineno;
  if (body.size() != (nbits + 3) / 4)
    throw FormatError("body has " + std::to_string(body.size()) + " hex digits, expected " +
                          std::to_string((nbits + 3) / 4),
                      body_line);
  rec.bits.assign(nbits, 0);
  for (std::size_t d = 0; d < body.size(); ++d) {
    const char ch = body[d];
    unsigned v;
    if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') v = static_cast<unsigned>(ch - 'a' + 10);
    else throw FormatError("invalid hex digit at column " + std::to_string(d + 1), body_line);
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t k = d * 4 + b;
      if (k < nbits) rec.bits[k] = (v >> b) & 1U;
      else if ((v >> b) & 1U) throw FormatError("nonzero padding bits", body_line);
    }
  }
  next("crc32 line");
  const std::string crc = field("crc32");
  if (crc.size() != 8 || crc != hex8(crc32_of(body)))
    throw FormatError("checksum mismatch", lineno);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line != "\r") throw FormatError("trailing data", lineno);
  }
  return rec;
}

inline void write_hex_record(std::ostream& os, const std::string& magic, int n,
                             const std::string& symmetry, const std::string& count_line,
                             const std::string& comment, const std::vector<std::uint8_t>& bits) {
  const std::string body = to_hex_body(bits);
  os << magic << '\n' << "n=" << n << '\n' << "symmetry=" << symmetry << '\n';
  if (!count_line.empty()) os << count_line << '\n';
  if (!comment.empty()) os << "comment=" << comment << '\n';
  os << body << '\n' << "crc32=" << hex8(crc32_of(body)) << '\n';
}

}  // namespace detail

inline void write_colouring(std::ostream& os, const Colouring& c) {
  if (c.bits.size() != edge_count(c.n))
    throw std::invalid_argument("write_colouring: length does not match n");
  if (c.comment.find('\n') != std::string::npos)
    throw std::invalid_argument("write_colouring: comment contains newline");
  detail::write_hex_record(os, "graham-colouring v1", c.n, c.symmetry.empty() ? "I" : c.symmetry,
                           "", c.comment, c.bits);
}

inline Colouring read_colouring(std::istream& in) {
  auto rec = detail::read_hex_record(in, "graham-colouring v1", "",
                                     [](int n, std::size_t) { return edge_count(n); });
  Colouring c;
  c.n = rec.n;
  c.symmetry = std::move(rec.symmetry);
  c.comment = std::move(rec.comment);
  c.bits = std::move(rec.bits);
  return c;
}

inline void write_colouring(const std::string& path, const Colouring& c) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_colouring(os, c);
  if (!os) throw std::runtime_error("write failed: " + path);
}

inline Colouring read_colouring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_colouring(in);
}

/// A quotient-level assignment: the colouring file layout with a `vars=`
/// line after `symmetry=` and one bit per variable.
struct AssignmentFile {
  int n = 0;
  std::string symmetry = "I";
  std::string comment;
  Assignment values;
};

inline void write_assignment(std::ostream& os, const AssignmentFile& a) {
  if (a.comment.find('\n') != std::string::npos)
    throw std::invalid_argument("write_assignment: comment contains newline");
  detail::write_hex_record(os, "graham-assignment v1", a.n, a.symmetry.empty() ? "I" : a.symmetry,
                           "vars=" + std::to_string(a.values.size()), a.comment, a.values);
}

inline AssignmentFile read_assignment(std::istream& in) {
  auto rec = detail::read_hex_record(in, "graham-assignment v1", "vars",
                                     [](int, std::size_t vars) { return vars; });
  return {rec.n, std::move(rec.symmetry), std::move(rec.comment), std::move(rec.bits)};
}

inline void write_assignment(const std::string& path, const AssignmentFile& a) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_assignment(os, a);
  if (!os) throw std::runtime_error("write failed: " + path);
}

inline AssignmentFile read_assignment(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_assignment(in);
}

struct VerificationReport {
  std::uint64_t violated = 0;
  std::vector<PlanarQuad> examples;  // first few violations, in stream order
  bool valid() const { return violated == 0; }
};

inline VerificationReport verify(const Colouring& c, std::size_t keep = 20) {
  if (c.bits.size() != edge_count(c.n))
    throw std::invalid_argument("verify: colouring length does not match n");
  VerificationReport r;
  const auto& b = c.bits;
  for_each_planar_quad_raw(c.n, [&](vertex_t p, vertex_t q, vertex_t s, vertex_t t) {
    const std::uint8_t x = b[edge_index_unchecked(p, q)];
    if (b[edge_index_unchecked(p, s)] != x || b[edge_index_unchecked(p, t)] != x ||
        b[edge_index_unchecked(q, s)] != x || b[edge_index_unchecked(q, t)] != x ||
        b[edge_index_unchecked(s, t)] != x)
      return;
    if (r.examples.size() < keep) r.examples.push_back(make_quad(p, q, s, t));
    ++r.violated;
  });
  return r;
}

/// `VALID`, or `INVALID <count>` followed by up to 20 quads in hex.
inline void write_report(std::ostream& os, const VerificationReport& r) {
  if (r.valid()) {
    os << "VALID\n";
    return;
  }
  os << "INVALID " << r.violated << '\n';
  for (const auto& q : r.examples) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%x %x %x %x\n", q.vertices[0], q.vertices[1], q.vertices[2],
                  q.vertices[3]);
    os << buf;
  }
}

inline bool is_symmetric(const Colouring& c, const GroupSpec& g) {
  if (g.degree != c.n) throw std::invalid_argument("is_symmetric: degree mismatch");
  for (const auto& p : g.generators) {
    const auto table = vertex_table(p);
    edge_t e = 0;
    for (vertex_t v = 1; v < vertex_count(c.n); ++v)
      for (vertex_t u = 0; u < v; ++u, ++e)
        if (c.bits[edge_index_unchecked(table[u], table[v])] != c.bits[e]) return false;
  }
  return true;
}

/// Number of colourings of K(C_n) with no monochromatic planar quad, by a
/// reflected Gray-code walk over all 2^(n_E) colourings. n <= 3 only.
inline std::uint64_t count_solutions(int n) {
  if (n < 0) throw std::invalid_argument("count_solutions: negative n");
  if (n > 3) throw std::invalid_argument("count_solutions: n >= 4 is infeasible to enumerate");
  const std::size_t ne = edge_count(n);
  std::vector<std::array<edge_t, 6>> quads;
  for_each_planar_quad(n, [&](const PlanarQuad& q) { quads.push_back(q.edges); });
  std::vector<std::vector<std::uint32_t>> on_edge(ne);
  for (std::uint32_t i = 0; i < quads.size(); ++i)
    for (edge_t e : quads[i]) on_edge[e].push_back(i);
  std::vector<std::uint8_t> ones(quads.size(), 0);
  std::vector<std::uint8_t> colour(ne, 0);
  // All edges start at 0, so every quad is violated.
  std::uint64_t violated = quads.size();
  std::uint64_t solutions = violated == 0 ? 1 : 0;
  const std::uint64_t steps = std::uint64_t{1} << ne;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int e = std::countr_zero(i);
    const bool up = colour[e] == 0;
    colour[e] ^= 1U;
    for (std::uint32_t q : on_edge[e]) {
      const std::uint8_t before = ones[q];
      const std::uint8_t after = up ? before + 1 : before - 1;
      ones[q] = after;
      violated -= (before == 0 || before == 6) ? 1 : 0;
      violated += (after == 0 || after == 6) ? 1 : 0;
    }
    if (violated == 0) ++solutions;
  }
  return solutions;
}

}  // namespace graham

#endif  // GRAHAM_COLOURING_HPP_
