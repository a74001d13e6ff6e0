#ifndef GRAHAM_GROUPS_HPP_
#define GRAHAM_GROUPS_HPP_

// Coordinate-permutation groups acting on hypercube vertices and edges.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "graham/cube.hpp"

namespace graham {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of coordinates 1..degree. Stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : image_(static_cast<std::size_t>(degree)) {
    for (int i = 0; i < degree; ++i) image_[i] = static_cast<std::uint8_t>(i);
  }

  /// `one_based[i]` is the image of coordinate i+1, itself 1-based.
  static Permutation from_images(const std::vector<int>& one_based) {
    Permutation p(static_cast<int>(one_based.size()));
    std::vector<bool> seen(one_based.size(), false);
    for (std::size_t i = 0; i < one_based.size(); ++i) {
      const int img = one_based[i] - 1;
      if (img < 0 || img >= static_cast<int>(one_based.size()) || seen[img])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[img] = true;
      p.image_[i] = static_cast<std::uint8_t>(img);
    }
    return p;
  }

  int degree() const { return static_cast<int>(image_.size()); }
  /// 1-based image of 1-based point.
  int operator()(int point) const { return image_[point - 1] + 1; }
  int image0(int i) const { return image_[i]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  /// (p * q)(x) = p(q(x)): apply q first.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    Permutation r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.image_[i] = p.image_[q.image_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// Bit p(i) of the result is bit i of v.
  vertex_t apply(vertex_t v) const {
    vertex_t out = 0;
    for (int i = 0; i < degree(); ++i)
      out |= ((v >> i) & 1U) << image_[i];
    return out;
  }

  const std::vector<std::uint8_t>& images() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

inline vertex_t apply_vertex(const Permutation& p, vertex_t v) { return p.apply(v); }

inline edge_t apply_edge(const Permutation& p, edge_t e) {
  const auto [u, v] = edge_endpoints(e);
  return edge_index_unchecked(p.apply(u), p.apply(v));
}

inline PlanarQuad apply_quad(const Permutation& p, const PlanarQuad& q) {
  return make_quad(p.apply(q.vertices[0]), p.apply(q.vertices[1]),
                   p.apply(q.vertices[2]), p.apply(q.vertices[3]));
}

/// Table of p applied to every vertex of C_n.
inline std::vector<vertex_t> vertex_table(const Permutation& p) {
  const int n = p.degree();
  check_dimension(n);
  // Build from single-bit images: image of v is the OR over its set bits.
  std::vector<vertex_t> table(vertex_count(n), 0);
  for (vertex_t v = 1; v < table.size(); ++v) {
    const vertex_t low = v & (~v + 1);
    table[v] = table[v ^ low] | (vertex_t{1} << p.image0(std::countr_zero(low)));
  }
  return table;
}

/// Parses disjoint cycle notation such as "(1 5 7)(2 9 4)(3 8 10)".
/// Points within a cycle may be separated by spaces or commas.
inline Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 0 || degree > 255)
    throw ParseError("degree out of range", 0);
  std::vector<int> image(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) image[i] = i;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 100000) throw ParseError("point too large", start);
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." +
                             std::to_string(degree),
                         start);
      if (used[value - 1])
        throw ParseError("repeated point " + std::to_string(value), start);
      used[value - 1] = true;
      cycle.push_back(static_cast<int>(value - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  std::vector<int> one_based(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) one_based[i] = image[i] + 1;
  return Permutation::from_images(one_based);
}

/// Canonical cycle form: each cycle starts at its smallest point, cycles
/// ordered by that point, fixed points omitted. Identity is "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.image0(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p.image0(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::uint64_t> order;

  /// "name@degree", the catalog key.
  std::string key() const { return name + "@" + std::to_string(degree); }
};

inline GroupSpec make_group(std::string name, int degree,
                            const std::vector<std::string>& cycles,
                            std::optional<std::uint64_t> order = std::nullopt) {
  GroupSpec g{std::move(name), degree, {}, order};
  for (const auto& c : cycles) g.generators.push_back(parse_cycles(c, degree));
  return g;
}

inline GroupSpec identity_group(int degree) {
  return GroupSpec{"I", degree, {}, 1};
}

/// Moves every generator of `g` to points offset+1..offset+g.degree inside a
/// permutation of `degree` points.
inline std::vector<Permutation> shifted_generators(const GroupSpec& g, int offset,
                                                   int degree) {
  std::vector<Permutation> out;
  for (const auto& p : g.generators) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[i] = i + 1;
    for (int i = 0; i < p.degree(); ++i) img[offset + i] = offset + p.image0(i) + 1;
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

inline GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b,
                                std::string name = {}) {
  GroupSpec g;
  g.name = name.empty() ? a.name + "x" + b.name : std::move(name);
  g.degree = a.degree + b.degree;
  g.generators = shifted_generators(a, 0, g.degree);
  for (auto& p : shifted_generators(b, a.degree, g.degree)) g.generators.push_back(std::move(p));
  if (a.order && b.order) g.order = *a.order * *b.order;
  return g;
}

inline GroupSpec cyclic_group(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) img[i] = (i + 1) % k + 1;
  GroupSpec g{"C_" + std::to_string(k), k, {}, static_cast<std::uint64_t>(k)};
  if (k > 1) g.generators.push_back(Permutation::from_images(img));
  return g;
}

/// S_k = <(1 2), (1 2 ... k)>.
inline GroupSpec symmetric_group(int k) {
  GroupSpec g{"S_" + std::to_string(k), k, {}, 1};
  std::uint64_t order = 1;
  for (int i = 2; i <= k; ++i) order *= static_cast<std::uint64_t>(i);
  g.order = order;
  if (k >= 2) {
    g.generators.push_back(parse_cycles("(1 2)", k));
    if (k >= 3) g.generators.push_back(cyclic_group(k).generators.front());
  }
  return g;
}

/// C_k wr_m top: one k-cycle per block of k consecutive points, plus `top`
/// lifted to permute the m blocks.
inline GroupSpec wreath(int k, int m, const GroupSpec& top, std::string name = {}) {
  if (top.degree != m) throw std::invalid_argument("wreath: top degree must equal m");
  GroupSpec g;
  g.degree = k * m;
  g.name = name.empty() ? "C" + std::to_string(k) + "wr" + std::to_string(m) + top.name
                        : std::move(name);
  const GroupSpec base = cyclic_group(k);
  for (int b = 0; b < m; ++b)
    for (auto& p : shifted_generators(base, b * k, g.degree)) g.generators.push_back(std::move(p));
  for (const auto& t : top.generators) {
    std::vector<int> img(static_cast<std::size_t>(g.degree));
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < k; ++i) img[b * k + i] = t.image0(b) * k + i + 1;
    g.generators.push_back(Permutation::from_images(img));
  }
  if (top.order) {
    std::uint64_t order = *top.order;
    for (int b = 0; b < m; ++b) order *= static_cast<std::uint64_t>(k);
    g.order = order;
  }
  return g;
}

class OrderOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first closure of the generators. Throws OrderOverflow once more
/// than `cap` elements have been found.
inline std::vector<Permutation> enumerate_elements(const GroupSpec& g, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("enumerate_elements: cap must be >= 1");
  struct Hash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto b : v) h = (h ^ b) * 1099511628211ULL;
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint8_t>, Hash> seen;
  std::vector<Permutation> elements;
  const Permutation id(g.degree);
  seen.insert(id.images());
  elements.push_back(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : g.generators) {
      Permutation next = gen * elements[head];
      if (seen.insert(next.images()).second) {
        if (elements.size() >= cap)
          throw OrderOverflow("group " + g.name + " has more than " +
                              std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

/// The group catalog. Generators given in the literature are used verbatim;
/// the rest are built from standard constructions.
inline const std::vector<GroupSpec>& catalog() {
  static const std::vector<GroupSpec> groups = [] {
    std::vector<GroupSpec> g;
    g.push_back(symmetric_group(9));
    g.push_back(symmetric_group(10));
    g.push_back(make_group("S_5", 10, {"(1 5 7)(2 9 4)(3 8 10)", "(1 8)(2 5 6 3)(4 9 7 10)"}, 120));
    g.push_back(make_group("M_11", 11, {"(2 10)(4 11)(5 7)(8 9)", "(1 4 3 8)(2 5 6 9)"}, 7920));
    g.push_back(make_group("Syl3S11", 11, {"(3 9 7)(6 11 10)", "(3 6 4)(5 9 11)(7 10 8)"}, 81));
    g.push_back(make_group("L2_11", 11, {"(1 5)(2 4)(3 10)(7 11)", "(3 11 5)(4 7 9)(6 8 10)"}, 660));
    g.push_back(make_group("M_12", 12,
                           {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)",
                            "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"},
                           95040));
    g.push_back(make_group("M_11", 12, {"(1 6)(2 9)(5 7)(8 10)", "(1 6 7 4)(2 8)(3 9)(5 11 12 10)"}, 7920));
    g.push_back(make_group("Syl3S12", 12, {"(1 7 11)(3 4 10)", "(1 10 12)(2 7 3)(4 8 11)", "(5 6 9)"}, 243));
    g.push_back(make_group("D4cubed", 12,
                           {"(1 2)", "(1 3)(2 4)", "(5 6)", "(5 7)(6 8)", "(9 10)", "(9 11)(10 12)"},
                           512));
    g.push_back(make_group("AGL1_5xL3_2", 12,
                           {"(2 3 4 5)", "(1 2 3 5 4)", "(6 9)(11 12)", "(6 8 7)(9 12 10)"}, 3360));
    g.push_back(direct_product(symmetric_group(3), symmetric_group(9), "S3xS9"));
    g.push_back(wreath(3, 4, cyclic_group(4), "C3wr4C4"));
    GroupSpec a4 = make_group("A_4", 4, {"(1 2 3)", "(2 3 4)"}, 12);
    g.push_back(wreath(3, 4, a4, "C3wr4A4"));
    g.push_back(make_group("L3_3", 13, {"(1 10 4)(6 9 7)(8 12 13)", "(1 3 2)(4 9 5)(7 8 12)(10 13 11)"}, 5616));
    g.push_back(direct_product(symmetric_group(5), symmetric_group(9), "S5xS9"));
    return g;
  }();
  return groups;
}

/// Resolves "name", "name@degree", or "I"/"identity" (needs a degree).
/// A bare name that exists at several degrees is disambiguated by `degree`.
inline GroupSpec find_group(std::string_view query, std::optional<int> degree = std::nullopt) {
  std::string name(query);
  std::optional<int> want = degree;
  if (const auto at = name.find('@'); at != std::string::npos) {
    int d = 0;
    try {
      d = std::stoi(name.substr(at + 1));
    } catch (const std::exception&) {
      throw NotFound("bad group degree in '" + name + "'");
    }
    if (want && *want != d)
      throw NotFound("group " + name + " does not act on " + std::to_string(*want) + " points");
    want = d;
    name = name.substr(0, at);
  }
  if (name == "I" || name == "identity") {
    if (!want) throw NotFound("identity group needs a degree");
    return identity_group(*want);
  }
  std::vector<const GroupSpec*> hits;
  for (const auto& g : catalog())
    if (g.name == name && (!want || g.degree == *want)) hits.push_back(&g);
  if (hits.empty()) throw NotFound("unknown group '" + std::string(query) + "'");
  if (hits.size() > 1) throw NotFound("ambiguous group '" + name + "'; use name@degree");
  return *hits.front();
}

/// Group file: `degree <n>`, `name <string>`, optional `order <int>`, then one
/// generator per line in cycle notation. Blank lines and '#' comments skipped.
inline GroupSpec parse_group_file(std::istream& in) {
  GroupSpec g;
  bool have_degree = false;
  bool have_name = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string body = line.substr(first);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
    auto value_of = [&](std::string_view key) -> std::optional<std::string> {
      if (body.rfind(key, 0) == 0 && body.size() > key.size() &&
          std::isspace(static_cast<unsigned char>(body[key.size()]))) {
        auto v = body.substr(key.size());
        v.erase(0, v.find_first_not_of(" \t"));
        return v;
      }
      return std::nullopt;
    };
    try {
      if (!have_degree) {
        auto v = value_of("degree");
        if (!v) throw ParseError("line " + std::to_string(lineno) + ": expected 'degree <n>'", lineno);
        g.degree = std::stoi(*v);
        if (g.degree < 1 || g.degree > kMaxDimension)
          throw ParseError("line " + std::to_string(lineno) + ": degree out of range", lineno);
        have_degree = true;
      } else if (!have_name) {
        auto v = value_of("name");
        if (!v) throw ParseError("line " + std::to_string(lineno) + ": expected 'name <string>'", lineno);
        g.name = *v;
        have_name = true;
      } else if (auto v = value_of("order"); v && g.generators.empty() && !g.order) {
        g.order = std::stoull(*v);
      } else {
        g.generators.push_back(parse_cycles(body, g.degree));
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad number", lineno);
    }
  }
  if (!have_degree || !have_name) throw ParseError("group file missing degree or name", lineno);
  return g;
}

inline GroupSpec load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  return parse_group_file(in);
}

/// Partition of the edges of K(C_n) into orbits under a group.
struct OrbitMap {
  std::vector<std::uint32_t> orbit_of;        // per edge
  std::vector<edge_t> representative;         // per orbit, minimum edge
  std::size_t count() const { return representative.size(); }
};

/// Orbits by union-find closure under the generators only; elements of the
/// group are never enumerated. Orbit ids follow the minimum edge of each orbit.
inline OrbitMap edge_orbits(int n, const GroupSpec& g) {
  check_dimension(n);
  if (g.degree != n)
    throw std::invalid_argument("edge_orbits: group " + g.name + " has degree " +
                                std::to_string(g.degree) + ", need " + std::to_string(n));
  const std::uint64_t ne = edge_count(n);
  OrbitMap map;
  std::vector<std::uint32_t> parent;
  try {
    parent.resize(ne);
    map.orbit_of.resize(ne);
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("edge_orbits: out of memory for " + std::to_string(ne) +
                             " edges at n=" + std::to_string(n));
  }
  for (std::uint64_t e = 0; e < ne; ++e) parent[e] = static_cast<std::uint32_t>(e);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : g.generators) {
    if (gen.is_identity()) continue;
    const auto table = vertex_table(gen);
    edge_t e = 0;
    for (vertex_t v = 1; v < vertex_count(n); ++v)
      for (vertex_t u = 0; u < v; ++u, ++e) {
        const std::uint32_t a = find(e);
        const std::uint32_t b = find(edge_index_unchecked(table[u], table[v]));
        // Keep the smaller id as root so the root is the orbit minimum.
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
      }
  }
  for (std::uint64_t e = 0; e < ne; ++e) {
    const std::uint32_t r = find(static_cast<std::uint32_t>(e));
    if (r == e) {
      map.orbit_of[e] = static_cast<std::uint32_t>(map.representative.size());
      map.representative.push_back(static_cast<edge_t>(e));
    } else {
      map.orbit_of[e] = map.orbit_of[r];
    }
  }
  return map;
}

}  // namespace graham

#endif  // GRAHAM_GROUPS_HPP_
