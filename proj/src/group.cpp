#include "group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace fgf {

namespace {

std::string fmt_triple(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

}  // namespace

FiniteGroup make_group(int order, std::vector<int> table) {
  if (order < 1) throw NotAGroupError("order must be at least 1");
  if (static_cast<int>(table.size()) != order * order)
    throw NotAGroupError("table has " + std::to_string(table.size()) +
                         " entries, expected " + std::to_string(order * order));

  auto at = [&](int a, int b) -> int& { return table[a * order + b]; };

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (at(a, b) < 0 || at(a, b) >= order)
        throw NotAGroupError("closure fails: entry at (" + std::to_string(a) +
                             ", " + std::to_string(b) + ") is " +
                             std::to_string(at(a, b)) + ", outside [0, " +
                             std::to_string(order) + ")");

  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = (at(e, x) == x) && (at(x, e) == x);
    if (ok) identity = e;
  }
  if (identity < 0) throw NotAGroupError("no identity element");

  if (identity != 0) {
    // Swap labels 0 and identity; the swap is its own inverse.
    auto p = [&](int x) {
      if (x == 0) return identity;
      if (x == identity) return 0;
      return x;
    };
    std::vector<int> relabeled(order * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        relabeled[a * order + b] = p(table[p(a) * order + p(b)]);
    table = std::move(relabeled);
  }

  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw NotAGroupError("associativity fails at " + fmt_triple(a, b, c) +
                               ": (a*b)*c = " +
                               std::to_string(g.mul(g.mul(a, b), c)) +
                               ", a*(b*c) = " +
                               std::to_string(g.mul(a, g.mul(b, c))));

  g.inverse.assign(order, -1);
  for (int s = 0; s < order; ++s) {
    for (int t = 0; t < order; ++t) {
      if (g.mul(s, t) == 0 && g.mul(t, s) == 0) {
        g.inverse[s] = t;
        break;
      }
    }
    if (g.inverse[s] < 0)
      throw NotAGroupError("no two-sided inverse for element " +
                           std::to_string(s));
  }

  return g;
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return make_group(n, std::move(table));
}

FiniteGroup build_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  const int order = 2 * n;
  // Element j * n + i is r^i f^j with relation f r = r^{-1} f.
  std::vector<int> table(order * order);
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          const int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
          const int j = j1 ^ j2;
          table[(j1 * n + i1) * order + (j2 * n + i2)] = j * n + i;
        }
  return make_group(order, std::move(table));
}

FiniteGroup build_klein4() {
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = a ^ b;
  return make_group(4, std::move(table));
}

FiniteGroup build_quaternion8() {
  // Element 2*u + s is the unit {1, i, j, k}[u] with sign (-1)^s.
  static const int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      const int u = unit_mul[ua][ub];
      const int s = sa ^ sb ^ sign_mul[ua][ub];
      table[a * 8 + b] = 2 * u + s;
    }
  return make_group(8, std::move(table));
}

FiniteGroup build_symmetric(int k) {
  if (k < 2 || k > 5)
    throw std::invalid_argument("symmetric group parameter must be in [2, 5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int order = static_cast<int>(perms.size());
  std::vector<int> table(order * order);
  std::vector<int> composed(k);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < k; ++x) composed[x] = perms[a][perms[b][x]];
      table[a * order + b] = index[composed];
    }
  return make_group(order, std::move(table));
}

FiniteGroup build_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int order = g.order * h.order;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int s1 = 0; s1 < g.order; ++s1)
    for (int t1 = 0; t1 < h.order; ++t1)
      for (int s2 = 0; s2 < g.order; ++s2)
        for (int t2 = 0; t2 < h.order; ++t2) {
          const int a = s1 * h.order + t1;
          const int b = s2 * h.order + t2;
          table[static_cast<std::size_t>(a) * order + b] =
              g.mul(s1, s2) * h.order + h.mul(t1, t2);
        }
  return make_group(order, std::move(table));
}

FiniteGroup parse_cayley(std::string_view text) {
  std::vector<int> tokens;
  std::size_t i = 0;
  int line = 1;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != '#')
      ++j;
    int value = 0;
    const auto res = std::from_chars(text.data() + i, text.data() + j, value);
    if (res.ec != std::errc() || res.ptr != text.data() + j)
      throw ParseError("line " + std::to_string(line) + ": token '" +
                       std::string(text.substr(i, j - i)) +
                       "' is not a nonnegative integer");
    tokens.push_back(value);
    i = j;
  }

  if (tokens.empty()) throw ParseError("empty Cayley table text");
  const int order = tokens[0];
  if (order < 1) throw ParseError("declared order must be >= 1");
  const std::size_t expected = static_cast<std::size_t>(order) * order;
  if (tokens.size() - 1 != expected)
    throw ParseError("expected " + std::to_string(expected) +
                     " table entries for order " + std::to_string(order) +
                     ", found " + std::to_string(tokens.size() - 1));
  return make_group(order,
                    std::vector<int>(tokens.begin() + 1, tokens.end()));
}

std::string serialize_cayley(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order << "\n";
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

FiniteGroup parse_spec_at(const std::string& spec, std::size_t& pos);

int parse_spec_int(const std::string& spec, std::size_t& pos) {
  std::size_t end = pos;
  while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end])))
    ++end;
  if (end == pos)
    throw ParseError("expected an integer at position " + std::to_string(pos) +
                     " in group spec '" + spec + "'");
  int value = 0;
  std::from_chars(spec.data() + pos, spec.data() + end, value);
  pos = end;
  return value;
}

FiniteGroup parse_spec_at(const std::string& spec, std::size_t& pos) {
  auto starts = [&](std::string_view prefix) {
    if (spec.compare(pos, prefix.size(), prefix) != 0) return false;
    pos += prefix.size();
    return true;
  };
  if (starts("product:")) {
    FiniteGroup left = parse_spec_at(spec, pos);
    if (pos >= spec.size() || spec[pos] != ',')
      throw ParseError("product spec needs ',' between operands in '" + spec +
                       "'");
    ++pos;
    FiniteGroup right = parse_spec_at(spec, pos);
    return build_product(left, right);
  }
  if (starts("cyclic:")) return build_cyclic(parse_spec_int(spec, pos));
  if (starts("dihedral:")) return build_dihedral(parse_spec_int(spec, pos));
  if (starts("s:")) {
    const int k = parse_spec_int(spec, pos);
    if (k < 2 || k > 5)
      throw ParseError("s:n requires 2 <= n <= 5, got " + std::to_string(k));
    return build_symmetric(k);
  }
  if (starts("q8")) return build_quaternion8();
  if (starts("klein4")) return build_klein4();
  if (starts("file:")) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string path = spec.substr(pos, end - pos);
    pos = end;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open Cayley table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cayley(buf.str());
  }
  throw ParseError("unrecognized group spec at position " +
                   std::to_string(pos) + " in '" + spec + "'");
}

}  // namespace

FiniteGroup group_from_spec(const std::string& spec) {
  std::string trimmed = spec;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  const auto last = trimmed.find_last_not_of(" \t\r\n");
  trimmed.erase(last == std::string::npos ? 0 : last + 1);
  if (trimmed.empty()) throw ParseError("empty group spec");
  std::size_t pos = 0;
  try {
    FiniteGroup g = parse_spec_at(trimmed, pos);
    if (pos != trimmed.size())
      throw ParseError("trailing characters after position " +
                       std::to_string(pos) + " in group spec '" + trimmed +
                       "'");
    return g;
  } catch (const std::invalid_argument& e) {
    // Out-of-range builder parameters count as spec syntax problems.
    throw ParseError("in group spec '" + trimmed + "': " + e.what());
  }
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int class_count(const FiniteGroup& g) {
  std::vector<int> cls(g.order, -1);
  int count = 0;
  for (int s = 0; s < g.order; ++s) {
    if (cls[s] >= 0) continue;
    for (int t = 0; t < g.order; ++t)
      cls[g.mul(g.mul(t, s), g.inv(t))] = count;
    ++count;
  }
  return count;
}

}  // namespace fgf
