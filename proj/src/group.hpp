#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgf {

// Malformed textual input (Cayley table text or a group spec string).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A multiplication table that fails one of the group axioms.  The message
// names the violated axiom and a witness element or triple.
class NotAGroupError : public std::runtime_error {
 public:
  explicit NotAGroupError(const std::string& what)
      : std::runtime_error(what) {}
};

// Finite group as a validated Cayley table over elements {0, ..., order-1}.
// The identity is always element 0; constructors and the parser normalize
// the labelling to guarantee it.
struct FiniteGroup {
  int order = 1;
  std::vector<int> table;    // row-major, table[s * order + t] = s * t
  std::vector<int> inverse;  // inverse[s] * s = 0

  int mul(int s, int t) const { return table[s * order + t]; }
  int inv(int s) const { return inverse[s]; }
};

// Validates the axioms (witness-carrying NotAGroupError on failure), relabels
// so the identity sits at index 0, and fills the inverse table.
FiniteGroup make_group(int order, std::vector<int> table);

FiniteGroup build_cyclic(int n);
FiniteGroup build_dihedral(int n);     // order 2n, n >= 1
FiniteGroup build_klein4();
FiniteGroup build_quaternion8();
FiniteGroup build_symmetric(int k);    // 2 <= k <= 5
FiniteGroup build_product(const FiniteGroup& g, const FiniteGroup& h);

// Text format: first token is the order, then order^2 element indices in
// row-major order; '#' starts a comment that runs to end of line.
FiniteGroup parse_cayley(std::string_view text);
std::string serialize_cayley(const FiniteGroup& g);

// Spec strings: cyclic:n, dihedral:n, s:n, q8, klein4,
// product:<spec>,<spec> (right operand extends to the end), file:<path>.
FiniteGroup group_from_spec(const std::string& spec);

bool is_abelian(const FiniteGroup& g);

// Conjugacy class count, i.e. the number of irreducible representations.
int class_count(const FiniteGroup& g);

}  // namespace fgf
