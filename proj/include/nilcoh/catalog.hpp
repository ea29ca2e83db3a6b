#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilcoh/actions.hpp"
#include "nilcoh/group.hpp"

namespace nilcoh {

// a^k has index k.
GroupPtr cyclic_group(std::size_t n);
// Mixed radix over the factors, first factor least significant.
GroupPtr abelian_group(std::vector<std::size_t> const& factors);
// Order 2n; a^i r^e has index i + n e, with r a r^-1 = a^-1.
GroupPtr dihedral_group(std::size_t n);
// 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
GroupPtr quaternion_group();
// Unitriangular 3x3 over F_p: (x, y, z) has index x + p y + p^2 z and
// (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y').
GroupPtr heisenberg_group(std::uint64_t p);
// (a, b) has index a + |A| b.
GroupPtr direct_product(GroupPtr const& a, GroupPtr const& b);
GroupPtr symmetric_group(std::size_t n);

// Named automorphisms of n: "identity", "inversion" (abelian n), "swap"
// (n = A x A as built by direct_product or abelian_group with equal
// factors), "power:k" and "inner:x" (n -> x n x^-1). Throws NotAutomorphism
// or InvalidArgument.
std::vector<elem_t> named_automorphism(Group const& n, std::string const& name);

}  // namespace nilcoh
