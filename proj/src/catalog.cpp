#include "nilcoh/catalog.hpp"

#include <charconv>
#include <cmath>

namespace nilcoh {

GroupPtr cyclic_group(std::size_t n) {
  return abelian_group({n});
}

GroupPtr abelian_group(std::vector<std::size_t> const& factors) {
  std::size_t order = 1;
  for (auto f : factors) {
    if (f == 0) {
      throw Error(Errc::InvalidArgument, "cyclic factor of order 0");
    }
    order *= f;
  }
  if (order > Limits{}.order_cap) {
    throw Error(Errc::OrderCapExceeded, "abelian group of order " + std::to_string(order));
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d;
    for (auto f : factors) {
      d.push_back(x % f);
      x /= f;
    }
    return d;
  };
  Table t(order, std::vector<elem_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    auto da = digits(a);
    for (std::size_t b = 0; b < order; ++b) {
      auto        db    = digits(b);
      std::size_t index = 0, radix = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        index += ((da[i] + db[i]) % factors[i]) * radix;
        radix *= factors[i];
      }
      t[a][b] = static_cast<elem_t>(index);
    }
  }
  return Group::from_table(t);
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) {
    throw Error(Errc::InvalidArgument, "dihedral group needs n >= 1");
  }
  Table t(2 * n, std::vector<elem_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    auto const i = x % n, e = x / n;
    for (std::size_t y = 0; y < 2 * n; ++y) {
      auto const k = y % n, f = y / n;
      auto const shift = e ? (n - k) % n : k;
      t[x][y] = static_cast<elem_t>((i + shift) % n + n * ((e + f) % 2));
    }
  }
  return Group::from_table(t);
}

GroupPtr quaternion_group() {
  // unit index u in {1, i, j, k} and sign s: element 2u + s
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table                t(8, std::vector<elem_t>(8));
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int const u = a / 2, v = b / 2;
      int const s = (a % 2 + b % 2 + sign_mul[u][v]) % 2;
      t[a][b]     = static_cast<elem_t>(2 * unit_mul[u][v] + s);
    }
  }
  return Group::from_table(t, names);
}

GroupPtr heisenberg_group(std::uint64_t p) {
  auto const n = p * p * p;
  if (n > Limits{}.order_cap) {
    throw Error(Errc::OrderCapExceeded, "Heisenberg group of order " + std::to_string(n));
  }
  Table t(n, std::vector<elem_t>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    auto const x = a % p, y = a / p % p, z = a / (p * p);
    for (std::uint64_t b = 0; b < n; ++b) {
      auto const x2 = b % p, y2 = b / p % p, z2 = b / (p * p);
      auto const rx = (x + x2) % p, ry = (y + y2) % p, rz = (z + z2 + x * y2) % p;
      t[a][b] = static_cast<elem_t>(rx + p * ry + p * p * rz);
    }
  }
  return Group::from_table(t);
}

GroupPtr direct_product(GroupPtr const& a, GroupPtr const& b) {
  auto const na = a->order(), nb = b->order();
  Table      t(na * nb, std::vector<elem_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x) {
    for (std::size_t y = 0; y < na * nb; ++y) {
      t[x][y] = static_cast<elem_t>(a->mul(static_cast<elem_t>(x % na), static_cast<elem_t>(y % na))
                                    + na * b->mul(static_cast<elem_t>(x / na),
                                                  static_cast<elem_t>(y / na)));
    }
  }
  return Group::from_table(t);
}

GroupPtr symmetric_group(std::size_t n) {
  if (n < 2) {
    return cyclic_group(1);
  }
  Permutation transposition(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    transposition[i] = static_cast<std::uint32_t>(i);
    cycle[i]         = static_cast<std::uint32_t>((i + 1) % n);
  }
  std::swap(transposition[0], transposition[1]);
  return Group::from_permutations({transposition, cycle}, n);
}

std::vector<elem_t> named_automorphism(Group const& n, std::string const& name) {
  std::vector<elem_t> out(n.order());
  auto                arg = [&](std::string_view prefix) -> std::int64_t {
    auto          rest = std::string_view(name).substr(prefix.size());
    std::int64_t  v    = 0;
    auto [ptr, ec]     = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(Errc::InvalidArgument, "bad automorphism argument in '" + name + "'");
    }
    return v;
  };
  if (name == "identity") {
    for (elem_t x = 0; x < n.order(); ++x) {
      out[x] = x;
    }
  } else if (name == "inversion") {
    for (elem_t x = 0; x < n.order(); ++x) {
      out[x] = n.inv(x);
    }
  } else if (name == "swap") {
    auto const m = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n.order()))));
    if (m * m != n.order()) {
      throw Error(Errc::NotAutomorphism, "swap needs a group of square order");
    }
    for (elem_t x = 0; x < n.order(); ++x) {
      out[x] = static_cast<elem_t>(x / m + m * (x % m));
    }
  } else if (name.starts_with("power:")) {
    auto const k = arg("power:");
    for (elem_t x = 0; x < n.order(); ++x) {
      out[x] = n.pow(x, k);
    }
  } else if (name.starts_with("inner:")) {
    auto const by = arg("inner:");
    if (by < 0 || static_cast<std::size_t>(by) >= n.order()) {
      throw Error(Errc::InvalidArgument, "inner automorphism by an element out of range");
    }
    for (elem_t x = 0; x < n.order(); ++x) {
      out[x] = n.conj(x, n.inv(static_cast<elem_t>(by)));
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown automorphism '" + name + "'");
  }
  require_automorphism(n, out);
  return out;
}

}  // namespace nilcoh
