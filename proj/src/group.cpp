#include "homlab/group.hpp"

#include "homlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homlab {

FiniteGroup::FiniteGroup() : n_(1), e_(0), table_{0}, inv_{0}, ord_{1} {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Index>>& table) {
  const std::size_t n = table.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      std::ostringstream msg;
      msg << "Cayley table is not square: row " << i << " has " << table[i].size()
          << " entries, expected " << n;
      throw FormatError(msg.str());
    }
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return from_flat_table(n, std::move(flat));
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Index> t) {
  if (n == 0) throw FormatError("a group needs at least one element");
  if (t.size() != n * n) throw FormatError("Cayley table has the wrong number of entries");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] >= n) {
      std::ostringstream msg;
      msg << "closure fails: table[" << k / n << "][" << k % n << "] = " << t[k]
          << " is not an element index";
      throw FormatError(msg.str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Index ij = t[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          std::ostringstream msg;
          msg << "associativity fails at (i,j,k) = (" << i << "," << j << "," << k << ")";
          throw FormatError(msg.str());
        }
      }
    }
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = t[c * n + i] == i && t[i * n + c] == i;
    if (ok) e = c;
  }
  if (e == n) throw FormatError("identity fails: no element is a two-sided identity");

  FiniteGroup g;
  g.n_ = n;
  g.e_ = static_cast<Index>(e);
  g.table_ = std::move(t);
  g.inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table_[i * n + j] == e && g.table_[j * n + i] == e) {
        found = j;
        break;
      }
    }
    if (found == n) {
      std::ostringstream msg;
      msg << "inverse fails: element " << i << " has no two-sided inverse";
      throw FormatError(msg.str());
    }
    g.inv_[i] = static_cast<Index>(found);
  }
  g.ord_.assign(n, 0);
  g.exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1;
    for (Index x = static_cast<Index>(i); x != e; x = g.table_[x * n + i]) ++k;
    g.ord_[i] = k;
    g.exponent_ = std::lcm(g.exponent_, k);
  }
  g.abelian_ = true;
  for (std::size_t i = 0; i < n && g.abelian_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.table_[i * n + j] != g.table_[j * n + i]) {
        g.abelian_ = false;
        break;
      }
    }
  }
  return g;
}

Index FiniteGroup::power(Index a, std::size_t k) const {
  Index r = e_;
  for (k %= ord_[a]; k > 0; --k) r = mul(r, a);
  return r;
}

FiniteGroup group_from_table(const std::vector<std::vector<Index>>& table) {
  return FiniteGroup::from_table(table);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic_group needs n >= 1");
  std::vector<Index> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Index>((i + j) % n);
  return FiniteGroup::from_flat_table(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order();
  const std::size_t b = h.order();
  const std::size_t n = a * b;
  std::vector<Index> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Index gx = static_cast<Index>(x / b), hx = static_cast<Index>(x % b);
      const Index gy = static_cast<Index>(y / b), hy = static_cast<Index>(y % b);
      t[x * n + y] = static_cast<Index>(g.mul(gx, gy) * b + h.mul(hx, hy));
    }
  }
  return FiniteGroup::from_flat_table(n, std::move(t));
}

FiniteGroup direct_power(const FiniteGroup& g, unsigned n) {
  if (n == 0) throw InvalidArgument("direct_power needs n >= 1");
  FiniteGroup out = g;
  for (unsigned i = 1; i < n; ++i) out = direct_product(out, g);
  return out;
}

FiniteGroup abelian_group(std::span<const std::size_t> cyclic_orders) {
  FiniteGroup out;
  for (std::size_t m : cyclic_orders) out = direct_product(out, cyclic_group(m));
  return out;
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral_group needs n >= 1");
  // r^i -> i, r^i s -> n + i
  const std::size_t size = 2 * n;
  std::vector<Index> t(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const std::size_t i = x % n, j = y % n;
      const bool sx = x >= n, sy = y >= n;
      std::size_t rot = sx ? (i + n - j) % n : (i + j) % n;
      t[x * size + y] = static_cast<Index>(rot + ((sx != sy) ? n : 0));
    }
  }
  return FiniteGroup::from_flat_table(size, std::move(t));
}

FiniteGroup dicyclic_group(std::size_t n) {
  if (n < 2) throw InvalidArgument("dicyclic_group needs n >= 2");
  // a^i -> i, a^i x -> 2n + i
  const std::size_t m = 2 * n;
  const std::size_t size = 2 * m;
  std::vector<Index> t(size * size);
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t i = p % m, k = q % m;
      const bool xp = p >= m, xq = q >= m;
      std::size_t r;
      if (!xp) {
        r = (i + k) % m + (xq ? m : 0);
      } else {
        // a^i x a^k x^l = a^(i-k) x^(1+l), with x^2 = a^n
        const std::size_t base = (i + m - k) % m;
        r = xq ? (base + n) % m : base + m;
      }
      t[p * size + q] = static_cast<Index>(r);
    }
  }
  return FiniteGroup::from_flat_table(size, std::move(t));
}

namespace {

FiniteGroup permutation_group(std::size_t n, bool even_only) {
  if (n > 5) throw CapabilityError("permutation groups are limited to n <= 5");
  std::vector<std::vector<Index>> perms;
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t size = perms.size();
  std::vector<Index> t(size * size);
  std::vector<Index> comp(n);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), comp);
      t[a * size + b] = static_cast<Index>(it - perms.begin());
    }
  }
  return FiniteGroup::from_flat_table(size, std::move(t));
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) { return permutation_group(n, false); }
FiniteGroup alternating_group(std::size_t n) { return permutation_group(n, true); }

}  // namespace homlab

namespace homlab {

std::string describe(const FiniteGroup& g) {
  return "group(" + std::to_string(g.order()) + (g.is_abelian() ? "; abelian)" : "; non-abelian)");
}

FiniteGroup subgroup_of(const FiniteGroup& g, std::span<const Index> elements) {
  std::vector<Index> rel(g.order(), UINT32_MAX);
  for (std::size_t i = 0; i < elements.size(); ++i) rel[elements[i]] = static_cast<Index>(i);
  const std::size_t k = elements.size();
  std::vector<Index> t(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Index p = rel[g.mul(elements[i], elements[j])];
      if (p == UINT32_MAX) throw InvalidArgument("subgroup_of: subset is not closed");
      t[i * k + j] = p;
    }
  }
  return FiniteGroup::from_flat_table(k, std::move(t));
}

}  // namespace homlab
