#include "homlab/canonical.hpp"

#include "homlab/errors.hpp"
#include "refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace homlab {

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

void put16(std::string& s, std::size_t v) {
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

class GraphCanonizer {
 public:
  explicit GraphCanonizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    color_ = detail::refine_colors(g);
    // Positions are filled cell by cell, cells ordered by colour id.
    std::vector<std::uint32_t> sorted(color_);
    std::sort(sorted.begin(), sorted.end());
    cell_of_pos_ = sorted;
    twin_open_.resize(n_);
    for (Index v = 0; v < n_; ++v) {
      std::vector<bool> open(n_, false);
      for (Index w : g.neighbors(v)) open[w] = true;
      twin_open_[v] = open;
    }
    used_.assign(n_, 0);
    perm_.assign(n_, 0);
    cur_.resize(n_ * (n_ + 1) / 2);
  }

  std::string run() {
    search(0, false);
    std::string key = "g";
    put16(key, n_);
    std::uint8_t acc = 0;
    int nbits = 0;
    for (char bit : best_) {
      acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
      if (++nbits == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
    if (nbits) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return key;
  }

 private:
  static std::size_t row_start(std::size_t t) { return t * (t + 1) / 2; }

  // Swapping two unplaced twins is an automorphism fixing every placed
  // vertex, so only the lowest unplaced twin needs to be tried.
  bool twin_dominated(Index v) const {
    for (Index u = 0; u < v; ++u) {
      if (used_[u] || color_[u] != color_[v] || g_.has_loop(u) != g_.has_loop(v)) continue;
      auto ou = twin_open_[u], ov = twin_open_[v];
      ou[v] = ov[u] = false;
      if (ou == ov) return true;
    }
    return false;
  }

  // less: the current prefix is already strictly below best_
  void search(std::size_t t, bool less) {
    if (t == n_) {
      if (!have_best_ || less) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    for (Index v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_pos_[t] || twin_dominated(v)) continue;
      const std::size_t base = row_start(t);
      cur_[base] = g_.has_loop(v) ? 1 : 0;
      for (std::size_t s = 0; s < t; ++s) cur_[base + 1 + s] = g_.adjacent(v, perm_[s]) ? 1 : 0;
      bool next_less = less;
      if (have_best_ && !less) {
        const auto c = std::lexicographical_compare_three_way(
            cur_.begin() + static_cast<std::ptrdiff_t>(base),
            cur_.begin() + static_cast<std::ptrdiff_t>(base + t + 1),
            best_.begin() + static_cast<std::ptrdiff_t>(base),
            best_.begin() + static_cast<std::ptrdiff_t>(base + t + 1));
        if (c > 0) continue;
        next_less = c < 0;
      }
      used_[v] = 1;
      perm_[t] = v;
      search(t + 1, next_less);
      used_[v] = 0;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> cell_of_pos_;
  std::vector<std::vector<bool>> twin_open_;
  std::vector<char> used_;
  std::vector<Index> perm_;
  std::vector<char> cur_, best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalKey canonical_key(const Graph& g, const CanonicalLimits& limits) {
  if (g.vertex_count() > limits.max_graph_vertices) {
    throw CapabilityError("canonical_key: graph has " + std::to_string(g.vertex_count()) +
                          " vertices, bound is " + std::to_string(limits.max_graph_vertices));
  }
  return CanonicalKey{GraphCanonizer(g).run()};
}

namespace {

class GroupCanonizer {
 public:
  explicit GroupCanonizer(const FiniteGroup& g) : g_(g), n_(g.order()) {
    // Element invariant: (order, conjugacy class size).
    inv_.resize(n_);
    for (Index x = 0; x < n_; ++x) {
      std::vector<char> seen(n_, 0);
      std::size_t cls = 0;
      for (Index y = 0; y < n_; ++y) {
        const Index c = g.mul(g.mul(y, x), g.inverse(y));
        if (!seen[c]) {
          seen[c] = 1;
          ++cls;
        }
      }
      inv_[x] = {g.element_order(x), cls};
    }
    sorted_.resize(n_);
    std::iota(sorted_.begin(), sorted_.end(), Index{0});
    std::stable_sort(sorted_.begin(), sorted_.end(),
                     [&](Index a, Index b) { return inv_[a] < inv_[b]; });
  }

  std::string run() {
    for (std::size_t d = 1;; ++d) {
      std::vector<Index> tuple;
      if (first_generating(d, tuple)) {
        for (Index x : tuple) signature_.push_back(inv_[x]);
        break;
      }
    }
    std::vector<Index> tuple;
    all_tuples(tuple, subgroup({}));
    std::string key = "n";
    put16(key, n_);
    key.push_back(static_cast<char>(signature_.size()));
    for (auto [o, c] : signature_) {
      put16(key, o);
      put16(key, c);
    }
    for (Index x : best_) key.push_back(static_cast<char>(x));
    return key;
  }

 private:
  std::vector<char> subgroup(const std::vector<Index>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<Index> elems{g_.identity()};
    in[g_.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Index s : gens) {
        const Index y = g_.mul(elems[i], s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    }
    return in;
  }

  static std::size_t size_of(const std::vector<char>& in) {
    return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  }

  // Depth-first in increasing invariant order: the first generating d-tuple
  // found has the lexicographically least invariant signature.
  bool first_generating(std::size_t d, std::vector<Index>& tuple) {
    const auto cur = subgroup(tuple);
    if (tuple.size() == d) return size_of(cur) == n_;
    for (Index x : sorted_) {
      if (cur[x]) continue;
      tuple.push_back(x);
      if (first_generating(d, tuple)) return true;
      tuple.pop_back();
    }
    return false;
  }

  void all_tuples(std::vector<Index>& tuple, const std::vector<char>& cur) {
    if (tuple.size() == signature_.size()) {
      if (size_of(cur) == n_) consider(tuple);
      return;
    }
    const auto want = signature_[tuple.size()];
    for (Index x : sorted_) {
      if (cur[x] || inv_[x] != want) continue;
      tuple.push_back(x);
      all_tuples(tuple, subgroup(tuple));
      tuple.pop_back();
    }
  }

  void consider(const std::vector<Index>& gens) {
    std::vector<Index> order{g_.identity()};
    std::vector<Index> label(n_, UINT32_MAX);
    label[g_.identity()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Index s : gens) {
        const Index y = g_.mul(order[i], s);
        if (label[y] == UINT32_MAX) {
          label[y] = static_cast<Index>(order.size());
          order.push_back(y);
        }
      }
    }
    std::vector<Index> table(n_ * n_);
    bool less = best_.empty();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Index v = label[g_.mul(order[i], order[j])];
        const std::size_t k = i * n_ + j;
        if (!less) {
          if (v > best_[k]) return;
          if (v < best_[k]) less = true;
        }
        table[k] = v;
      }
    }
    if (less) best_ = std::move(table);
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> inv_;
  std::vector<Index> sorted_;
  std::vector<std::pair<std::size_t, std::size_t>> signature_;
  std::vector<Index> best_;
};

}  // namespace

CanonicalKey canonical_key(const FiniteGroup& g, const CanonicalLimits& limits) {
  if (g.order() > limits.max_group_order) {
    throw CapabilityError("canonical_key: group has order " + std::to_string(g.order()) +
                          ", bound is " + std::to_string(limits.max_group_order));
  }
  if (g.order() > 255) throw CapabilityError("canonical_key: group keys support order <= 255");
  if (g.is_abelian()) {
    // A finite abelian group is determined by how many elements have each order.
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t o : g.element_orders()) ++hist[o];
    std::string key = "a";
    put16(key, g.order());
    for (auto [o, c] : hist) {
      put16(key, o);
      put16(key, c);
    }
    return CanonicalKey{key};
  }
  return CanonicalKey{GroupCanonizer(g).run()};
}

CanonicalKey canonical_key(const Object& o, const CanonicalLimits& limits) {
  return std::visit([&](const auto& x) { return canonical_key(x, limits); }, o);
}

bool within_limits(const Object& o, const CanonicalLimits& limits) {
  if (const auto* g = std::get_if<Graph>(&o)) return g->vertex_count() <= limits.max_graph_vertices;
  return std::get<FiniteGroup>(o).order() <= limits.max_group_order;
}

}  // namespace homlab
