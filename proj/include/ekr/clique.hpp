#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ekr {

/// Runtime-sized bit set used for adjacency rows of facet graphs.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t bits() const { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or bits() if none.
  std::size_t first() const;

  DynBitset& operator&=(const DynBitset& o);
  DynBitset& operator-=(const DynBitset& o);

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph with bit-set adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n, DynBitset(n)) {}
  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const DynBitset& neighbors(std::size_t v) const { return adj_[v]; }

 private:
  std::vector<DynBitset> adj_;
};

/// Clique number by branch and bound with greedy colouring bounds over
/// vertices sorted by descending degree. `lower_bound` must be the size of
/// some known clique. `threads` = 0 uses all hardware threads. The result
/// does not depend on the thread count.
std::size_t clique_number(const Graph& g, std::size_t lower_bound, unsigned threads = 1);

/// Lexicographically least clique of size `size` (as an ascending index
/// list), or an empty list if there is none.
std::vector<std::size_t> lex_least_clique(const Graph& g, std::size_t size);

struct CliqueEnumeration {
  std::size_t count = 0;
  /// False if the visitor stopped early or the cap was reached.
  bool complete = true;
};

/// Visits every clique of size `size` in lexicographic order. Stops after
/// `cap` cliques (complete=false if a further one exists) or when the
/// visitor returns false.
CliqueEnumeration enumerate_cliques(const Graph& g, std::size_t size, std::size_t cap,
                                    const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace ekr
