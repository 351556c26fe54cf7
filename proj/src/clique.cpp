#include "ekr/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

namespace ekr {

bool DynBitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t DynBitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t DynBitset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return n_;
}

DynBitset& DynBitset::operator&=(const DynBitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

DynBitset& DynBitset::operator-=(const DynBitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

namespace {

// BBMC-style maximum clique on a relabeled copy of the graph.
class MaxCliqueSolver {
 public:
  MaxCliqueSolver(const Graph& g, std::size_t lower_bound) : n_(g.size()), best_(lower_bound) {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return g.neighbors(a).count() > g.neighbors(b).count();
    });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = i;
    adj_.assign(n_, DynBitset(n_));
    for (std::size_t u = 0; u < n_; ++u)
      g.neighbors(u).for_each([&](std::size_t v) { adj_[pos[u]].set(pos[v]); });
  }

  std::size_t solve(unsigned threads) {
    if (n_ == 0) return 0;
    DynBitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    std::vector<std::size_t> order, color;
    color_sort(all, order, color);
    raise(1);

    // Top-level branches are independent: branch i gets the vertices that
    // precede it in the colour order, intersected with its neighbourhood.
    std::atomic<std::ptrdiff_t> next(static_cast<std::ptrdiff_t>(order.size()) - 1);
    auto worker = [&] {
      for (;;) {
        const std::ptrdiff_t i = next.fetch_sub(1);
        if (i < 0) return;
        const auto ui = static_cast<std::size_t>(i);
        if (color[ui] <= best_.load()) return;
        DynBitset p(n_);
        for (std::size_t j = 0; j < ui; ++j) p.set(order[j]);
        p &= adj_[order[ui]];
        expand(1, p);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    return best_.load();
  }

 private:
  void raise(std::size_t size) {
    std::size_t cur = best_.load();
    while (size > cur && !best_.compare_exchange_weak(cur, size)) {
    }
  }

  void color_sort(const DynBitset& p, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& color) const {
    order.clear();
    color.clear();
    DynBitset rest = p;
    std::size_t k = 0;
    while (rest.any()) {
      ++k;
      DynBitset q = rest;
      for (std::size_t v = q.first(); v < n_; v = q.first()) {
        q.reset(v);
        rest.reset(v);
        q -= adj_[v];
        order.push_back(v);
        color.push_back(k);
      }
    }
  }

  void expand(std::size_t depth, DynBitset p) {
    if (!p.any()) {
      raise(depth);
      return;
    }
    std::vector<std::size_t> order, color;
    color_sort(p, order, color);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + color[i] <= best_.load()) return;
      const std::size_t v = order[i];
      DynBitset np = p;
      np &= adj_[v];
      expand(depth + 1, std::move(np));
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<DynBitset> adj_;
  std::atomic<std::size_t> best_;
};

bool meets(const DynBitset& a, const DynBitset& b) {
  const auto& x = a.words();
  const auto& y = b.words();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] & y[i]) return true;
  return false;
}

// Depth-first search over cliques as ascending index lists, so cliques of a
// fixed size are met in lexicographic order.
class LexSearch {
 public:
  LexSearch(const Graph& g, std::size_t target,
            std::function<bool(const std::vector<std::size_t>&)> leaf)
      : g_(g), target_(target), leaf_(std::move(leaf)) {}

  // Returns false once the leaf callback asks to stop.
  bool run() {
    DynBitset all(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i) all.set(i);
    std::vector<std::size_t> cur;
    return dfs(cur, all);
  }

 private:
  bool dfs(std::vector<std::size_t>& cur, const DynBitset& cand) {
    if (cur.size() == target_) return leaf_(cur);
    const std::size_t need = target_ - cur.size();
    if (cand.count() < need) return true;

    // First-fit colouring in descending index order: the vertices >= v are
    // coloured before any smaller one, so the running maximum colour bounds
    // every clique inside the suffix starting at v.
    std::vector<std::size_t> verts;
    cand.for_each([&](std::size_t v) { verts.push_back(v); });
    std::vector<std::size_t> suffix_colors(verts.size());
    std::vector<DynBitset> classes;
    std::size_t running = 0;
    for (std::size_t k = verts.size(); k-- > 0;) {
      const std::size_t v = verts[k];
      std::size_t c = 0;
      while (c < classes.size() && meets(g_.neighbors(v), classes[c])) ++c;
      if (c == classes.size()) classes.emplace_back(g_.size());
      classes[c].set(v);
      running = std::max(running, c + 1);
      suffix_colors[k] = running;
    }

    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (suffix_colors[k] < need) break;
      const std::size_t v = verts[k];
      DynBitset next = g_.neighbors(v);
      next &= cand;
      for (std::size_t j = 0; j <= k; ++j) next.reset(verts[j]);
      cur.push_back(v);
      const bool go_on = dfs(cur, next);
      cur.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t target_;
  std::function<bool(const std::vector<std::size_t>&)> leaf_;
};

}  // namespace

std::size_t clique_number(const Graph& g, std::size_t lower_bound, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  MaxCliqueSolver s(g, std::min(lower_bound, g.size()));
  return s.solve(threads);
}

std::vector<std::size_t> lex_least_clique(const Graph& g, std::size_t size) {
  std::vector<std::size_t> found;
  if (size > g.size()) return found;
  LexSearch s(g, size, [&](const std::vector<std::size_t>& c) {
    found = c;
    return false;
  });
  s.run();
  return found;
}

CliqueEnumeration enumerate_cliques(const Graph& g, std::size_t size, std::size_t cap,
                                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  CliqueEnumeration out;
  if (size > g.size()) return out;
  LexSearch s(g, size, [&](const std::vector<std::size_t>& c) {
    if (out.count == cap) {
      out.complete = false;
      return false;
    }
    ++out.count;
    if (!visit(c)) {
      out.complete = false;
      return false;
    }
    return true;
  });
  s.run();
  return out;
}

}  // namespace ekr
