#include "mfass/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace mfass {

namespace {

// Primal-dual blossom search for maximum-weight matching, O(n^3) flavor:
// a BFS forest over outer/inner nodes, blossom contraction with lazy slack
// tracking, and integral dual updates (edge deltas are kept doubled).
// Vertices are 1-based; ids above n are contracted blossoms. Zero-weight
// edges do not exist; callers shift weights positive.
class WeightedBlossom {
 public:
  explicit WeightedBlossom(int n)
      : n_(n),
        size_(2 * n + 1),
        g_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)),
        lab_(size_, 0),
        match_(size_, 0),
        slack_(size_, 0),
        st_(size_, 0),
        pa_(size_, 0),
        s_(size_, -1),
        vis_(size_, 0),
        flower_(static_cast<std::size_t>(size_)),
        flower_from_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(n + 1), 0) {
    for (int u = 0; u < size_; ++u)
      for (int v = 0; v < size_; ++v) edge(u, v) = {u, v, 0};
  }

  void add_edge(int u, int v, std::int64_t w) {  // 1-based, w > 0
    std::int64_t best = std::max(edge(u, v).w, w);
    edge(u, v).w = best;
    edge(v, u).w = best;
  }

  // (total shifted weight, mate array 1-based, 0 = unmatched)
  std::pair<std::int64_t, std::vector<int>> solve() {
    n_x_ = n_;
    std::int64_t w_max = 0;
    for (int u = 0; u <= n_; ++u) st(u) = u;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        from(u, v) = (u == v ? u : 0);
        w_max = std::max(w_max, edge(u, v).w);
      }
    for (int u = 1; u <= n_; ++u) lab(u) = w_max;
    while (phase()) {
    }
    std::int64_t total = 0;
    std::vector<int> mate(static_cast<std::size_t>(n_) + 1, 0);
    for (int u = 1; u <= n_; ++u) {
      mate[static_cast<std::size_t>(u)] = match(u);
      if (match(u) > u) total += edge(u, match(u)).w;
    }
    return {total, mate};
  }

 private:
  struct E {
    int u, v;
    std::int64_t w;
  };

  E& edge(int u, int v) {
    return g_[static_cast<std::size_t>(u) * static_cast<std::size_t>(size_) +
              static_cast<std::size_t>(v)];
  }
  int& from(int b, int x) {
    return flower_from_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_ + 1) +
                        static_cast<std::size_t>(x)];
  }
  std::int64_t& lab(int x) { return lab_[static_cast<std::size_t>(x)]; }
  int& match(int x) { return match_[static_cast<std::size_t>(x)]; }
  int& slack(int x) { return slack_[static_cast<std::size_t>(x)]; }
  int& st(int x) { return st_[static_cast<std::size_t>(x)]; }
  int& pa(int x) { return pa_[static_cast<std::size_t>(x)]; }
  int& s(int x) { return s_[static_cast<std::size_t>(x)]; }
  int& vis(int x) { return vis_[static_cast<std::size_t>(x)]; }
  std::vector<int>& flower(int x) { return flower_[static_cast<std::size_t>(x)]; }

  std::int64_t delta(const E& e) { return lab(e.u) + lab(e.v) - e.w * 2; }

  void update_slack(int u, int x) {
    if (!slack(x) || delta(edge(u, x)) < delta(edge(slack(x), x))) slack(x) = u;
  }

  void set_slack(int x) {
    slack(x) = 0;
    for (int u = 1; u <= n_; ++u)
      if (edge(u, x).w > 0 && st(u) != x && s(st(u)) == 0) update_slack(u, x);
  }

  void queue_push(int x) {
    if (x <= n_) {
      queue_.push_back(x);
    } else {
      for (int y : flower(x)) queue_push(y);
    }
  }

  void set_st(int x, int b) {
    st(x) = b;
    if (x > n_)
      for (int y : flower(x)) set_st(y, b);
  }

  int get_pr(int b, int xr) {
    auto& f = flower(b);
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match(u) = edge(u, v).v;
    if (u > n_) {
      E& e = edge(u, v);
      int xr = from(u, e.u);
      int pr = get_pr(u, xr);
      auto& f = flower(u);
      for (int i = 0; i < pr; ++i)
        set_match(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i ^ 1)]);
      set_match(xr, v);
      std::rotate(f.begin(), f.begin() + pr, f.end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st(match(u));
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st(pa(xnv)));
      u = st(pa(xnv));
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++timestamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis(u) == timestamp_) return u;
      vis(u) = timestamp_;
      u = st(match(u));
      if (u) u = st(pa(u));
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st(b)) ++b;
    if (b > n_x_) ++n_x_;
    lab(b) = 0;
    s(b) = 0;
    match(b) = match(lca);
    auto& f = flower(b);
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st(pa(y))) {
      f.push_back(x);
      y = st(match(x));
      f.push_back(y);
      queue_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st(pa(y))) {
      f.push_back(x);
      y = st(match(x));
      f.push_back(y);
      queue_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      edge(b, x).w = 0;
      edge(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) from(b, x) = 0;
    for (int xs : f) {
      for (int x = 1; x <= n_x_; ++x)
        if (edge(b, x).w == 0 || delta(edge(xs, x)) < delta(edge(b, x))) {
          edge(b, x) = edge(xs, x);
          edge(x, b) = edge(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (from(xs, x)) from(b, x) = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    auto& f = flower(b);
    for (int x : f) set_st(x, x);
    int xr = from(b, edge(b, pa(b)).u);
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = f[static_cast<std::size_t>(i)];
      int xns = f[static_cast<std::size_t>(i + 1)];
      pa(xs) = edge(xns, xs).u;
      s(xs) = 1;
      s(xns) = 0;
      slack(xs) = 0;
      set_slack(xns);
      queue_push(xns);
    }
    s(xr) = 1;
    pa(xr) = pa(b);
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < f.size(); ++i) {
      s(f[i]) = -1;
      set_slack(f[i]);
    }
    st(b) = 0;
  }

  bool on_found_edge(const E& e) {
    int u = st(e.u);
    int v = st(e.v);
    if (s(v) == -1) {
      pa(v) = e.u;
      s(v) = 1;
      int nu = st(match(v));
      slack(v) = 0;
      slack(nu) = 0;
      s(nu) = 0;
      queue_push(nu);
    } else if (s(v) == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool phase() {
    std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
    queue_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st(x) == x && !match(x)) {
        pa(x) = 0;
        s(x) = 0;
        queue_push(x);
      }
    if (queue_.empty()) return false;
    for (;;) {
      while (!queue_.empty()) {
        int u = queue_.front();
        queue_.pop_front();
        if (s(st(u)) == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (edge(u, v).w > 0 && st(u) != st(v)) {
            if (delta(edge(u, v)) == 0) {
              if (on_found_edge(edge(u, v))) return true;
            } else {
              update_slack(u, st(v));
            }
          }
      }
      std::int64_t d = std::numeric_limits<std::int64_t>::max() / 4;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st(b) == b && s(b) == 1) d = std::min(d, lab(b) / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st(x) == x && slack(x)) {
          if (s(x) == -1)
            d = std::min(d, delta(edge(slack(x), x)));
          else if (s(x) == 0)
            d = std::min(d, delta(edge(slack(x), x)) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (s(st(u)) == 0) {
          if (lab(u) <= d) return false;  // duals exhausted, matching is maximum
          lab(u) -= d;
        } else if (s(st(u)) == 1) {
          lab(u) += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st(b) == b) {
          if (s(b) == 0)
            lab(b) += d * 2;
          else if (s(b) == 1)
            lab(b) -= d * 2;
        }
      queue_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st(x) == x && slack(x) && st(slack(x)) != x && delta(edge(slack(x), x)) == 0)
          if (on_found_edge(edge(slack(x), x))) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st(b) == b && s(b) == 1 && lab(b) == 0) expand_blossom(b);
    }
  }

  int n_;
  int size_;
  int n_x_ = 0;
  int timestamp_ = 0;
  std::vector<E> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<int> flower_from_;
  std::deque<int> queue_;
};

}  // namespace

std::vector<std::pair<int, int>> PerfectMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(mate.size()); ++u)
    if (mate[static_cast<std::size_t>(u)] > u)
      out.emplace_back(u, mate[static_cast<std::size_t>(u)]);
  return out;
}

std::optional<PerfectMatching> max_weight_perfect_matching(const WeightedGraph& g) {
  if (g.vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (g.vertex_count % 2 != 0) return std::nullopt;
  if (g.vertex_count == 0) return PerfectMatching{{}, 0};

  // Collapse parallel edges to the heaviest; drop self-loops.
  std::map<std::pair<int, int>, std::int64_t> best;
  for (const WeightedGraph::Edge& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count)
      throw std::out_of_range("edge endpoint out of range");
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = best.emplace(key, e.weight);
    if (!inserted) it->second = std::max(it->second, e.weight);
  }

  // Shift weights by C = 1 + sum|w| so maximum weight implies maximum
  // cardinality; a perfect matching, if one exists, is then forced.
  std::int64_t shift = 1;
  for (const auto& [key, w] : best) {
    std::int64_t aw = w < 0 ? -w : w;
    if (shift > std::numeric_limits<std::int64_t>::max() / 8 - aw)
      throw std::overflow_error("matching weights too large");
    shift += aw;
  }

  WeightedBlossom solver(g.vertex_count);
  for (const auto& [key, w] : best) solver.add_edge(key.first + 1, key.second + 1, w + shift);
  auto [shifted_weight, mate1] = solver.solve();
  (void)shifted_weight;

  PerfectMatching result;
  result.mate.assign(static_cast<std::size_t>(g.vertex_count), -1);
  for (int u = 1; u <= g.vertex_count; ++u) {
    int v = mate1[static_cast<std::size_t>(u)];
    if (v == 0) return std::nullopt;  // unmatched vertex left: no perfect matching
    result.mate[static_cast<std::size_t>(u - 1)] = v - 1;
  }
  for (int u = 0; u < g.vertex_count; ++u) {
    int v = result.mate[static_cast<std::size_t>(u)];
    if (v == u || result.mate[static_cast<std::size_t>(v)] != u)
      throw std::logic_error("matching engine returned an inconsistent mate array");
    if (v > u) result.weight += best.at({u, v});
  }
  return result;
}

}  // namespace mfass
