#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "equidist/wasserstein.hpp"

namespace equidist::wasserstein {

namespace {

// Dense transportation network simplex.  Nodes 0..n-1 are sources, n..n+m-1
// sinks; arc e = i*m + j always points source -> sink.  The basis is a
// spanning tree; block pricing picks the entering arc, the leaving arc is the
// min-residual arc on the cycle with ties broken by the last position along
// the cycle direction starting from the apex (keeps the tree strongly
// feasible once reached, which prevents degenerate cycling in practice).
class NetworkSimplex {
 public:
  NetworkSimplex(const std::vector<double>& a, const std::vector<double>& b,
                 const std::vector<double>& cost)
      : n_(a.size()), m_(b.size()), N_(n_ + m_), cost_(cost) {
    supply_ = a;
    demand_ = b;
    double maxc = 0.0;
    for (double c : cost_) maxc = std::max(maxc, std::abs(c));
    tol_ = 1e-13 * (1.0 + maxc);
    parent_.assign(N_, -1);
    parent_arc_.assign(N_, -1);
    basic_index_.assign(N_, 0);
    flow_.assign(N_, 0.0);
    depth_.assign(N_, 0);
    pi_.assign(N_, 0.0);
    adj_.assign(N_, {});
  }

  TransportResult solve() {
    initial_basis();
    rebuild_tree();
    const std::size_t arcs = n_ * m_;
    const std::size_t block = std::max<std::size_t>(64, std::size_t(std::sqrt(double(arcs))));
    std::size_t start = 0;
    std::size_t pivots = 0;
    const std::size_t pivot_limit = 200 * N_ + 100000;
    for (;;) {
      long enter = find_entering(start, block);
      if (enter < 0) break;
      pivot(std::size_t(enter));
      if (++pivots > pivot_limit)
        fail(ErrorKind::SizeGuard, "network simplex pivot limit exceeded");
    }
    TransportResult res;
    res.method = "exact_network_simplex";
    res.iterations = pivots;
    double value = 0.0;
    for (std::size_t v = 0; v < N_; ++v)
      if (parent_[v] >= 0) value += flow_[v] * cost_[std::size_t(parent_arc_[v])];
    res.value = value;
    res.u.resize(n_);
    res.v.resize(m_);
    double dual = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      res.u[i] = pi_[i];
      dual += supply_[i] * pi_[i];
    }
    for (std::size_t j = 0; j < m_; ++j) {
      res.v[j] = -pi_[n_ + j];
      dual += demand_[j] * res.v[j];
    }
    res.duality_gap = value - dual;
    return res;
  }

 private:
  void set_basic(std::size_t i, std::size_t j, double f) {
    basic_.push_back({i, j, f});
  }

  void initial_basis() {
    // northwest corner: staircase of n+m-1 basic arcs
    std::size_t i = 0, j = 0;
    double ra = supply_[0], rb = demand_[0];
    for (std::size_t step = 0; step + 1 < N_; ++step) {
      double f = std::min(ra, rb);
      set_basic(i, j, f);
      if (step + 2 == N_) break;
      if ((ra < rb && i + 1 < n_) || j + 1 >= m_) {
        rb -= f;
        ++i;
        ra = supply_[i];
      } else {
        ra -= f;
        ++j;
        rb = demand_[j];
      }
    }
  }

  void rebuild_tree() {
    for (auto& l : adj_) l.clear();
    for (std::size_t k = 0; k < basic_.size(); ++k) {
      adj_[basic_[k].i].push_back(k);
      adj_[n_ + basic_[k].j].push_back(k);
    }
    // BFS from root 0: parents, depths, potentials, flows on tree edges
    std::vector<int> order;
    order.reserve(N_);
    std::vector<char> seen(N_, 0);
    parent_[0] = -1;
    parent_arc_[0] = -1;
    depth_[0] = 0;
    pi_[0] = 0.0;
    flow_[0] = 0.0;
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t u = std::size_t(order[head]);
      for (std::size_t k : adj_[u]) {
        const Basic& e = basic_[k];
        std::size_t src = e.i, snk = n_ + e.j;
        std::size_t v = (src == u) ? snk : src;
        if (seen[v]) continue;
        seen[v] = 1;
        parent_[v] = int(u);
        parent_arc_[v] = long(e.i * m_ + e.j);
        basic_index_[v] = k;
        depth_[v] = depth_[u] + 1;
        flow_[v] = e.f;
        // cost = pi[src] - pi[snk] on basic arcs
        if (v == snk)
          pi_[v] = pi_[u] - cost_[e.i * m_ + e.j];
        else
          pi_[v] = pi_[u] + cost_[e.i * m_ + e.j];
        order.push_back(int(v));
      }
    }
  }

  long find_entering(std::size_t& start, std::size_t block) {
    const std::size_t arcs = n_ * m_;
    std::size_t scanned = 0;
    while (scanned < arcs) {
      std::size_t hi = std::min(start + block, arcs);
      double best_rc = -tol_;
      long best = -1;
      for (std::size_t e = start; e < hi; ++e) {
        double rc = cost_[e] - pi_[e / m_] + pi_[n_ + e % m_];
        if (rc < best_rc) {
          best_rc = rc;
          best = long(e);
        }
      }
      scanned += hi - start;
      start = (hi == arcs) ? 0 : hi;
      if (best >= 0) return best;
    }
    return -1;
  }

  void pivot(std::size_t enter) {
    std::size_t si = enter / m_, sj = enter % m_;
    std::size_t u = si, v = n_ + sj;
    // collect the two tree paths to the LCA
    std::vector<std::size_t> up_u, up_v;  // nodes whose parent edge is on the path
    std::size_t x = u, y = v;
    while (x != y) {
      if (depth_[x] >= depth_[y]) {
        up_u.push_back(x);
        x = std::size_t(parent_[x]);
      } else {
        up_v.push_back(y);
        y = std::size_t(parent_[y]);
      }
    }
    // cycle orientation: apex -> si (down the u-side), entering arc
    // si -> n+sj, then n+sj -> apex (up the v-side).  Flow deltas: +1 if the
    // tree arc points along the cycle orientation, -1 otherwise.
    struct CycleEdge {
      std::size_t node;  // tree edge (node, parent[node])
      int delta;         // +1 add theta, -1 subtract theta
      std::size_t pos;   // position along the cycle starting at the apex
    };
    std::vector<CycleEdge> edges;
    edges.reserve(up_u.size() + up_v.size());
    // u-side in cycle order: apex down to si; traversal parent -> node
    for (std::size_t k = 0; k < up_u.size(); ++k) {
      std::size_t node = up_u[up_u.size() - 1 - k];
      std::size_t asrc = std::size_t(parent_arc_[node]) / m_;
      bool along = (node != asrc);  // parent is the arc's source side
      edges.push_back({node, along ? +1 : -1, k});
    }
    // v-side in cycle order: n+sj up to apex; traversal node -> parent
    for (std::size_t k = 0; k < up_v.size(); ++k) {
      std::size_t node = up_v[k];
      std::size_t asrc = std::size_t(parent_arc_[node]) / m_;
      bool along = (node == asrc);  // node is the arc's source side
      edges.push_back({node, along ? +1 : -1, up_u.size() + 1 + k});
    }

    double theta = std::numeric_limits<double>::infinity();
    for (const auto& e : edges)
      if (e.delta < 0) theta = std::min(theta, flow_[e.node]);
    long leave = -1;
    std::size_t best_pos = 0;
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
      const auto& e = edges[idx];
      if (e.delta < 0 && flow_[e.node] <= theta + 1e-15) {
        if (leave < 0 || e.pos > best_pos) {
          leave = long(idx);
          best_pos = e.pos;
        }
      }
    }
    if (leave < 0) fail(ErrorKind::SizeGuard, "unbounded pivot cycle");

    for (const auto& e : edges) flow_[e.node] += e.delta * theta;
    // basis exchange: remove the leaving tree edge, insert the entering arc
    std::size_t leave_node = edges[std::size_t(leave)].node;
    std::size_t leave_basic = basic_index_[leave_node];
    // write flows back into basic_ so the rebuild sees them
    for (const auto& e : edges) basic_[basic_index_[e.node]].f = flow_[e.node];
    basic_[leave_basic] = Basic{si, sj, theta};
    rebuild_tree();
  }

  struct Basic {
    std::size_t i, j;
    double f;
  };

  std::size_t n_, m_, N_;
  const std::vector<double>& cost_;
  std::vector<double> supply_, demand_;
  double tol_;
  std::vector<Basic> basic_;
  std::vector<int> parent_;
  std::vector<long> parent_arc_;
  std::vector<std::size_t> basic_index_;
  std::vector<double> flow_;
  std::vector<int> depth_;
  std::vector<double> pi_;
  std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace

TransportResult w1_exact_discrete(const std::vector<double>& mu, const std::vector<double>& nu,
                                  const std::vector<double>& cost, std::size_t size_guard) {
  const std::size_t n = mu.size(), m = nu.size();
  if (n == 0 || m == 0) fail(ErrorKind::ValueOutOfRange, "empty measure");
  if (n * m != cost.size()) fail(ErrorKind::ValueOutOfRange, "cost matrix shape mismatch");
  if (n * m > size_guard)
    fail(ErrorKind::SizeGuard, "cost entries " + std::to_string(n * m) + " exceed guard " +
                                   std::to_string(size_guard));
  double sa = 0.0, sb = 0.0;
  for (double x : mu) sa += x;
  for (double x : nu) sb += x;
  if (std::abs(sa - sb) > 1e-9)
    fail(ErrorKind::MassMismatch, "total masses differ by " + std::to_string(sa - sb));
  // balance exactly
  std::vector<double> b = nu;
  double scale = sa / sb;
  for (double& x : b) x *= scale;
  NetworkSimplex ns(mu, b, cost);
  return ns.solve();
}

TransportResult w1_exact_planar(const Empirical2D& mu, const Empirical2D& nu,
                                std::size_t size_guard) {
  const std::size_t n = mu.pts.size(), m = nu.pts.size();
  if (n * m > size_guard)
    fail(ErrorKind::SizeGuard, "cost entries " + std::to_string(n * m) + " exceed guard " +
                                   std::to_string(size_guard));
  std::vector<double> cost(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cost[i * m + j] = std::abs(mu.pts[i] - nu.pts[j]);
  return w1_exact_discrete(mu.weights, nu.weights, cost, size_guard);
}

}  // namespace equidist::wasserstein
