#pragma once
// Small successive-shortest-path min-cost max-flow.  Doubles as a plain
// max-flow when every cost is zero.  Deterministic: augmenting paths follow
// edge insertion order.

#include <deque>
#include <limits>
#include <vector>

#include "frugal/core.hpp"

namespace frugal::detail {

class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : head_(nodes, -1) {}

  int add_edge(int from, int to, long long cap, long long cost) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    next_.push_back(head_[from]);
    head_[from] = id;

    to_.push_back(from);
    cap_.push_back(0);
    cost_.push_back(-cost);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  long long flow_on(int edge_id) const { return cap_[edge_id ^ 1]; }

  // Sends at most `want` units; returns (flow, cost).
  std::pair<long long, long long> run(int source, int sink, long long want) {
    long long flow = 0, total_cost = 0;
    while (flow < want) {
      // SPFA shortest path by cost (costs may repeat but stay >= 0 here;
      // negative residuals still handled correctly by label correcting)
      const int n = static_cast<int>(head_.size());
      std::vector<long long> dist(n, kInf);
      std::vector<int> in_edge(n, -1);
      std::vector<char> inq(n, 0);
      std::deque<int> q;
      dist[source] = 0;
      q.push_back(source);
      inq[source] = 1;
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        inq[u] = 0;
        for (int e = head_[u]; e != -1; e = next_[e]) {
          if (cap_[e] <= 0) continue;
          const int v = to_[e];
          if (dist[u] + cost_[e] < dist[v]) {
            dist[v] = dist[u] + cost_[e];
            in_edge[v] = e;
            if (!inq[v]) {
              inq[v] = 1;
              q.push_back(v);
            }
          }
        }
      }
      if (dist[sink] >= kInf) break;
      long long push = want - flow;
      for (int v = sink; v != source;) {
        const int e = in_edge[v];
        push = std::min(push, cap_[e]);
        v = to_[e ^ 1];
      }
      for (int v = sink; v != source;) {
        const int e = in_edge[v];
        cap_[e] -= push;
        cap_[e ^ 1] += push;
        v = to_[e ^ 1];
      }
      flow += push;
      total_cost += push * dist[sink];
    }
    return {flow, total_cost};
  }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> next_;
  std::vector<long long> cap_;
  std::vector<long long> cost_;
};

}  // namespace frugal::detail
