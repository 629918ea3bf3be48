#pragma once

// Naive reference implementations used only by the tests. They share no code
// with the library: states are plain label vectors in a std::map.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Labels = std::vector<int>;

inline Labels canonical(const Labels& a) {
  const auto one = std::find(a.begin(), a.end(), 1);
  Labels out(one, a.end());
  out.insert(out.end(), a.begin(), one);
  return out;
}

inline Labels trivial(std::size_t n) {
  Labels out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

/// BFS over rotation classes, from the trivial class.
inline std::map<Labels, int> class_distances(std::size_t n, bool all_pairs) {
  std::map<Labels, int> dist;
  std::deque<Labels> queue;
  dist[trivial(n)] = 0;
  queue.push_back(trivial(n));
  while (!queue.empty()) {
    const Labels cur = queue.front();
    queue.pop_front();
    const int d = dist[cur];
    auto visit = [&](std::size_t i, std::size_t j) {
      Labels next = cur;
      std::swap(next[i], next[j]);
      next = canonical(next);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    };
    if (all_pairs) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) visit(i, j);
    } else if (n >= 2) {
      for (std::size_t p = 0; p < n; ++p) visit(p, (p + 1) % n);
    }
  }
  return dist;
}

/// BFS over all maps on Z_n with swaps of positions (i, i+1 mod n), from the identity.
inline std::map<Labels, int> affine_distances(std::size_t n) {
  Labels id(n);
  std::iota(id.begin(), id.end(), 0);
  std::map<Labels, int> dist{{id, 0}};
  std::deque<Labels> queue{id};
  while (!queue.empty()) {
    const Labels cur = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; n >= 2 && p < n; ++p) {
      Labels next = cur;
      std::swap(next[p], next[(p + 1) % n]);
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

inline int cycles(const std::vector<int>& map) {
  std::vector<bool> seen(map.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map[j])) seen[j] = true;
  }
  return count;
}

inline int inversion_count(const std::vector<int>& v) {
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) count += v[i] > v[j];
  return count;
}

}  // namespace oracle
