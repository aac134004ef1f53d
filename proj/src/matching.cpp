#include "hudn/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hudn {

bool is_valid_matching(const UniformWeightedHypergraph& g, const std::vector<int>& edge_ids) {
  const int r = g.rank();
  std::vector<std::vector<char>> used(r);
  for (int p = 0; p < r; ++p) used[p].assign(g.part_sizes()[p], 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw std::out_of_range("matching: edge id " + std::to_string(id) + " out of range");
    }
    for (int p = 0; p < r; ++p) {
      int v = g.edge(id).vertices[p];
      if (used[p][v]) return false;
      used[p][v] = 1;
    }
  }
  return true;
}

double matching_weight(const UniformWeightedHypergraph& g, const std::vector<int>& edge_ids) {
  std::vector<int> ids(edge_ids);
  std::sort(ids.begin(), ids.end());
  double w = 0.0;
  for (int id : ids) w += g.weight(id);
  return w;
}

Matching greedy_matching(const UniformWeightedHypergraph& g) {
  const int r = g.rank();
  const int m = g.edge_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
    return a < b;
  });

  std::vector<std::vector<char>> used(r);
  for (int p = 0; p < r; ++p) used[p].assign(g.part_sizes()[p], 0);

  Matching out;
  for (int id : order) {
    const auto& e = g.edge(id);
    bool free = true;
    for (int p = 0; p < r; ++p) {
      if (used[p][e.vertices[p]]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (int p = 0; p < r; ++p) used[p][e.vertices[p]] = 1;
    out.edge_ids.push_back(id);
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  out.total_weight = matching_weight(g, out.edge_ids);
  return out;
}

namespace {

// Claw improvement engine. A swap move is identified by its talon set alone:
// the set must be pairwise disjoint, unmatched, and admit a center edge that
// intersects every talon; its gain is the talon weight sum minus the weight
// of the matched edges the talons conflict with. With M(t) the matched
// conflict set of talon t, inclusion-exclusion gives
//   gain(t1,t2)    = s(t1)+s(t2)+w(M1 cap M2)
//   gain(t1,t2,t3) = sum s(ti) + sum w(Mi cap Mj) - w(M1 cap M2 cap M3)
// with s(t) = w(t) - w(M(t)). Center existence is checked through static
// coordinate-pair occurrence tables, so the representative graph is never
// materialized.
//
// The decomposition is a filter only. At rate-scale weights its rounding
// error can exceed epsilon and zero-gain swaps would cycle, so a move is
// accepted only when the ascending-id total of the new matching beats the
// current total by more than epsilon; that quantity strictly increases per
// accepted move, which guarantees termination.
class ClawSearch {
 public:
  ClawSearch(const UniformWeightedHypergraph& g, int k_max, const LocalSearchOptions& opt)
      : g_(g), r_(g.rank()), m_(g.edge_count()), k_max_(k_max), opt_(opt) {
    coords_.resize(static_cast<size_t>(m_) * r_);
    w_.resize(m_);
    for (int e = 0; e < m_; ++e) {
      w_[e] = g.weight(e);
      for (int p = 0; p < r_; ++p) coords_[static_cast<size_t>(e) * r_ + p] = g.edge(e).vertices[p];
    }
    matched_.assign(m_, 0);
    cover_.resize(r_);
    for (int p = 0; p < r_; ++p) cover_[p].assign(g.part_sizes()[p], -1);
    build_tables();
    confl_.assign(static_cast<size_t>(m_) * r_, -1);
    confl_cnt_.assign(m_, 0);
    s_.assign(m_, 0.0);
    wm_.assign(m_, 0.0);
  }

  Matching run(const Matching& init) {
    for (int id : init.edge_ids) place(id);
    total_ = canonical_total();
    if (opt_.best_improvement) {
      bool changed = true;
      while (changed) {
        changed = augment_sweep();
        refresh();
        changed |= best_swap();
      }
    } else {
      bool changed = true;
      while (changed) {
        changed = augment_sweep();
        if (k_max_ >= 2) {
          refresh();
          changed |= pair_scan();
        }
        if (k_max_ >= 3) {
          refresh();
          changed |= triple_scan();
        }
      }
    }
    Matching out;
    for (int e = 0; e < m_; ++e) {
      if (matched_[e]) out.edge_ids.push_back(e);
    }
    out.total_weight = matching_weight(g_, out.edge_ids);
    return out;
  }

 private:
  int coord(int e, int p) const { return coords_[static_cast<size_t>(e) * r_ + p]; }

  void build_tables() {
    pair_tab_.assign(static_cast<size_t>(r_) * r_, {});
    for (int a = 0; a < r_; ++a) {
      for (int b = a + 1; b < r_; ++b) {
        pair_tab_[static_cast<size_t>(a) * r_ + b].assign(
            static_cast<size_t>(g_.part_sizes()[a]) * g_.part_sizes()[b], 0);
      }
    }
    for (int e = 0; e < m_; ++e) {
      for (int a = 0; a < r_; ++a) {
        for (int b = a + 1; b < r_; ++b) {
          pair_tab_[static_cast<size_t>(a) * r_ + b]
                   [static_cast<size_t>(coord(e, a)) * g_.part_sizes()[b] + coord(e, b)]++;
        }
      }
    }
    if (r_ == 3) {
      edge_set3_.reserve(static_cast<size_t>(m_) * 2);
      for (int e = 0; e < m_; ++e) edge_set3_.insert(key3(coord(e, 0), coord(e, 1), coord(e, 2)));
    }
  }

  std::uint64_t key3(int v0, int v1, int v2) const {
    return (static_cast<std::uint64_t>(v0) * g_.part_sizes()[1] + v1) * g_.part_sizes()[2] + v2;
  }

  /// Count of edges whose coordinate in part a is va and in part b is vb.
  int pair_count(int a, int va, int b, int vb) const {
    if (a > b) {
      std::swap(a, b);
      std::swap(va, vb);
    }
    return pair_tab_[static_cast<size_t>(a) * r_ + b]
                    [static_cast<size_t>(va) * g_.part_sizes()[b] + vb];
  }

  bool edge_free(int e) const {
    for (int p = 0; p < r_; ++p) {
      if (cover_[p][coord(e, p)] >= 0) return false;
    }
    return true;
  }

  void place(int e) {
    matched_[e] = 1;
    for (int p = 0; p < r_; ++p) cover_[p][coord(e, p)] = e;
    matched_ids_.insert(std::lower_bound(matched_ids_.begin(), matched_ids_.end(), e), e);
  }

  void evict(int e) {
    matched_[e] = 0;
    for (int p = 0; p < r_; ++p) cover_[p][coord(e, p)] = -1;
    matched_ids_.erase(std::lower_bound(matched_ids_.begin(), matched_ids_.end(), e));
  }

  double canonical_total() const {
    double sum = 0.0;
    for (int e : matched_ids_) sum += w_[e];
    return sum;
  }

  bool disjoint(int a, int b) const {
    for (int p = 0; p < r_; ++p) {
      if (coord(a, p) == coord(b, p)) return false;
    }
    return true;
  }

  /// Recomputes per-edge matched-conflict lists and slack values.
  void refresh() {
    for (int e = 0; e < m_; ++e) {
      int cnt = 0;
      double wsum = 0.0;
      int* lst = &confl_[static_cast<size_t>(e) * r_];
      for (int p = 0; p < r_; ++p) {
        int c = cover_[p][coord(e, p)];
        if (c < 0 || c == e) continue;
        bool dup = false;
        for (int i = 0; i < cnt; ++i) {
          if (lst[i] == c) {
            dup = true;
            break;
          }
        }
        if (!dup) {
          lst[cnt++] = c;
          wsum += w_[c];
        }
      }
      confl_cnt_[e] = cnt;
      wm_[e] = wsum;
      s_[e] = w_[e] - wsum;
    }
  }

  double isect_weight(int a, int b) const {
    const int* la = &confl_[static_cast<size_t>(a) * r_];
    const int* lb = &confl_[static_cast<size_t>(b) * r_];
    double w = 0.0;
    for (int i = 0; i < confl_cnt_[a]; ++i) {
      for (int j = 0; j < confl_cnt_[b]; ++j) {
        if (la[i] == lb[j]) {
          w += w_[la[i]];
          break;
        }
      }
    }
    return w;
  }

  double isect_weight3(int a, int b, int c) const {
    const int* la = &confl_[static_cast<size_t>(a) * r_];
    const int* lb = &confl_[static_cast<size_t>(b) * r_];
    const int* lc = &confl_[static_cast<size_t>(c) * r_];
    double w = 0.0;
    for (int i = 0; i < confl_cnt_[a]; ++i) {
      bool in_b = false, in_c = false;
      for (int j = 0; j < confl_cnt_[b]; ++j) in_b |= (lb[j] == la[i]);
      for (int j = 0; j < confl_cnt_[c]; ++j) in_c |= (lc[j] == la[i]);
      if (in_b && in_c) w += w_[la[i]];
    }
    return w;
  }

  bool has_center2(int t1, int t2) const {
    for (int a = 0; a < r_; ++a) {
      for (int b = 0; b < r_; ++b) {
        if (a == b) continue;
        if (pair_count(a, coord(t1, a), b, coord(t2, b)) > 0) return true;
      }
    }
    return false;
  }

  bool has_center3(int t1, int t2, int t3) const {
    if (r_ == 3) {
      const int t[3] = {t1, t2, t3};
      static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : perms) {
        if (edge_set3_.count(key3(coord(t[p[0]], 0), coord(t[p[1]], 1), coord(t[p[2]], 2)))) {
          return true;
        }
      }
      return false;
    }
    for (int c = 0; c < m_; ++c) {
      bool hit1 = false, hit2 = false, hit3 = false;
      for (int p = 0; p < r_; ++p) {
        hit1 |= coord(c, p) == coord(t1, p);
        hit2 |= coord(c, p) == coord(t2, p);
        hit3 |= coord(c, p) == coord(t3, p);
      }
      if (hit1 && hit2 && hit3) return true;
    }
    return false;
  }

  void collect_victims(std::initializer_list<int> talons) {
    victims_.clear();
    for (int t : talons) {
      const int* lst = &confl_[static_cast<size_t>(t) * r_];
      for (int i = 0; i < confl_cnt_[t]; ++i) {
        if (std::find(victims_.begin(), victims_.end(), lst[i]) == victims_.end()) {
          victims_.push_back(lst[i]);
        }
      }
    }
  }

  /// Ascending-id total of (matched minus the collected victims) plus talons.
  double swapped_total(std::initializer_list<int> talons) {
    scratch_ids_.clear();
    for (int e : matched_ids_) {
      if (std::find(victims_.begin(), victims_.end(), e) == victims_.end()) {
        scratch_ids_.push_back(e);
      }
    }
    scratch_ids_.insert(scratch_ids_.end(), talons.begin(), talons.end());
    std::sort(scratch_ids_.begin(), scratch_ids_.end());
    double sum = 0.0;
    for (int e : scratch_ids_) sum += w_[e];
    return sum;
  }

  /// Exact accept test: the new matching's canonical total must beat the
  /// current one by more than epsilon. Applies the move when it does.
  bool try_swap(std::initializer_list<int> talons) {
    collect_victims(talons);
    double new_total = swapped_total(talons);
    if (!(new_total > total_ + opt_.epsilon)) return false;
    for (int v : victims_) evict(v);
    for (int t : talons) place(t);
    total_ = canonical_total();
    refresh();
    return true;
  }

  bool augment_sweep() {
    bool any = false;
    for (int e = 0; e < m_; ++e) {
      if (!matched_[e] && edge_free(e)) {
        place(e);
        any = true;
      }
    }
    if (any) total_ = canonical_total();
    return any;
  }

  double pair_gain(int t1, int t2) const { return s_[t1] + s_[t2] + isect_weight(t1, t2); }

  double triple_gain(int t1, int t2, int t3) const {
    return s_[t1] + s_[t2] + s_[t3] + isect_weight(t1, t2) + isect_weight(t1, t3) +
           isect_weight(t2, t3) - isect_weight3(t1, t2, t3);
  }

  bool pair_scan() {
    bool any = false;
    for (int t1 = 0; t1 < m_; ++t1) {
      if (matched_[t1]) continue;
      for (int t2 = t1 + 1; t2 < m_; ++t2) {
        if (matched_[t2] || !disjoint(t1, t2)) continue;
        if (s_[t1] + s_[t2] + std::min(wm_[t1], wm_[t2]) <= opt_.epsilon) continue;
        if (pair_gain(t1, t2) <= opt_.epsilon) continue;
        if (!has_center2(t1, t2)) continue;
        if (!try_swap({t1, t2})) continue;  // filter noise, no real improvement
        any = true;
        break;  // t1 is matched now
      }
    }
    return any;
  }

  bool triple_scan() {
    bool any = false;
    for (int t1 = 0; t1 < m_; ++t1) {
      if (matched_[t1]) continue;
      for (int t2 = t1 + 1; t2 < m_ && !matched_[t1]; ++t2) {
        if (matched_[t2] || !disjoint(t1, t2)) continue;
        for (int t3 = t2 + 1; t3 < m_; ++t3) {
          if (matched_[t3] || !disjoint(t1, t3) || !disjoint(t2, t3)) continue;
          if (triple_gain(t1, t2, t3) <= opt_.epsilon) continue;
          if (!has_center3(t1, t2, t3)) continue;
          if (!try_swap({t1, t2, t3})) continue;
          any = true;
          break;  // t1..t3 matched now
        }
      }
    }
    return any;
  }

  bool best_swap() {
    double best_total = total_ + opt_.epsilon;
    int best[3] = {-1, -1, -1};
    int best_k = 0;
    if (k_max_ >= 2) {
      for (int t1 = 0; t1 < m_; ++t1) {
        if (matched_[t1]) continue;
        for (int t2 = t1 + 1; t2 < m_; ++t2) {
          if (matched_[t2] || !disjoint(t1, t2)) continue;
          if (pair_gain(t1, t2) <= opt_.epsilon) continue;
          if (!has_center2(t1, t2)) continue;
          collect_victims({t1, t2});
          double new_total = swapped_total({t1, t2});
          if (new_total > best_total) {
            best_total = new_total;
            best[0] = t1;
            best[1] = t2;
            best_k = 2;
          }
        }
      }
    }
    if (k_max_ >= 3) {
      for (int t1 = 0; t1 < m_; ++t1) {
        if (matched_[t1]) continue;
        for (int t2 = t1 + 1; t2 < m_; ++t2) {
          if (matched_[t2] || !disjoint(t1, t2)) continue;
          for (int t3 = t2 + 1; t3 < m_; ++t3) {
            if (matched_[t3] || !disjoint(t1, t3) || !disjoint(t2, t3)) continue;
            if (triple_gain(t1, t2, t3) <= opt_.epsilon) continue;
            if (!has_center3(t1, t2, t3)) continue;
            collect_victims({t1, t2, t3});
            double new_total = swapped_total({t1, t2, t3});
            if (new_total > best_total) {
              best_total = new_total;
              best[0] = t1;
              best[1] = t2;
              best[2] = t3;
              best_k = 3;
            }
          }
        }
      }
    }
    if (best_k == 2) return try_swap({best[0], best[1]});
    if (best_k == 3) return try_swap({best[0], best[1], best[2]});
    return false;
  }

  const UniformWeightedHypergraph& g_;
  int r_;
  int m_;
  int k_max_;
  LocalSearchOptions opt_;
  std::vector<int> coords_;
  std::vector<double> w_;
  std::vector<char> matched_;
  std::vector<std::vector<int>> cover_;
  std::vector<double> s_;
  std::vector<double> wm_;
  std::vector<int> confl_;
  std::vector<int> confl_cnt_;
  std::vector<int> victims_;
  std::vector<int> matched_ids_;  // sorted
  std::vector<int> scratch_ids_;
  double total_ = 0.0;
  std::vector<std::vector<int>> pair_tab_;
  std::unordered_set<std::uint64_t> edge_set3_;
};

}  // namespace

Matching local_search_matching(const UniformWeightedHypergraph& g, const Matching& init,
                               int k_max, const LocalSearchOptions& options) {
  if (k_max < 1 || k_max > g.rank()) {
    throw std::invalid_argument("local search: k_max must be in [1, rank]");
  }
  if (k_max > 3) {
    throw std::invalid_argument("local search: claw sizes above 3 are not supported");
  }
  if (!is_valid_matching(g, init.edge_ids)) {
    throw std::invalid_argument("local search: initial matching has conflicting edges");
  }
  ClawSearch search(g, k_max, options);
  return search.run(init);
}

Matching exact_matching(const UniformWeightedHypergraph& g, int max_edges) {
  const int m = g.edge_count();
  if (m > max_edges) {
    throw std::invalid_argument("exact matching: instance has " + std::to_string(m) +
                                " edges, above the cap of " + std::to_string(max_edges));
  }
  const int r = g.rank();
  std::vector<double> suffix(m + 1, 0.0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + g.weight(i);

  std::vector<std::vector<char>> used(r);
  for (int p = 0; p < r; ++p) used[p].assign(g.part_sizes()[p], 0);

  std::vector<int> current, best_ids;
  double best_w = 0.0;

  auto consider = [&](double w) {
    if (w > best_w ||
        (w == best_w && std::lexicographical_compare(current.begin(), current.end(),
                                                     best_ids.begin(), best_ids.end()))) {
      best_w = w;
      best_ids = current;
    }
  };

  // Include-first DFS in ascending id order visits lexicographically smaller
  // id sets before larger ones with the same prefix; the explicit tie
  // comparison handles prefix ties (a set vs. a superset of it).
  auto dfs = [&](auto&& self, int i, double w) -> void {
    if (w + suffix[i] < best_w) return;
    if (i == m) {
      consider(w);
      return;
    }
    const auto& e = g.edge(i);
    bool free = true;
    for (int p = 0; p < r; ++p) {
      if (used[p][e.vertices[p]]) {
        free = false;
        break;
      }
    }
    if (free) {
      for (int p = 0; p < r; ++p) used[p][e.vertices[p]] = 1;
      current.push_back(i);
      self(self, i + 1, w + g.weight(i));
      current.pop_back();
      for (int p = 0; p < r; ++p) used[p][e.vertices[p]] = 0;
    }
    self(self, i + 1, w);
  };
  dfs(dfs, 0, 0.0);

  Matching out;
  out.edge_ids = std::move(best_ids);
  out.total_weight = matching_weight(g, out.edge_ids);
  return out;
}

}  // namespace hudn
