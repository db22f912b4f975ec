#include "haq/general_matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace haq {

void GeneralGraph::add_edge(int u, int v, Weight w) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  if (edge_lookup_.empty()) edge_lookup_.resize(vertex_count_);
  for (int k : edge_lookup_[u]) {
    auto& [a, b, wt] = edges_[k];
    if (a == v || b == v) {
      wt = std::max(wt, w);
      return;
    }
  }
  edge_lookup_[u].push_back(static_cast<int>(edges_.size()));
  edge_lookup_[v].push_back(static_cast<int>(edges_.size()));
  edges_.emplace_back(u, v, w);
}

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Maximum weight matching with optional maximum-cardinality preference,
// following the classic O(V^3) blossom formulation (Galil's exposition /
// the well-known mwmatching structure). Weights are doubled internally so
// every dual adjustment stays integral.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, const std::vector<std::tuple<int, int, Weight>>& es,
                 bool max_cardinality)
      : n_(n), maxcard_(max_cardinality) {
    edges_.reserve(es.size());
    for (auto [i, j, w] : es) edges_.emplace_back(i, j, 2 * w);
    const int m = static_cast<int>(edges_.size());
    Weight maxweight = 0;
    for (auto& [i, j, w] : edges_) maxweight = std::max(maxweight, w);

    endpoint_.resize(2 * m);
    for (int p = 0; p < 2 * m; ++p)
      endpoint_[p] = p % 2 == 0 ? std::get<0>(edges_[p / 2])
                                : std::get<1>(edges_[p / 2]);
    neighbend_.assign(n_, {});
    for (int k = 0; k < m; ++k) {
      neighbend_[std::get<0>(edges_[k])].push_back(2 * k + 1);
      neighbend_[std::get<1>(edges_[k])].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.assign(2 * n_, {});
    blossombase_.resize(2 * n_);
    for (int v = 0; v < n_; ++v) blossombase_[v] = v;
    for (int b = n_; b < 2 * n_; ++b) blossombase_[b] = -1;
    blossomendps_.assign(2 * n_, {});
    for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(m, false);
  }

  std::vector<int> solve() {
    const int m = static_cast<int>(edges_.size());
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(labelend_.begin(), labelend_.end(), -1);
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          assert(label_[inblossom_[v]] == 1);
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            if (!allowedge_[k] && slack(k) <= 0) allowedge_[k] = true;
            if (!allowedge_[k]) continue;
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              assert(label_[inblossom_[w]] == 2);
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          }
        }
        if (augmented) break;

        // Compute the dual adjustment.
        int deltatype = -1;
        Weight delta = kInf;
        int deltaedge = -1, deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          Weight mind = kInf;
          for (int v = 0; v < n_; ++v) mind = std::min(mind, dualvar_[v]);
          delta = std::max<Weight>(0, mind);
        }
        for (int k = 0; k < m; ++k) {
          auto [i, j, wt] = edges_[k];
          int bi = inblossom_[i], bj = inblossom_[j];
          if (bi == bj) continue;
          int li = label_[bi], lj = label_[bj];
          if ((li == 1 && lj == 0) || (li == 0 && lj == 1)) {
            Weight d = slack(k);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = k;
            }
          } else if (li == 1 && lj == 1) {
            Weight d = slack(k) / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = k;
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // No further improvement; finish with a max-cardinality optimum.
          assert(maxcard_);
          deltatype = 1;
          Weight mind = kInf;
          for (int v = 0; v < n_; ++v) mind = std::min(mind, dualvar_[v]);
          delta = std::max<Weight>(0, mind);
        }

        for (int v = 0; v < n_; ++v) {
          int l = label_[inblossom_[v]];
          if (l == 1)
            dualvar_[v] -= delta;
          else if (l == 2)
            dualvar_[v] += delta;
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          auto [i, j, wt] = edges_[deltaedge];
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          assert(label_[inblossom_[i]] == 1);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(std::get<0>(edges_[deltaedge]));
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }

    std::vector<int> mates(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (mate_[v] >= 0) mates[v] = endpoint_[mate_[v]];
    return mates;
  }

 private:
  Weight slack(int k) const {
    auto [i, j, wt] = edges_[k];
    return dualvar_[i] + dualvar_[j] - 2 * wt;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) blossom_leaves(t, out);
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    if (t == 1) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      queue_.insert(queue_.end(), leaves.begin(), leaves.end());
    } else if (t == 2) {
      int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      assert(label_[b] == 1);
      path.push_back(b);
      label_[b] |= 4;
      assert(labelend_[b] == mate_[blossombase_[b]]);
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        assert(label_[b] == 2);
        assert(labelend_[b] >= 0);
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] &= ~4;
    return base;
  }

  void add_blossom(int base, int k) {
    auto [v, w, wt] = edges_[k];
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> path, endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      assert(label_[bv] == 2 ||
             (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
      assert(labelend_[bv] >= 0);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      assert(label_[bw] == 2 ||
             (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
      assert(labelend_[bw] >= 0);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = std::move(path);
    blossomendps_[b] = std::move(endps);
    assert(label_[bb] == 1);
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        blossom_leaves(s, leaves);
        for (int v : leaves) inblossom_[v] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      assert(labelend_[b] >= 0);
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = 0;
      const int len = static_cast<int>(blossomchilds_[b].size());
      for (int i = 0; i < len; ++i)
        if (blossomchilds_[b][i] == entrychild) j = i;
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto child_at = [&](int idx) {
        return blossomchilds_[b][(idx % len + len) % len];
      };
      auto endp_at = [&](int idx) {
        return blossomendps_[b][(idx % len + len) % len];
      };
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[endp_at(j - endptrick) / 2] = true;
        j += jstep;
        p = endp_at(j - endptrick) ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = child_at(j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      j += jstep;
      while (child_at(j) != entrychild) {
        bv = child_at(j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        blossom_leaves(bv, leaves);
        int marked = -1;
        for (int v : leaves)
          if (label_[v] != 0) {
            marked = v;
            break;
          }
        if (marked >= 0) {
          assert(label_[marked] == 2);
          assert(inblossom_[marked] == bv);
          label_[marked] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(marked, 2, labelend_[marked]);
        }
        j += jstep;
      }
    }
    label_[b] = -1;
    labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);
    const int len = static_cast<int>(blossomchilds_[b].size());
    int i = 0;
    for (int idx = 0; idx < len; ++idx)
      if (blossomchilds_[b][idx] == t) i = idx;
    int j = i, jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto child_at = [&](int idx) {
      return blossomchilds_[b][(idx % len + len) % len];
    };
    auto endp_at = [&](int idx) {
      return blossomendps_[b][(idx % len + len) % len];
    };
    while (j != 0) {
      j += jstep;
      t = child_at(j);
      int p = endp_at(j - endptrick) ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = child_at(j);
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                blossomchilds_[b].end());
    std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                blossomendps_[b].end());
    blossombase_[b] = blossombase_[blossomchilds_[b][0]];
    assert(blossombase_[b] == v);
  }

  void augment_matching(int k) {
    auto [v, w, wt] = edges_[k];
    for (auto [s0, p0] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
      int s = s0, p = p0;
      while (true) {
        int bs = inblossom_[s];
        assert(label_[bs] == 1);
        assert(labelend_[bs] == mate_[blossombase_[bs]]);
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        assert(label_[bt] == 2);
        assert(labelend_[bt] >= 0);
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        assert(blossombase_[bt] == t);
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int n_;
  bool maxcard_;
  std::vector<std::tuple<int, int, Weight>> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> unusedblossoms_;
  std::vector<Weight> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_cardinality_max_weight_mates(const GeneralGraph& g) {
  if (g.vertex_count() == 0) return {};
  BlossomMatcher matcher(g.vertex_count(), g.edges(), true);
  return matcher.solve();
}

std::optional<PerfectMatchingResult> max_weight_perfect_matching(
    const GeneralGraph& g) {
  if (g.vertex_count() == 0) return PerfectMatchingResult{};
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  std::vector<int> mates = max_cardinality_max_weight_mates(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mates[v] < 0) return std::nullopt;
  PerfectMatchingResult result;
  for (auto [u, v, w] : g.edges()) {
    if (mates[u] == v && u < v) {
      result.weight += w;
      result.edges.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace haq
