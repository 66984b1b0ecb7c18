#include "mdteds/teds.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mdteds/text_similarity.hpp"
#include "unicode.hpp"

namespace mdteds {

double default_rename_cost(const TreeNode& a, const TreeNode& b) {
  if (a.label != b.label) return 1.0;
  if (a.text == b.text) return 0.0;
  if (a.label == NodeLabel::cell) return 1.0 - text_similarity(a.text, b.text);
  return 0.0;
}

namespace {

// Postorder view with leftmost-leaf descendants and keyroots, the inputs of
// the Zhang-Shasha recurrence. Folded code points are precomputed per node
// so the default rename cost skips re-normalizing on every comparison.
struct PostorderTree {
  std::vector<const TreeNode*> nodes;  // postorder
  std::vector<int> lmld;               // leftmost leaf descendant, postorder ids
  std::vector<int> keyroots;           // ascending
  std::vector<std::u32string> folded;  // folded normalized text per node

  explicit PostorderTree(const TableTree& tree) {
    const std::size_t n = tree.node_count();
    nodes.reserve(n);
    lmld.reserve(n);
    visit(tree, 0);
    folded.reserve(n);
    for (const TreeNode* node : nodes) {
      folded.push_back(uni::fold(uni::decode_utf8(node->text)));
    }
    // A keyroot is the highest node sharing its leftmost leaf.
    std::vector<char> covered(n, 0);
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      if (!covered[static_cast<std::size_t>(lmld[static_cast<std::size_t>(i)])]) {
        covered[static_cast<std::size_t>(lmld[static_cast<std::size_t>(i)])] = 1;
        keyroots.push_back(i);
      }
    }
    std::sort(keyroots.begin(), keyroots.end());
  }

  int visit(const TableTree& tree, int node) {
    const TreeNode& n = tree.nodes[static_cast<std::size_t>(node)];
    int leftmost = -1;
    for (int child : n.children) {
      const int child_lmld = visit(tree, child);
      if (leftmost < 0) leftmost = child_lmld;
    }
    nodes.push_back(&n);
    const int id = static_cast<int>(nodes.size()) - 1;
    lmld.push_back(leftmost < 0 ? id : leftmost);
    return lmld.back();
  }
};

std::size_t edit_distance_u32(const std::u32string& a, const std::u32string& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;
  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

class Distance {
 public:
  Distance(const PostorderTree& a, const PostorderTree& b, const CostModel& costs)
      : a_(a), b_(b), costs_(costs) {}

  double run() {
    const std::size_t na = a_.nodes.size();
    const std::size_t nb = b_.nodes.size();
    treedist_.assign(na * nb, 0.0);
    fdist_.assign((na + 1) * (nb + 1), 0.0);
    for (int ka : a_.keyroots) {
      for (int kb : b_.keyroots) {
        forest_distance(ka, kb);
      }
    }
    return treedist_[(na - 1) * nb + (nb - 1)];
  }

 private:
  double rename(int i, int j) const {
    if (costs_.rename_cost_fn) return costs_.rename_cost_fn(*a_.nodes[i], *b_.nodes[j]);
    const TreeNode& na = *a_.nodes[static_cast<std::size_t>(i)];
    const TreeNode& nb = *b_.nodes[static_cast<std::size_t>(j)];
    if (na.label != nb.label) return 1.0;
    if (na.label != NodeLabel::cell) return 0.0;
    const std::u32string& ta = a_.folded[static_cast<std::size_t>(i)];
    const std::u32string& tb = b_.folded[static_cast<std::size_t>(j)];
    if (ta == tb) return 0.0;
    const std::size_t longer = std::max(ta.size(), tb.size());
    return static_cast<double>(edit_distance_u32(ta, tb)) / static_cast<double>(longer);
  }

  // Zhang-Shasha forest distances over the spans rooted at keyroots ka/kb.
  void forest_distance(int ka, int kb) {
    const int la = a_.lmld[static_cast<std::size_t>(ka)];
    const int lb = b_.lmld[static_cast<std::size_t>(kb)];
    const std::size_t m = static_cast<std::size_t>(ka - la) + 2;
    const std::size_t n = static_cast<std::size_t>(kb - lb) + 2;
    const std::size_t nb_total = b_.nodes.size();
    auto fd = [&](std::size_t i, std::size_t j) -> double& {
      return fdist_[i * (nb_total + 1) + j];
    };

    fd(0, 0) = 0.0;
    for (std::size_t di = 1; di < m; ++di) fd(di, 0) = fd(di - 1, 0) + costs_.delete_cost;
    for (std::size_t dj = 1; dj < n; ++dj) fd(0, dj) = fd(0, dj - 1) + costs_.insert_cost;

    for (std::size_t di = 1; di < m; ++di) {
      const int i = la + static_cast<int>(di) - 1;
      for (std::size_t dj = 1; dj < n; ++dj) {
        const int j = lb + static_cast<int>(dj) - 1;
        const double del = fd(di - 1, dj) + costs_.delete_cost;
        const double ins = fd(di, dj - 1) + costs_.insert_cost;
        if (a_.lmld[static_cast<std::size_t>(i)] == la &&
            b_.lmld[static_cast<std::size_t>(j)] == lb) {
          const double ren = fd(di - 1, dj - 1) + rename(i, j);
          const double best = std::min({del, ins, ren});
          fd(di, dj) = best;
          treedist_[static_cast<std::size_t>(i) * nb_total + static_cast<std::size_t>(j)] =
              best;
        } else {
          const std::size_t pi =
              static_cast<std::size_t>(a_.lmld[static_cast<std::size_t>(i)] - la);
          const std::size_t pj =
              static_cast<std::size_t>(b_.lmld[static_cast<std::size_t>(j)] - lb);
          const double sub =
              fd(pi, pj) +
              treedist_[static_cast<std::size_t>(i) * nb_total + static_cast<std::size_t>(j)];
          fd(di, dj) = std::min({del, ins, sub});
        }
      }
    }
  }

  const PostorderTree& a_;
  const PostorderTree& b_;
  const CostModel& costs_;
  std::vector<double> treedist_;
  std::vector<double> fdist_;
};

}  // namespace

double tree_edit_distance(const TableTree& a, const TableTree& b, const CostModel& costs) {
  const PostorderTree pa(a);
  const PostorderTree pb(b);
  return Distance(pa, pb, costs).run();
}

double teds_pair(const Table& pred, const Table& gold) {
  const TableTree ta = build_tree(pred);
  const TableTree tb = build_tree(gold);
  const double dist = tree_edit_distance(ta, tb);
  const double denom = static_cast<double>(std::max(ta.node_count(), tb.node_count()));
  return 1.0 - dist / denom;
}

}  // namespace mdteds
