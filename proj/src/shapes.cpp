#include "mckay/shapes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mckay {

namespace {

std::vector<std::vector<int>> neighbours(const IntMatrix& adj) {
  const auto n = static_cast<int>(adj.rows());
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (adj(u, v) != 0 || adj(v, u) != 0)) nb[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return nb;
}

ShapeLabel make_label(ShapeKind kind, int n) {
  ShapeLabel l;
  l.kind = kind;
  l.n = n;
  return l;
}

ShapeLabel affine_d_label(int rank, const std::vector<std::size_t>& degree) {
  ShapeLabel l = make_label(ShapeKind::AffineD, rank);
  l.dynkin_order = 4 * (rank - 2);
  for (auto d : degree) l.marking.push_back(d == 1 ? 1 : 2);
  l.hedgehog_alias = rank == 4;
  return l;
}

// Exceptional trees: one branch vertex with three arms.
std::optional<ShapeLabel> exceptional(const std::vector<std::vector<int>>& nb, int centre) {
  std::vector<std::vector<int>> arms;
  for (int start : nb[static_cast<std::size_t>(centre)]) {
    std::vector<int> arm{start};
    int prev = centre;
    int cur = start;
    while (nb[static_cast<std::size_t>(cur)].size() == 2) {
      const int next = nb[static_cast<std::size_t>(cur)][0] == prev ? nb[static_cast<std::size_t>(cur)][1]
                                                                   : nb[static_cast<std::size_t>(cur)][0];
      prev = cur;
      cur = next;
      arm.push_back(cur);
    }
    if (nb[static_cast<std::size_t>(cur)].size() != 1) return std::nullopt;
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<std::size_t> lengths;
  for (const auto& a : arms) lengths.push_back(a.size());
  int rank;
  std::int64_t centre_mark;
  if (lengths == std::vector<std::size_t>{2, 2, 2}) {
    rank = 6;
    centre_mark = 3;
  } else if (lengths == std::vector<std::size_t>{1, 3, 3}) {
    rank = 7;
    centre_mark = 4;
  } else if (lengths == std::vector<std::size_t>{1, 2, 5}) {
    rank = 8;
    centre_mark = 6;
  } else {
    return std::nullopt;
  }
  ShapeLabel l = make_label(ShapeKind::AffineE, rank);
  l.dynkin_order = rank == 6 ? 24 : rank == 7 ? 48 : 120;
  l.marking.assign(nb.size(), 0);
  l.marking[static_cast<std::size_t>(centre)] = centre_mark;
  for (const auto& arm : arms) {
    const auto len = static_cast<std::int64_t>(arm.size());
    std::vector<std::int64_t> values;
    if (rank == 6) values = {2, 1};
    if (rank == 7) values = len == 1 ? std::vector<std::int64_t>{2} : std::vector<std::int64_t>{3, 2, 1};
    if (rank == 8) {
      values = len == 1   ? std::vector<std::int64_t>{3}
               : len == 2 ? std::vector<std::int64_t>{4, 2}
                          : std::vector<std::int64_t>{5, 4, 3, 2, 1};
    }
    for (std::size_t k = 0; k < arm.size(); ++k) l.marking[static_cast<std::size_t>(arm[k])] = values[k];
  }
  return l;
}

std::optional<int> odd_tail(const std::vector<std::vector<int>>& nb, int loop_vertex) {
  const auto n = static_cast<int>(nb.size());
  auto leaf = [&](int v) { return nb[static_cast<std::size_t>(v)].size() == 1; };
  const auto& start = nb[static_cast<std::size_t>(loop_vertex)];
  if (start.size() == 2) {
    if (n == 3 && leaf(start[0]) && leaf(start[1])) return n;
    return std::nullopt;
  }
  if (start.size() != 1) return std::nullopt;
  int prev = loop_vertex;
  int cur = start[0];
  while (nb[static_cast<std::size_t>(cur)].size() == 2) {
    const auto& c = nb[static_cast<std::size_t>(cur)];
    const int next = c[0] == prev ? c[1] : c[0];
    prev = cur;
    cur = next;
  }
  const auto& fork = nb[static_cast<std::size_t>(cur)];
  if (fork.size() != 3) return std::nullopt;
  int leaves = 0;
  for (int v : fork) {
    if (v != prev && leaf(v)) ++leaves;
  }
  return leaves == 2 ? std::optional<int>(n) : std::nullopt;
}

}  // namespace

std::string ShapeLabel::to_string() const {
  switch (kind) {
    case ShapeKind::AffineA: return "A~" + std::to_string(n);
    case ShapeKind::AffineD: return "D~" + std::to_string(n);
    case ShapeKind::AffineE: return "E~" + std::to_string(n);
    case ShapeKind::Hedgehog: return "Hedgehog(" + std::to_string(n) + ")";
    case ShapeKind::DihedralOddTail: return "DihedralOddTail(" + std::to_string(n) + ")";
    case ShapeKind::Other: return "Other";
  }
  return "Other";
}

std::vector<std::vector<int>> weak_components(const IntMatrix& adj) {
  const auto nb = neighbours(adj);
  const auto n = static_cast<int>(adj.rows());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int c = static_cast<int>(out.size());
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = c;
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (int v : nb[static_cast<std::size_t>(members[q])]) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = c;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::vector<int>> strong_components(const IntMatrix& adj) {
  const auto n = static_cast<int>(adj.rows());
  auto reach = [&](int s, bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        const auto w = forward ? adj(u, v) : adj(v, u);
        if (w != 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  };
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const auto fwd = reach(s, true);
    const auto bwd = reach(s, false);
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (fwd[static_cast<std::size_t>(v)] && bwd[static_cast<std::size_t>(v)]) {
        comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
        members.push_back(v);
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

IntMatrix induced_subgraph(const IntMatrix& adj, const std::vector<int>& vertices) {
  const auto m = static_cast<Eigen::Index>(vertices.size());
  IntMatrix sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = adj(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
  }
  return sub;
}

std::int64_t undirected_edge_count(const IntMatrix& adj) {
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < adj.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < adj.cols(); ++j) total += adj(i, j);
  }
  return total;
}

bool is_forest(const IntMatrix& adj) {
  if (!is_symmetric(adj)) return false;
  const auto n = static_cast<int>(adj.rows());
  for (int i = 0; i < n; ++i) {
    if (adj(i, i) != 0) return false;
    for (int j = 0; j < n; ++j) {
      if (adj(i, j) > 1) return false;
    }
  }
  // Acyclicity by depth-first search, cross-checked against |V| = |E| + #components.
  const auto nb = neighbours(adj);
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  bool acyclic = true;
  for (int s = 0; s < n && acyclic; ++s) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    std::vector<int> stack{s};
    while (!stack.empty() && acyclic) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : nb[static_cast<std::size_t>(u)]) {
        if (v == parent[static_cast<std::size_t>(u)]) continue;
        if (parent[static_cast<std::size_t>(v)] != -2) {
          acyclic = false;
          break;
        }
        parent[static_cast<std::size_t>(v)] = u;
        stack.push_back(v);
      }
    }
  }
  const bool counted = n == undirected_edge_count(adj) + static_cast<std::int64_t>(weak_components(adj).size());
  if (acyclic != counted) throw std::logic_error("forest tests disagree");
  return acyclic;
}

bool is_tree(const IntMatrix& adj) { return adj.rows() > 0 && is_forest(adj) && weak_components(adj).size() == 1; }

std::optional<std::vector<int>> bipartition(const IntMatrix& adj) {
  const auto n = static_cast<int>(adj.rows());
  for (int i = 0; i < n; ++i) {
    if (adj(i, i) != 0) return std::nullopt;
  }
  const auto nb = neighbours(adj);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int u = queue[q];
      for (int v : nb[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

BigInt circuit_count(const IntMatrix& adj, int k) {
  if (k < 1) throw std::invalid_argument("circuit_count: k must be positive");
  return trace_of_power(adj, k);
}

ShapeLabel classify_component(const IntMatrix& adj) {
  const auto n = static_cast<int>(adj.rows());
  if (n == 0 || !is_symmetric(adj)) return {};
  if (weak_components(adj).size() != 1) return {};
  if (n == 1) {
    if (adj(0, 0) == 0) return make_label(ShapeKind::Hedgehog, 0);
    if (adj(0, 0) == 2) return make_label(ShapeKind::AffineA, 0);
    return {};
  }
  std::vector<int> loops;
  bool multi = false;
  for (int i = 0; i < n; ++i) {
    if (adj(i, i) != 0) loops.push_back(i);
    for (int j = 0; j < n; ++j) {
      if (i != j && adj(i, j) > 1) multi = true;
    }
  }
  if (multi) {
    if (n == 2 && loops.empty() && adj(0, 1) == 2) return make_label(ShapeKind::AffineA, 1);
    return {};
  }
  const auto nb = neighbours(adj);
  const std::int64_t edges = undirected_edge_count(adj);
  if (!loops.empty()) {
    if (loops.size() != 1 || adj(loops[0], loops[0]) != 1 || edges != n - 1) return {};
    if (auto v = odd_tail(nb, loops[0])) return make_label(ShapeKind::DihedralOddTail, *v);
    return {};
  }
  std::vector<std::size_t> degree;
  for (const auto& x : nb) degree.push_back(x.size());
  if (edges == n && std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 2; })) {
    return make_label(ShapeKind::AffineA, n - 1);
  }
  if (edges != n - 1) return {};
  const auto max_it = std::max_element(degree.begin(), degree.end());
  if (static_cast<int>(*max_it) == n - 1) {
    if (n - 1 == 4) return affine_d_label(4, degree);
    return make_label(ShapeKind::Hedgehog, n - 1);
  }
  if (*max_it != 3) return {};
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 3) branch.push_back(v);
  }
  if (branch.size() == 2) {
    for (int b : branch) {
      int leaves = 0;
      for (int v : nb[static_cast<std::size_t>(b)]) leaves += degree[static_cast<std::size_t>(v)] == 1;
      if (leaves != 2) return {};
    }
    return affine_d_label(n - 1, degree);
  }
  if (branch.size() == 1) {
    if (auto l = exceptional(nb, branch[0])) return *l;
  }
  return {};
}

PfCheck pf_integer_vector_check(const IntMatrix& adj, const std::vector<std::int64_t>& degrees, std::int64_t radius) {
  PfCheck out;
  const auto n = static_cast<Eigen::Index>(degrees.size());
  if (adj.rows() != n) return out;
  IntVector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = degrees[static_cast<std::size_t>(i)];
  out.pass = (adj * d == radius * d) && (d.array() > 0).all();
  if (!out.pass) return out;
  const ShapeLabel label = classify_component(adj);
  if (label.is_dynkin()) {
    const std::int64_t a = d(0) / label.marking[0];
    for (Eigen::Index i = 0; i < n; ++i) {
      if (d(i) != a * label.marking[static_cast<std::size_t>(i)]) out.pass = false;
    }
    if (out.pass) out.a = a;
  }
  return out;
}

IntMatrix tree_from_parents(const std::vector<int>& parent) {
  const auto n = static_cast<Eigen::Index>(parent.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index v = 1; v < n; ++v) {
    m(v, parent[static_cast<std::size_t>(v)]) = 1;
    m(parent[static_cast<std::size_t>(v)], v) = 1;
  }
  return m;
}

IntMatrix affine_a(int n) {
  if (n == 0) return IntMatrix::Constant(1, 1, 2);
  if (n == 1) {
    IntMatrix m(2, 2);
    m << 0, 2, 2, 0;
    return m;
  }
  IntMatrix m = IntMatrix::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const int j = (i + 1) % (n + 1);
    m(i, j) = m(j, i) = 1;
  }
  return m;
}

IntMatrix affine_d(int n) {
  if (n < 4) throw std::invalid_argument("affine_d: rank must be at least 4");
  const int internal = n - 3;
  std::vector<int> parent(static_cast<std::size_t>(n + 1), 0);
  for (int v = 1; v < internal; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
  parent[static_cast<std::size_t>(internal)] = 0;
  parent[static_cast<std::size_t>(internal + 1)] = 0;
  parent[static_cast<std::size_t>(internal + 2)] = internal - 1;
  parent[static_cast<std::size_t>(internal + 3)] = internal - 1;
  return tree_from_parents(parent);
}

IntMatrix affine_e(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("affine_e: rank must be 6, 7 or 8");
  const std::vector<int> arms = n == 6 ? std::vector<int>{2, 2, 2} : n == 7 ? std::vector<int>{1, 3, 3} : std::vector<int>{1, 2, 5};
  std::vector<int> parent{0};
  for (int len : arms) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      parent.push_back(prev);
      prev = static_cast<int>(parent.size()) - 1;
    }
  }
  return tree_from_parents(parent);
}

IntMatrix hedgehog(int spines) {
  std::vector<int> parent(static_cast<std::size_t>(spines + 1), 0);
  return tree_from_parents(parent);
}

IntMatrix dihedral_odd_tail(int vertices) {
  if (vertices < 3) throw std::invalid_argument("dihedral_odd_tail: needs at least 3 vertices");
  std::vector<int> parent(static_cast<std::size_t>(vertices), 0);
  const int fork = vertices - 3;
  for (int v = 1; v <= fork; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
  parent[static_cast<std::size_t>(vertices - 2)] = fork;
  parent[static_cast<std::size_t>(vertices - 1)] = fork;
  IntMatrix m = tree_from_parents(parent);
  m(0, 0) = 1;
  return m;
}

}  // namespace mckay
