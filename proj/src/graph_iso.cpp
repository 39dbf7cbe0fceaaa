#include "mckay/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mckay {

namespace {

using Signature = std::tuple<std::int64_t, std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>,
                             std::vector<std::pair<std::int64_t, std::int64_t>>>;

// Refines colors of both graphs with a shared palette until the partition is stable.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> refine(const IntMatrix& a, const IntMatrix& b,
                                                                       std::vector<std::int64_t> ca,
                                                                       std::vector<std::int64_t> cb) {
  const auto n = static_cast<int>(a.rows());
  std::size_t classes = 0;
  while (true) {
    std::map<Signature, std::int64_t> palette;
    auto signature = [](const IntMatrix& m, const std::vector<std::int64_t>& c, int v) {
      std::vector<std::pair<std::int64_t, std::int64_t>> out, in;
      for (int u = 0; u < m.rows(); ++u) {
        if (u == v) continue;
        if (m(v, u) != 0) out.emplace_back(c[static_cast<std::size_t>(u)], m(v, u));
        if (m(u, v) != 0) in.emplace_back(c[static_cast<std::size_t>(u)], m(u, v));
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      return Signature{c[static_cast<std::size_t>(v)], m(v, v), std::move(out), std::move(in)};
    };
    std::vector<Signature> sa, sb;
    for (int v = 0; v < n; ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < n; ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) palette.emplace(s, 0);
    for (const auto& s : sb) palette.emplace(s, 0);
    std::int64_t next = 0;
    for (auto& [s, id] : palette) id = next++;
    for (int v = 0; v < n; ++v) {
      ca[static_cast<std::size_t>(v)] = palette[sa[static_cast<std::size_t>(v)]];
      cb[static_cast<std::size_t>(v)] = palette[sb[static_cast<std::size_t>(v)]];
    }
    if (palette.size() == classes) return {ca, cb};
    classes = palette.size();
  }
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const IntMatrix& a, const IntMatrix& b,
                                                 const std::vector<std::int64_t>& color_a,
                                                 const std::vector<std::int64_t>& color_b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols()) return std::nullopt;
  const auto n = static_cast<int>(a.rows());
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> ca = color_a.empty() ? std::vector<std::int64_t>(un, 0) : color_a;
  std::vector<std::int64_t> cb = color_b.empty() ? std::vector<std::int64_t>(un, 0) : color_b;
  if (ca.size() != un || cb.size() != un) return std::nullopt;
  std::tie(ca, cb) = refine(a, b, std::move(ca), std::move(cb));
  {
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::map<std::int64_t, int> class_size;
  for (auto c : ca) ++class_size[c];
  std::vector<int> order(un);
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return class_size[ca[static_cast<std::size_t>(x)]] < class_size[ca[static_cast<std::size_t>(y)]];
  });
  std::vector<int> map(un, -1);
  std::vector<char> used(un, 0);
  auto consistent = [&](std::size_t depth, int u, int w) {
    if (a(u, u) != b(w, w)) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const int x = order[d];
      const int y = map[static_cast<std::size_t>(x)];
      if (a(u, x) != b(w, y) || a(x, u) != b(y, w)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == un) return true;
    const int u = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(u)]) continue;
      if (!consistent(depth, u, w)) continue;
      map[static_cast<std::size_t>(u)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      map[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace mckay
