#include "mckay/mckay_graph.hpp"

#include <algorithm>
#include <map>

#include "mckay/error.hpp"
#include "mckay/graph_iso.hpp"
#include "mckay/shapes.hpp"

namespace mckay {

namespace {

std::vector<std::int64_t> value_key(const std::vector<RootSum>& values) {
  std::vector<std::int64_t> key;
  for (const auto& v : values) {
    for (const auto& [j, m] : v.terms()) {
      key.push_back(j);
      key.push_back(m);
    }
    key.push_back(-1);
  }
  return key;
}

McKayGraph finish(const CharacterTable& ct, const Character& rho, IntMatrix adj) {
  McKayGraph g;
  g.dims = ct.degrees;
  g.adjacency = std::move(adj);
  g.rho = rho;
  g.trivial_vertex = ct.trivial_index;
  g.undirected = is_symmetric(g.adjacency);
  g.loopless = (g.adjacency.diagonal().array() == 0).all();
  g.simply_laced = true;
  for (Eigen::Index i = 0; i < g.adjacency.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.adjacency.cols(); ++j) {
      if (i != j && g.adjacency(i, j) > 1) g.simply_laced = false;
    }
  }
  return g;
}

}  // namespace

McKayGraph build_mckay_graph(const CharacterTable& ct, const Character& rho) {
  const auto& cd = *ct.classes;
  const int r = ct.r;
  const std::int64_t order = ct.group->order();
  IntMatrix adj(r, r);
  RootAccumulator acc(ct.exponent());
  for (int i = 0; i < r; ++i) {
    std::vector<RootSum> product;
    product.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      product.push_back(ct.irreducible(i).values[static_cast<std::size_t>(k)] * rho.values[static_cast<std::size_t>(k)]);
    }
    for (int j = 0; j < r; ++j) {
      const auto& chi_j = ct.irreducible(j).values;
      acc.clear();
      for (int k = 0; k < r; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        acc.add_product(cd.class_sizes[kk], product[kk], chi_j[static_cast<std::size_t>(cd.inverse_class[kk])]);
      }
      const auto total = acc.as_integer();
      if (!total || *total < 0 || *total % order != 0) {
        throw Error(ErrorCode::InternalNonInteger, "edge multiplicity is not a nonnegative integer");
      }
      adj(i, j) = static_cast<std::int64_t>(*total / order);
    }
  }
  return finish(ct, rho, std::move(adj));
}

McKayGraph build_mckay_graph_modular(const CharacterTable& ct, const Character& rho) {
  const std::int64_t max_degree = *std::max_element(ct.degrees.begin(), ct.degrees.end());
  if (max_degree * rho.degree() >= ct.prime) return build_mckay_graph(ct, rho);
  const PrimeField f(ct.prime);
  const auto& cd = *ct.classes;
  const int r = ct.r;
  const std::int64_t xi = f.root_of_unity(ct.exponent());
  std::vector<std::int64_t> xi_pow(static_cast<std::size_t>(ct.exponent()));
  xi_pow[0] = 1;
  for (std::size_t j = 1; j < xi_pow.size(); ++j) xi_pow[j] = f.mul(xi_pow[j - 1], xi);
  // w_k = h_k rho(g_k) / |G|.
  std::vector<std::int64_t> w(static_cast<std::size_t>(r));
  const std::int64_t order_inv = f.inv(f.reduce(ct.group->order()));
  for (int k = 0; k < r; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    std::int64_t v = 0;
    for (const auto& [j, m] : rho.values[kk].terms()) v = f.add(v, f.mul(f.reduce(m), xi_pow[static_cast<std::size_t>(j)]));
    w[kk] = f.mul(f.mul(v, cd.class_sizes[kk]), order_inv);
  }
  IntMatrix adj(r, r);
  for (int i = 0; i < r; ++i) {
    std::vector<std::int64_t> left(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      left[static_cast<std::size_t>(k)] = f.mul(ct.modular_values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].value, w[static_cast<std::size_t>(k)]);
    }
    for (int j = 0; j < r; ++j) {
      const auto& chi_j = ct.modular_values[static_cast<std::size_t>(j)];
      std::int64_t s = 0;
      for (int k = 0; k < r; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        s = f.add(s, f.mul(left[kk], chi_j[static_cast<std::size_t>(cd.inverse_class[kk])].value));
      }
      adj(i, j) = s;
    }
  }
  return finish(ct, rho, std::move(adj));
}

McKayGraph build_mckay_graph(const CharacterTable& ct, const RhoSelector& sel) {
  return build_mckay_graph(ct, resolve_rho(ct, sel));
}

Character dual_character(const CharacterTable& ct, const Character& chi) {
  std::vector<RootSum> values;
  for (int k = 0; k < ct.r; ++k) {
    values.push_back(chi.values[static_cast<std::size_t>(ct.classes->inverse_class[static_cast<std::size_t>(k)])]);
  }
  auto m = decompose(ct, values);
  return {std::move(values), std::move(m)};
}

bool dual_check(const CharacterTable& ct, const Character& rho) {
  const McKayGraph g = build_mckay_graph(ct, rho);
  const McKayGraph d = build_mckay_graph(ct, dual_character(ct, rho));
  return d.adjacency == g.adjacency.transpose();
}

bool dual_check(const CharacterTable& ct, const RhoSelector& sel) { return dual_check(ct, resolve_rho(ct, sel)); }

std::vector<KernelOrbit> conjugation_orbits(const CharacterTable& ct, const Subgroup& n, const CharacterTable& n_table) {
  const auto& ncd = *n_table.classes;
  const int rn = n_table.r;
  std::map<std::vector<std::int64_t>, int> index;
  for (int t = 0; t < rn; ++t) index.emplace(value_key(n_table.irreducible(t).values), t);
  std::vector<int> parent(static_cast<std::size_t>(rn));
  for (int t = 0; t < rn; ++t) parent[static_cast<std::size_t>(t)] = t;
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  const auto& g = *ct.group;
  for (int gen : g.generators()) {
    // Class of N that g^-1 x g falls in, for each class rep x of N.
    std::vector<int> moved(static_cast<std::size_t>(rn));
    for (int c = 0; c < rn; ++c) {
      const int x = n.to_parent(ncd.representatives[static_cast<std::size_t>(c)]);
      moved[static_cast<std::size_t>(c)] = ncd.class_of[static_cast<std::size_t>(n.from_parent(g.conjugate(x, gen)))];
    }
    for (int t = 0; t < rn; ++t) {
      std::vector<RootSum> values;
      for (int c = 0; c < rn; ++c) values.push_back(n_table.irreducible(t).values[static_cast<std::size_t>(moved[static_cast<std::size_t>(c)])]);
      const auto it = index.find(value_key(values));
      if (it == index.end()) throw Error(ErrorCode::OrbitMismatch, "conjugate character is not irreducible");
      const int a = find(t);
      const int b = find(it->second);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, int> orbit_of_root;
  std::vector<KernelOrbit> orbits;
  for (int t = 0; t < rn; ++t) {
    const int root = find(t);
    auto [it, inserted] = orbit_of_root.emplace(root, static_cast<int>(orbits.size()));
    if (inserted) orbits.push_back({{}, n_table.degrees[static_cast<std::size_t>(t)]});
    orbits[static_cast<std::size_t>(it->second)].members.push_back(t);
  }
  return orbits;
}

ComponentDecomposition decompose_components(const McKayGraph& graph, const CharacterTable& ct) {
  ComponentDecomposition out;
  out.kernel = std::make_shared<const Subgroup>(kernel_of_character(ct, graph.rho));
  out.kernel_table = std::make_shared<const CharacterTable>(compute_character_table(out.kernel->induced()));
  out.orbits = conjugation_orbits(ct, *out.kernel, *out.kernel_table);
  std::vector<int> orbit_of(static_cast<std::size_t>(out.kernel_table->r));
  for (std::size_t o = 0; o < out.orbits.size(); ++o) {
    for (int t : out.orbits[o].members) orbit_of[static_cast<std::size_t>(t)] = static_cast<int>(o);
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out.restrictions.push_back(restriction_multiplicities(ct, *out.kernel, *out.kernel_table, v));
  }
  std::vector<char> orbit_used(out.orbits.size(), 0);
  for (const auto& verts : weak_components(graph.adjacency)) {
    Component c;
    c.vertices = verts;
    c.adjacency = induced_subgraph(graph.adjacency, verts);
    c.principal = std::find(verts.begin(), verts.end(), graph.trivial_vertex) != verts.end();
    for (int v : verts) {
      const auto& m = out.restrictions[static_cast<std::size_t>(v)];
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (m[t] == 0) continue;
        const int o = orbit_of[t];
        if (c.orbit < 0) c.orbit = o;
        if (c.orbit != o) throw Error(ErrorCode::OrbitMismatch, "a component restricts to several orbits");
      }
    }
    if (c.orbit < 0 || orbit_used[static_cast<std::size_t>(c.orbit)]) {
      throw Error(ErrorCode::OrbitMismatch, "two components restrict to the same orbit");
    }
    orbit_used[static_cast<std::size_t>(c.orbit)] = 1;
    out.components.push_back(std::move(c));
  }
  if (out.components.size() != out.orbits.size()) {
    throw Error(ErrorCode::OrbitMismatch, std::to_string(out.components.size()) + " components but " +
                                              std::to_string(out.orbits.size()) + " orbits");
  }
  return out;
}

bool principal_component_isomorphism_check(const ComponentDecomposition& decomp, const McKayGraph& graph,
                                           const CharacterTable& ct) {
  const auto& cd = *ct.classes;
  const Quotient q = quotient_group(ct.group, *decomp.kernel);
  const CharacterTable qt = compute_character_table(q.group);
  const auto& qcd = *qt.classes;
  std::vector<int> preimage(static_cast<std::size_t>(q.group->order()), -1);
  for (int x = ct.group->order() - 1; x >= 0; --x) preimage[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(x)])] = x;
  std::vector<RootSum> values;
  for (int c = 0; c < qt.r; ++c) {
    const int x = preimage[static_cast<std::size_t>(qcd.representatives[static_cast<std::size_t>(c)])];
    const RootSum& v = graph.rho.values[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(x)])];
    const int step = v.order() / qt.exponent();
    std::vector<RootSum::Term> terms;
    for (const auto& [j, m] : v.terms()) {
      if (j % step != 0) return false;
      terms.emplace_back(j / step, m);
    }
    values.emplace_back(qt.exponent(), std::move(terms));
  }
  auto m = decompose(qt, values);
  const McKayGraph qg = build_mckay_graph(qt, Character{std::move(values), std::move(m)});

  const Component* principal = nullptr;
  for (const auto& c : decomp.components) {
    if (c.principal) principal = &c;
  }
  if (!principal) return false;
  auto dims_of = [&graph](const Component& c) {
    std::vector<std::int64_t> d;
    for (int v : c.vertices) d.push_back(graph.dims[static_cast<std::size_t>(v)]);
    return d;
  };
  const auto pd = dims_of(*principal);
  if (!isomorphic(principal->adjacency, qg.adjacency, pd, qg.dims)) return false;
  for (const auto& c : decomp.components) {
    const auto d = dims_of(c);
    if (std::find(d.begin(), d.end(), 1) == d.end()) continue;
    if (!isomorphic(c.adjacency, principal->adjacency, d, pd)) return false;
  }
  return true;
}

}  // namespace mckay
