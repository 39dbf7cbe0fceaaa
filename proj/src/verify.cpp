#include "mckay/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/graph_iso.hpp"

namespace mckay {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
CheckRecord timed(F&& body) {
  const auto start = Clock::now();
  CheckRecord r = body();
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string big(const BigInt& x) { return x.str(); }

std::vector<std::int64_t> dims_of(const McKayGraph& g, const std::vector<int>& verts) {
  std::vector<std::int64_t> d;
  for (int v : verts) d.push_back(g.dims[static_cast<std::size_t>(v)]);
  return d;
}

// sum over classes of rho(g)^k, as an integer.
BigInt power_sum(const Fixture& f, int k) {
  CycInt total;
  for (const auto& v : f.rho.cyc_values()) {
    CycInt p(1);
    for (int i = 0; i < k; ++i) p *= v;
    total += p;
  }
  const auto n = total.as_integer();
  if (!n) throw Error(ErrorCode::InternalNonInteger, "power sum of rho is not rational");
  return *n;
}

// Closed walks of length k, counted by propagating walk vectors along adjacency lists.
BigInt closed_walks(const IntMatrix& adj, int k) {
  const auto n = static_cast<int>(adj.rows());
  std::vector<std::vector<std::pair<int, std::int64_t>>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adj(i, j) != 0) out[static_cast<std::size_t>(i)].emplace_back(j, adj(i, j));
    }
  }
  BigInt total = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<BigInt> walk(static_cast<std::size_t>(n), 0);
    walk[static_cast<std::size_t>(s)] = 1;
    for (int step = 0; step < k; ++step) {
      std::vector<BigInt> next(static_cast<std::size_t>(n), 0);
      for (int u = 0; u < n; ++u) {
        const BigInt& w = walk[static_cast<std::size_t>(u)];
        if (w == 0) continue;
        for (const auto& [v, m] : out[static_cast<std::size_t>(u)]) next[static_cast<std::size_t>(v)] += w * m;
      }
      walk = std::move(next);
    }
    total += walk[static_cast<std::size_t>(s)];
  }
  return total;
}

// dim End_{C(x)}(rho restricted) = (1/|C|) sum_{c in C} rho(c) rho(c^-1).
std::int64_t centralizer_endo(const Fixture& f, int k) {
  const auto& cd = *f.table->classes;
  const auto& centralizer = cd.centralizers[static_cast<std::size_t>(k)];
  std::vector<std::int64_t> per_class(static_cast<std::size_t>(cd.num_classes()), 0);
  for (int c : centralizer) ++per_class[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(c)])];
  RootAccumulator acc(f.table->exponent());
  for (int j = 0; j < cd.num_classes(); ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (per_class[uj] == 0) continue;
    acc.add_product(per_class[uj], f.rho.values[uj], f.rho.values[static_cast<std::size_t>(cd.inverse_class[uj])]);
  }
  const auto total = acc.as_integer();
  const auto size = static_cast<std::int64_t>(centralizer.size());
  if (!total || *total % size != 0) throw Error(ErrorCode::InternalNonInteger, "centralizer inner product");
  return static_cast<std::int64_t>(*total / size);
}

bool is_power_of(std::int64_t m, std::int64_t base, int& exponent) {
  exponent = 0;
  if (m < 1) return false;
  while (m % base == 0) {
    m /= base;
    ++exponent;
  }
  return m == 1;
}

bool squares_central(const FiniteGroup& g, const ConjugacyData& cd) {
  std::vector<char> central(static_cast<std::size_t>(g.order()), 0);
  for (int z : cd.center) central[static_cast<std::size_t>(z)] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (!central[static_cast<std::size_t>(g.mul(x, x))]) return false;
  }
  return true;
}

// Hedgehog spine count, treating the four-spined star under its Dynkin name too.
std::optional<int> hedgehog_spines(const ShapeLabel& l) {
  if (l.kind == ShapeKind::Hedgehog) return l.n;
  if (l.kind == ShapeKind::AffineD && l.hedgehog_alias) return 4;
  return std::nullopt;
}

CheckRecord violation(CheckRecord r, const std::string& what) {
  r.pass = false;
  r.observed = "ClassificationViolated: " + what;
  return r;
}

// Vertex dimensions divided by the gcd over their component.
std::vector<std::int64_t> normalized_dims(const IntMatrix& adj, const std::vector<std::int64_t>& dims) {
  std::vector<std::int64_t> out = dims;
  for (const auto& verts : weak_components(adj)) {
    std::int64_t g = 0;
    for (int v : verts) g = std::gcd(g, dims[static_cast<std::size_t>(v)]);
    for (int v : verts) out[static_cast<std::size_t>(v)] /= g;
  }
  return out;
}

int subgroup_order(const Fixture& f) { return kernel_of_character(*f.table, f.rho).order(); }

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

Fixture make_fixture(const std::string& spec, const std::string& selector, const BuildOptions& options) {
  Fixture f;
  f.spec = spec;
  f.selector = selector;
  f.group = build_group(spec, options);
  f.table = std::make_shared<const CharacterTable>(compute_character_table(f.group));
  f.rho = resolve_rho(*f.table, parse_rho_selector(selector));
  f.graph = build_mckay_graph(*f.table, f.rho);
  return f;
}

Fixture with_rho(const Fixture& base, const Character& rho, const std::string& selector) {
  Fixture f;
  f.spec = base.spec;
  f.selector = selector;
  f.group = base.group;
  f.table = base.table;
  f.rho = rho;
  f.graph = build_mckay_graph(*f.table, f.rho);
  return f;
}

std::string describe(const Fixture& f) { return f.spec + " rho=" + f.selector; }

CheckRecord verify_trace_identity(const Fixture& f, int kmax) {
  return timed([&] {
    CheckRecord r{"trace-identity", "sum over classes of rho^k = tr(A^k) = closed walks",
                  describe(f) + " k=1.." + std::to_string(kmax), "", "", true, 0};
    if (kmax > f.table->r) throw Error(ErrorCode::PreconditionViolated, "kmax exceeds the class count");
    std::ostringstream exp, obs;
    for (int k = 1; k <= kmax; ++k) {
      const BigInt chars = power_sum(f, k);
      const BigInt trace = circuit_count(f.graph.adjacency, k);
      const BigInt walks = closed_walks(f.graph.adjacency, k);
      exp << (k > 1 ? " " : "") << big(chars);
      obs << (k > 1 ? " " : "") << big(trace) << "/" << big(walks);
      if (chars != trace || trace != walks) r.pass = false;
    }
    r.expected = exp.str();
    r.observed = obs.str();
    return r;
  });
}

CheckRecord verify_edge_count_identity(const Fixture& f) {
  if (!f.graph.undirected || !f.graph.loopless) {
    throw Error(ErrorCode::PreconditionViolated, "edge count identity needs an undirected loopless graph");
  }
  return timed([&] {
    CheckRecord r{"edge-count", "sum rho(x)^2 = 2 #edges = sum dim End_C(x)(rho)", describe(f), "", "", false, 0};
    const BigInt squares = power_sum(f, 2);
    const std::int64_t edges = undirected_edge_count(f.graph.adjacency);
    std::int64_t endo = 0;
    for (int k = 0; k < f.table->r; ++k) endo += centralizer_endo(f, k);
    r.expected = big(squares);
    r.observed = std::to_string(2 * edges) + "/" + std::to_string(endo);
    r.pass = squares == 2 * edges && endo == 2 * edges;
    if (r.pass && is_tree(f.graph.adjacency)) {
      r.expected += " tree:" + std::to_string(2 * (f.table->r - 1));
      r.pass = 2 * edges == 2 * (f.table->r - 1);
    }
    return r;
  });
}

CheckRecord verify_centralizer_endo(const Fixture& f) {
  if (!is_tree(f.graph.adjacency)) throw Error(ErrorCode::PreconditionViolated, "graph is not a tree");
  return timed([&] {
    CheckRecord r{"centralizer-endo", "dim End_C(x)(rho) = 2 off the center, 1 on it", describe(f), "", "", true, 0};
    const auto& cd = *f.table->classes;
    std::set<int> central(cd.center.begin(), cd.center.end());
    std::vector<std::int64_t> want, got;
    for (int k = 0; k < cd.num_classes(); ++k) {
      want.push_back(central.count(cd.representatives[static_cast<std::size_t>(k)]) ? 1 : 2);
      got.push_back(centralizer_endo(f, k));
    }
    r.expected = join(want);
    r.observed = join(got);
    r.pass = want == got;
    return r;
  });
}

CheckRecord verify_sum_of_squares(const Fixture& f, const ComponentDecomposition& decomp) {
  return timed([&] {
    CheckRecord r{"sum-of-squares", "per component sum deg^2 = |G/N| s^2 |T|", describe(f), "", "", true, 0};
    const std::int64_t index = f.group->order() / decomp.kernel->order();
    std::vector<std::int64_t> want, got;
    for (const auto& c : decomp.components) {
      std::int64_t s = 0;
      for (auto d : dims_of(f.graph, c.vertices)) s += d * d;
      const auto& orbit = decomp.orbits[static_cast<std::size_t>(c.orbit)];
      want.push_back(index * orbit.degree * orbit.degree * static_cast<std::int64_t>(orbit.members.size()));
      got.push_back(s);
    }
    r.expected = join(want);
    r.observed = join(got);
    r.pass = want == got;
    return r;
  });
}

CheckRecord verify_bipartite_criterion(const Fixture& f) {
  if (!is_irreducible(f.rho) || !is_faithful(*f.table, f.rho) || !is_self_dual(*f.table, f.rho)) {
    throw Error(ErrorCode::PreconditionViolated, "rho must be irreducible, faithful and self-dual");
  }
  return timed([&] {
    CheckRecord r{"bipartite", "|Z| <= 2, and bipartite iff |Z| = 2", describe(f), "", "", false, 0};
    const auto z = f.table->classes->center.size();
    const bool bip = bipartition(f.graph.adjacency).has_value();
    r.expected = "|Z|<=2, bipartite=" + std::string(z == 2 ? "yes" : "no");
    r.observed = "|Z|=" + std::to_string(z) + ", bipartite=" + (bip ? "yes" : "no");
    r.pass = z <= 2 && bip == (z == 2);
    return r;
  });
}

CheckRecord verify_tree_theorem(const Fixture& f) {
  if (!is_tree(f.graph.adjacency)) throw Error(ErrorCode::PreconditionViolated, "graph is not a tree");
  return timed([&] {
    CheckRecord r{"tree-theorem", "tree McKay graphs are ADE pairs or extraspecial hedgehogs", describe(f),
                  "ADE with deg 2, or Hedgehog(4^n) with deg 2^n", "", false, 0};
    const auto& t = *f.table;
    if (!is_irreducible(f.rho)) return violation(r, "rho reducible");
    if (!is_faithful(t, f.rho)) return violation(r, "rho not faithful");
    if (!is_self_dual(t, f.rho)) return violation(r, "rho not self-dual");
    const ShapeLabel shape = classify_component(f.graph.adjacency);
    const std::int64_t deg = f.rho.degree();
    const std::int64_t order = f.group->order();
    if (deg == 2 && shape.is_dynkin() && shape.dynkin_order == order) {
      r.observed = "ADE " + shape.to_string() + " |G|=" + std::to_string(order);
      r.pass = true;
      return r;
    }
    if (auto spines = hedgehog_spines(shape)) {
      int n = 0;
      const auto& cd = *t.classes;
      if (is_power_of(*spines, 4, n) && deg == (std::int64_t{1} << n) && cd.center.size() == 2 &&
          order == (std::int64_t{1} << (1 + 2 * n)) && squares_central(*f.group, cd)) {
        r.observed = "extraspecial Hedgehog(" + std::to_string(*spines) + ") deg " + std::to_string(deg);
        r.pass = true;
        return r;
      }
    }
    return violation(r, shape.to_string() + " with deg " + std::to_string(deg) + " |G|=" + std::to_string(order));
  });
}

CheckRecord verify_forest_theorem(const Fixture& f) {
  if (!is_forest(f.graph.adjacency)) throw Error(ErrorCode::PreconditionViolated, "graph is not a forest");
  return timed([&] {
    CheckRecord r{"forest-theorem", "forest McKay graphs have Dynkin or hedgehog components", describe(f),
                  "irreducible self-dual rho; D/E/Hedgehog(4^n) components; |G/N| divisible by |G'_T|", "", false, 0};
    const auto& t = *f.table;
    if (!is_irreducible(f.rho)) return violation(r, "rho reducible");
    if (!is_self_dual(t, f.rho)) return violation(r, "rho not self-dual");
    const std::int64_t index = f.group->order() / subgroup_order(f);
    std::vector<IntMatrix> parts;
    std::vector<std::vector<std::int64_t>> part_dims;
    bool big_hedgehog = false;
    std::ostringstream shapes;
    for (const auto& verts : weak_components(f.graph.adjacency)) {
      parts.push_back(induced_subgraph(f.graph.adjacency, verts));
      part_dims.push_back(dims_of(f.graph, verts));
      const ShapeLabel l = classify_component(parts.back());
      shapes << (shapes.tellp() > 0 ? " + " : "") << l.to_string();
      if (auto spines = hedgehog_spines(l)) {
        int n = 0;
        if (!is_power_of(*spines, 4, n)) return violation(r, "hedgehog with " + std::to_string(*spines) + " spines");
        if (n != 1) big_hedgehog = true;
      } else if (!l.is_dynkin()) {
        return violation(r, "component " + l.to_string());
      }
      if (l.is_dynkin() && index % *l.dynkin_order != 0) {
        return violation(r, "|G/N|=" + std::to_string(index) + " not divisible by " + std::to_string(*l.dynkin_order));
      }
    }
    if (big_hedgehog) {
      for (const auto& p : parts) {
        if (!isomorphic(p, parts.front())) return violation(r, "non-isomorphic components beside a hedgehog");
      }
    }
    r.observed = shapes.str() + " |G/N|=" + std::to_string(index);
    r.pass = true;
    return r;
  });
}

ConstructionData prepare_construction(const Construction& c) {
  ConstructionData out;
  const auto g_spec = parse_group_spec(c.group);
  const auto k_spec = parse_group_spec(c.kernel);
  out.base = build_group(*g_spec);
  const GroupPtr h_model = build_group(c.subgroup);
  const auto cd = conjugacy(*out.base);
  const auto stats = order_statistics(*h_model);
  const auto actions = transitive_actions(*out.base, *k_spec);
  for (auto& h : normal_subgroups_of_order(out.base, cd, h_model->order())) {
    if (order_statistics(*h.induced()) != stats) continue;
    const std::vector<int> elems(h.elements().begin(), h.elements().end());
    for (const auto& a : actions) {
      if (a.kernel != elems) continue;
      SemidirectSpec s{g_spec, k_spec, a.images};
      out.h = std::make_shared<const Subgroup>(std::move(h));
      out.spec = to_string(GroupSpec{s});
      return out;
    }
  }
  throw Error(ErrorCode::PreconditionViolated,
              "no normal " + c.subgroup + " in " + c.group + " is the kernel of a transitive action on " + c.kernel);
}

CheckRecord verify_construction(const Construction& c) {
  return timed([&] {
    CheckRecord r{"construction", "Gamma(K x| G, rho) = Gamma(G, rho) + Gamma(H, rho|H)",
                  c.group + " H=" + c.subgroup + " K=" + c.kernel, "", "", false, 0};
    const ConstructionData data = prepare_construction(c);
    const Fixture big = make_fixture(data.spec, "pullback:faithful-selfdual-min");
    const Fixture g = make_fixture(c.group, "faithful-selfdual-min");
    const CharacterTable h_table = compute_character_table(data.h->induced());
    const Character rho_h = restrict_character(*g.table, g.rho, *data.h, h_table);
    const McKayGraph h_graph = build_mckay_graph(h_table, rho_h);

    const auto n1 = g.graph.num_vertices();
    const auto n2 = h_graph.num_vertices();
    IntMatrix target = IntMatrix::Zero(n1 + n2, n1 + n2);
    target.topLeftCorner(n1, n1) = g.graph.adjacency;
    target.bottomRightCorner(n2, n2) = h_graph.adjacency;
    std::vector<std::int64_t> dims = g.graph.dims;
    dims.insert(dims.end(), h_graph.dims.begin(), h_graph.dims.end());

    r.inputs += " G'=" + data.spec;
    r.expected = classify_component(g.graph.adjacency).to_string() + " + " +
                 classify_component(h_graph.adjacency).to_string();
    std::ostringstream obs;
    for (const auto& verts : weak_components(big.graph.adjacency)) {
      obs << (obs.tellp() > 0 ? " + " : "") << classify_component(induced_subgraph(big.graph.adjacency, verts)).to_string();
    }
    r.observed = obs.str();
    r.pass = isomorphic(big.graph.adjacency, target, normalized_dims(big.graph.adjacency, big.graph.dims),
                        normalized_dims(target, dims));
    return r;
  });
}

CheckRecord verify_normal_tower() {
  return timed([] {
    CheckRecord r{"normal-tower", "BDih_2 < BT < BO normal, quotients C_2, S_3, C_3", "binary:O",
                  "|BO/BT|=2 |BO/BDih_2|=6 nonabelian |BT/BDih_2|=3", "", false, 0};
    const GroupPtr bo = build_group("binary:O");
    const auto cd = conjugacy(*bo);
    auto find = [&](const std::string& spec) {
      const GroupPtr model = build_group(spec);
      for (auto& s : normal_subgroups_of_order(bo, cd, model->order())) {
        if (order_statistics(*s.induced()) == order_statistics(*model)) return s;
      }
      throw Error(ErrorCode::SubgroupNotFound, spec + " in binary:O");
    };
    const Subgroup bt = find("binary:T");
    const Subgroup q8 = find("bindihedral:2");
    const Quotient bo_bt = quotient_group(bo, bt);
    const Quotient bo_q8 = quotient_group(bo, q8);
    std::vector<int> inner;
    for (int x : q8.elements()) {
      if (!bt.contains(x)) throw Error(ErrorCode::SubgroupNotFound, "BDih_2 inside BT");
      inner.push_back(bt.from_parent(x));
    }
    const Subgroup q8_in_bt(bt.induced(), inner);
    const Quotient bt_q8 = quotient_group(bt.induced(), q8_in_bt);
    std::ostringstream obs;
    obs << "|BO/BT|=" << bo_bt.group->order() << " |BO/BDih_2|=" << bo_q8.group->order()
        << (is_abelian(*bo_q8.group) ? " abelian" : " nonabelian") << " |BT/BDih_2|=" << bt_q8.group->order();
    r.observed = obs.str();
    r.pass = bt.normal() && q8.normal() && q8_in_bt.normal() && bo_bt.group->order() == 2 &&
             bo_q8.group->order() == 6 && !is_abelian(*bo_q8.group) && bt_q8.group->order() == 3;
    return r;
  });
}

CheckRecord verify_shape(const Fixture& f, const ShapeLabel& expected) {
  return timed([&] {
    CheckRecord r{"shape", "McKay graph shape", describe(f), expected.to_string(), "", false, 0};
    const ShapeLabel got = classify_component(f.graph.adjacency);
    auto dims = f.graph.dims;
    std::sort(dims.begin(), dims.end());
    r.observed = got.to_string() + " dims " + join(dims) + " |G|=" + std::to_string(f.group->order());
    r.pass = got == expected;
    if (r.pass && expected.is_dynkin()) {
      r.expected += " |G|=" + std::to_string(*expected.dynkin_order);
      r.pass = got.dynkin_order == f.group->order();
    }
    return r;
  });
}

CheckRecord verify_spectrum(const Fixture& f) {
  CheckRecord r = verify_trace_identity(f, f.table->r);
  r.id = "spectrum";
  r.anchor = "tr(A^k) matches the character power sums for k = 1..r";
  return r;
}

CheckRecord verify_dual(const Fixture& f) {
  return timed([&] {
    CheckRecord r{"dual", "Gamma(G, rho*) is the transpose; undirected iff self-dual", describe(f), "", "", false, 0};
    const bool transpose = dual_check(*f.table, f.rho);
    const bool self_dual = is_self_dual(*f.table, f.rho);
    r.expected = std::string("transpose, undirected=") + (self_dual ? "yes" : "no");
    r.observed = std::string(transpose ? "transpose" : "mismatch") + ", undirected=" + (f.graph.undirected ? "yes" : "no");
    r.pass = transpose && f.graph.undirected == self_dual && f.graph.undirected == is_symmetric(f.graph.adjacency);
    return r;
  });
}

CheckRecord verify_principal_component(const Fixture& f) {
  return timed([&] {
    CheckRecord r{"components", "components match G-orbits on Irr(Ker rho); principal one is Gamma(G/N)",
                  describe(f), "", "", false, 0};
    const auto decomp = decompose_components(f.graph, *f.table);
    const bool faithful = is_faithful(*f.table, f.rho);
    const auto weak = weak_components(f.graph.adjacency);
    const auto strong = strong_components(f.graph.adjacency);
    const bool principal = principal_component_isomorphism_check(decomp, f.graph, *f.table);
    r.expected = std::to_string(decomp.orbits.size()) + " components, strong = weak, principal isomorphic";
    r.observed = std::to_string(decomp.components.size()) + " components, " +
                 (strong == weak ? "strong = weak" : "strong != weak") + ", " +
                 (principal ? "principal isomorphic" : "principal differs");
    r.pass = principal && strong == weak && decomp.components.size() == decomp.orbits.size() &&
             faithful == (weak.size() == 1);
    return r;
  });
}

CheckRecord verify_frobenius_perron(const Fixture& f) {
  return timed([&] {
    CheckRecord r{"frobenius-perron", "A deg = deg(rho) deg, with Dynkin markings", describe(f), "", "", true, 0};
    IntVector d(f.graph.num_vertices());
    for (int i = 0; i < f.graph.num_vertices(); ++i) d(i) = f.graph.dims[static_cast<std::size_t>(i)];
    const IntVector lhs = f.graph.adjacency * d;
    r.pass = lhs == f.rho.degree() * d && (f.graph.adjacency.transpose() * d) == f.rho.degree() * d;
    r.expected = "radius " + std::to_string(f.rho.degree());
    std::ostringstream obs;
    obs << (r.pass ? "eigenvector" : "not an eigenvector");
    for (const auto& verts : weak_components(f.graph.adjacency)) {
      const IntMatrix part = induced_subgraph(f.graph.adjacency, verts);
      const PfCheck pf = pf_integer_vector_check(part, dims_of(f.graph, verts), f.rho.degree());
      if (!pf.pass) r.pass = false;
      if (pf.a) obs << " a=" << *pf.a;
    }
    r.observed = obs.str();
    return r;
  });
}

CheckRecord verify_orthogonality(const Fixture& f) {
  return timed([&] {
    CheckRecord r{"orthogonality", "row and column orthogonality of the character table", f.spec, "", "", true, 0};
    const auto& t = *f.table;
    const auto& cd = *t.classes;
    for (int i = 0; i < t.r && r.pass; ++i) {
      for (int j = 0; j < t.r; ++j) {
        if (inner_product(t, t.irreducible(i).values, t.irreducible(j).values) != (i == j ? 1 : 0)) {
          r.pass = false;
          break;
        }
      }
    }
    const bool rows = r.pass;
    for (int k = 0; k < t.r && r.pass; ++k) {
      for (int l = 0; l < t.r; ++l) {
        CycInt s;
        for (int i = 0; i < t.r; ++i) {
          s += t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)].galois_inverse();
        }
        const std::int64_t want = k == l ? static_cast<std::int64_t>(cd.centralizers[static_cast<std::size_t>(k)].size()) : 0;
        if (!(s == CycInt(want))) {
          r.pass = false;
          break;
        }
      }
    }
    r.expected = "rows orthonormal, columns |C(g)|";
    r.observed = std::string(rows ? "rows ok" : "rows fail") + ", " + (r.pass ? "columns ok" : "columns fail");
    return r;
  });
}

}  // namespace mckay
