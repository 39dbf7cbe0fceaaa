#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mckay/error.hpp"
#include "mckay/graph_iso.hpp"
#include "mckay/verify.hpp"

namespace mckay {

namespace {

struct Case {
  std::string name;
  std::function<std::vector<CheckRecord>()> run;
};

std::shared_ptr<const Fixture> cached(const std::string& spec, const std::string& selector,
                                      const BuildOptions& options) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Fixture>> cache;
  const std::string key = spec + "|" + selector + "|" + std::to_string(options.order_cap);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const Fixture>(make_fixture(spec, selector, options));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(f)).first->second;
}

CheckRecord tagged(std::string family, CheckRecord r) {
  r.id = family + "." + r.id;
  return r;
}

CheckRecord simple(std::string id, std::string anchor, std::string inputs, std::string expected, std::string observed) {
  const bool pass = expected == observed;
  return {std::move(id), std::move(anchor), std::move(inputs), std::move(expected), std::move(observed), pass, 0};
}

std::vector<CheckRecord> run_cases(const std::vector<Case>& cases, int jobs) {
  std::vector<std::vector<CheckRecord>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i].run();
      } catch (const std::exception& e) {
        results[i].push_back({cases[i].name + ".error", "case completed", cases[i].name, "no error", e.what(), false, 0});
      }
    }
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckRecord> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return out;
}

ShapeLabel label(ShapeKind kind, int n) {
  ShapeLabel l;
  l.kind = kind;
  l.n = n;
  if (kind == ShapeKind::AffineD) l.dynkin_order = 4 * (n - 2);
  if (kind == ShapeKind::AffineE) l.dynkin_order = n == 6 ? 24 : n == 7 ? 48 : 120;
  return l;
}

CheckRecord table_time(const std::string& family, const std::string& spec, double budget_ms) {
  const auto start = std::chrono::steady_clock::now();
  const CharacterTable t = compute_character_table(build_group(spec));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string budget = "under " + std::to_string(static_cast<int>(budget_ms / 1000)) + " s";
  return {family + ".table-time", "character table within the time budget", spec, budget,
          ms < budget_ms ? budget : "over budget", ms < budget_ms, ms};
}

std::int64_t loop_count(const IntMatrix& a) { return (a.diagonal().array() != 0).count(); }

// ADE, dihedral and hedgehog fixtures as (family, spec, selector, expected shape).
struct TreeFixture {
  std::string family;
  std::string spec;
  ShapeLabel shape;
  int vertices;
  int order = 0;  // checked when nonzero
};

std::vector<TreeFixture> tree_fixtures() {
  std::vector<TreeFixture> out;
  for (int n = 2; n <= 6; ++n) out.push_back({"ade", "bindihedral:" + std::to_string(n), label(ShapeKind::AffineD, n + 2), n + 3, 4 * n});
  out.push_back({"ade", "binary:T", label(ShapeKind::AffineE, 6), 7, 24});
  out.push_back({"ade", "binary:O", label(ShapeKind::AffineE, 7), 8, 48});
  out.push_back({"ade", "binary:I", label(ShapeKind::AffineE, 8), 9, 120});
  for (int n = 4; n <= 12; n += 2) {
    out.push_back({"dihedral", "dihedral:" + std::to_string(n), label(ShapeKind::AffineD, n / 2 + 2), n / 2 + 3});
  }
  for (int n = 3; n <= 9; n += 2) {
    out.push_back({"dihedral", "dihedral:" + std::to_string(n), label(ShapeKind::DihedralOddTail, (n + 3) / 2), (n + 3) / 2});
  }
  for (int n = 0; n <= 4; ++n) {
    for (const char* sign : {"+", "-"}) {
      const int spines = 1 << (2 * n);
      const ShapeLabel l = n == 1 ? label(ShapeKind::AffineD, 4) : label(ShapeKind::Hedgehog, spines);
      out.push_back({"hedgehog", std::string("extraspecial:") + sign + ":" + std::to_string(n), l, spines + 1, 2 << (2 * n)});
    }
  }
  return out;
}

std::vector<CheckRecord> tree_case(const TreeFixture& t, const BuildOptions& options) {
  const auto f = cached(t.spec, "faithful-selfdual-min", options);
  std::vector<CheckRecord> out;
  out.push_back(tagged(t.family, verify_shape(*f, t.shape)));
  out.push_back(simple(t.family + ".vertices", "vertex count", describe(*f), std::to_string(t.vertices),
                       std::to_string(f->graph.num_vertices())));
  if (t.shape.kind == ShapeKind::DihedralOddTail) {
    out.push_back(simple(t.family + ".loops", "exactly one loop", describe(*f), "1", std::to_string(loop_count(f->graph.adjacency))));
    return out;
  }
  out.push_back(tagged(t.family, verify_tree_theorem(*f)));
  if (t.spec == "binary:T") {
    auto d = f->graph.dims;
    std::sort(d.begin(), d.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    out.push_back(simple("ade.labels", "degree labels", describe(*f), "1,1,1,2,2,2,3", os.str()));
  }
  if (t.order > 0) {
    out.push_back(simple(t.family + ".order", "group order", t.spec, std::to_string(t.order), std::to_string(f->group->order())));
  }
  if (t.family == "hedgehog") {
    const std::int64_t centre = f->rho.degree();
    std::int64_t hub = -1;
    for (int v = 0; v < f->graph.num_vertices(); ++v) {
      std::int64_t deg = 0;
      for (int u = 0; u < f->graph.num_vertices(); ++u) deg += u == v ? 0 : f->graph.adjacency(v, u);
      if (deg == f->graph.num_vertices() - 1) hub = f->graph.dims[static_cast<std::size_t>(v)];
    }
    out.push_back(simple("hedgehog.center", "center vertex dimension 2^n", describe(*f), std::to_string(centre),
                         std::to_string(hub)));
  }
  return out;
}

std::vector<CheckRecord> identity_case(const std::string& spec, const std::string& selector, const BuildOptions& options) {
  const auto f = cached(spec, selector, options);
  std::vector<CheckRecord> out;
  const int r = f->table->r;
  out.push_back(tagged("identity", verify_trace_identity(*f, std::min(r, 6))));
  if (f->graph.undirected && f->graph.loopless) out.push_back(tagged("identity", verify_edge_count_identity(*f)));
  if (is_tree(f->graph.adjacency)) out.push_back(tagged("identity", verify_centralizer_endo(*f)));
  if (r <= 12) out.push_back(tagged("identity", verify_spectrum(*f)));
  out.push_back(tagged("identity", verify_frobenius_perron(*f)));
  out.push_back(tagged("identity", verify_dual(*f)));
  out.push_back(tagged("identity", verify_principal_component(*f)));
  out.push_back(tagged("property", verify_orthogonality(*f)));
  const auto& t = *f->table;
  if (is_irreducible(f->rho) && is_faithful(t, f->rho) && is_self_dual(t, f->rho)) {
    out.push_back(tagged("bipartite", verify_bipartite_criterion(*f)));
  }
  return out;
}

struct ForestFixture {
  Construction construction;
  std::vector<ShapeLabel> shapes;  // principal component first
  std::vector<int> vertices;
};

std::vector<ForestFixture> forest_fixtures() {
  return {
      {{"dihedral:8", "dihedral:4", "cyclic:3"}, {label(ShapeKind::AffineD, 6), label(ShapeKind::AffineD, 4)}, {7, 5}},
      {{"dihedral:12", "dihedral:6", "cyclic:3"}, {label(ShapeKind::AffineD, 8), label(ShapeKind::AffineD, 5)}, {9, 6}},
      {{"binary:T", "bindihedral:2", "elemab:2:2"}, {label(ShapeKind::AffineE, 6), label(ShapeKind::AffineD, 4)}, {7, 5}},
      {{"binary:O", "binary:T", "cyclic:3"}, {label(ShapeKind::AffineE, 7), label(ShapeKind::AffineE, 6)}, {8, 7}},
      {{"binary:O", "bindihedral:2", "elemab:2:2"}, {label(ShapeKind::AffineE, 7), label(ShapeKind::AffineD, 4)}, {8, 5}},
  };
}

std::vector<CheckRecord> forest_case(const ForestFixture& ff, const BuildOptions& options) {
  const ConstructionData data = prepare_construction(ff.construction);
  const auto f = cached(data.spec, "pullback:faithful-selfdual-min", options);
  std::vector<CheckRecord> out;
  const auto decomp = decompose_components(f->graph, *f->table);
  std::vector<std::string> want, got;
  for (const auto& s : ff.shapes) want.push_back(s.to_string());
  std::vector<int> want_v = ff.vertices, got_v;
  for (const auto& c : decomp.components) {
    got.push_back(classify_component(c.adjacency).to_string());
    got_v.push_back(static_cast<int>(c.vertices.size()));
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " + ") + x;
    return s;
  };
  auto join_i = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  out.push_back(simple("construction.orbits", "component count = |Irr(N)//G|", describe(*f),
                       std::to_string(decomp.orbits.size()), std::to_string(decomp.components.size())));
  out.push_back(simple("construction.vertices", "component sizes", describe(*f), join_i(want_v), join_i(got_v)));
  out.push_back(simple("construction.shapes", "component shapes", describe(*f), join(want), join(got)));
  out.push_back(tagged("construction", verify_construction(ff.construction)));
  out.push_back(tagged("construction", verify_sum_of_squares(*f, decomp)));
  out.push_back(tagged("construction", verify_principal_component(*f)));
  if (is_forest(f->graph.adjacency)) {
    out.push_back(tagged("construction", verify_forest_theorem(*f)));
  } else {
    out.push_back(simple("construction.forest-theorem", "graph is a forest", describe(*f), "forest", "not a forest"));
  }
  return out;
}

// Products with a trivial second factor: n copies of the same tree.
std::vector<CheckRecord> copies_case(const std::string& spec, int copies, const BuildOptions& options) {
  const auto f = cached(spec, "pullback:faithful-selfdual-min", options);
  std::vector<CheckRecord> out;
  const auto comps = weak_components(f->graph.adjacency);
  bool same = true;
  const IntMatrix first = induced_subgraph(f->graph.adjacency, comps.front());
  for (const auto& c : comps) same = same && isomorphic(induced_subgraph(f->graph.adjacency, c), first);
  out.push_back(simple("forest.copies", "isomorphic copies of one tree", describe(*f),
                       std::to_string(copies) + " isomorphic", std::to_string(comps.size()) + (same ? " isomorphic" : " distinct")));
  out.push_back(tagged("forest", verify_principal_component(*f)));
  out.push_back(tagged("forest", verify_forest_theorem(*f)));
  return out;
}

std::vector<Case> trees_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (const auto& t : tree_fixtures()) cases.push_back({t.spec, [t, o] { return tree_case(t, o.build); }});
  cases.push_back({"binary:I", [] { return std::vector<CheckRecord>{table_time("ade", "binary:I", 30000)}; }});
  cases.push_back({"extraspecial:+:4", [] { return std::vector<CheckRecord>{table_time("hedgehog", "extraspecial:+:4", 60000)}; }});
  return cases;
}

std::vector<Case> identities_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (const auto& t : tree_fixtures()) {
    cases.push_back({t.spec, [t, o] { return identity_case(t.spec, "faithful-selfdual-min", o.build); }});
  }
  const std::vector<std::pair<std::string, std::string>> extra = {
      {"cyclic:2", "irrep:1"},
      {"cyclic:5", "irrep:1"},
      {"cyclic:5", "charvec:0,1,1,1,1"},
      {"dihedral:3", "irrep:2"},
      {"product(binary:T,cyclic:3)", "pullback:faithful-selfdual-min"},
      {"semidirect(dihedral:8,cyclic:3)", "pullback:faithful-selfdual-min"},
  };
  for (const auto& [spec, sel] : extra) {
    cases.push_back({spec, [spec, sel, o] {
                       auto out = identity_case(spec, sel, o.build);
                       for (auto& r : out) {
                         if (r.id.starts_with("identity.")) r.id = "extra." + r.id.substr(9);
                       }
                       return out;
                     }});
  }
  cases.push_back({"tower", [] { return std::vector<CheckRecord>{tagged("tower", verify_normal_tower())}; }});
  cases.push_back({"ring", [] { return std::vector<CheckRecord>{tagged("property", property_ring_axioms(10000, 0x5eed))}; }});
  cases.push_back({"graph-aux", [] { return std::vector<CheckRecord>{tagged("property", property_graph_aux(10))}; }});
  return cases;
}

std::vector<Case> forests_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (const auto& ff : forest_fixtures()) {
    cases.push_back({ff.construction.group + "/" + ff.construction.kernel, [ff, o] { return forest_case(ff, o.build); }});
  }
  cases.push_back({"product(extraspecial:+:2,cyclic:2)", [o] { return copies_case("product(extraspecial:+:2,cyclic:2)", 2, o.build); }});
  cases.push_back({"product(binary:T,cyclic:3)", [o] { return copies_case("product(binary:T,cyclic:3)", 3, o.build); }});
  return cases;
}

std::vector<CheckRecord> sweep_group(const std::string& spec, const BuildOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  const GroupPtr g = build_group(spec, options);
  auto table = std::make_shared<const CharacterTable>(compute_character_table(g));
  std::vector<std::pair<std::string, Character>> rhos;
  for (int i = 0; i < table->r; ++i) {
    if (is_self_dual(*table, table->irreducible(i))) rhos.emplace_back("irrep:" + std::to_string(i), table->irreducible(i));
  }
  // Reducible self-dual sums of two irreducibles, for small tables.
  if (table->r <= 12) {
    for (int i = 0; i < table->r; ++i) {
      for (int j = i; j < table->r; ++j) {
        std::vector<std::int64_t> m(static_cast<std::size_t>(table->r), 0);
        ++m[static_cast<std::size_t>(i)];
        ++m[static_cast<std::size_t>(j)];
        Character c = character_from_multiplicities(*table, m);
        if (!is_self_dual(*table, c)) continue;
        std::string sel = "charvec:";
        for (std::size_t k = 0; k < m.size(); ++k) sel += (k ? "," : "") + std::to_string(m[k]);
        rhos.emplace_back(sel, std::move(c));
      }
    }
  }
  int trees = 0, forests = 0;
  for (const auto& [sel, rho] : rhos) {
    Fixture f;
    f.spec = spec;
    f.selector = sel;
    f.group = g;
    f.table = table;
    f.rho = rho;
    f.graph = build_mckay_graph_modular(*table, rho);
    if (!is_forest(f.graph.adjacency)) continue;
    ++forests;
    out.push_back(tagged("sweep", verify_forest_theorem(f)));
    if (is_tree(f.graph.adjacency)) {
      ++trees;
      out.push_back(tagged("sweep", verify_tree_theorem(f)));
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.push_back({"sweep.scan", "every self-dual rho examined", spec, "",
                 std::to_string(rhos.size()) + " self-dual, " + std::to_string(forests) + " forests, " +
                     std::to_string(trees) + " trees",
                 true, ms});
  out.back().expected = out.back().observed;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"trees", "forests", "identities", "sweep", "all"};
  return names;
}

std::vector<std::string> catalog(int max_order) {
  std::vector<std::string> specs;
  auto add = [&](const std::string& s, long order) {
    if (order <= max_order) specs.push_back(s);
  };
  for (int n = 1; n <= 64; ++n) add("cyclic:" + std::to_string(n), n);
  for (int n = 2; n <= 128; ++n) add("dihedral:" + std::to_string(n), 2L * n);
  for (int n = 2; n <= 64; ++n) add("bindihedral:" + std::to_string(n), 4L * n);
  add("binary:T", 24);
  add("binary:O", 48);
  add("binary:I", 120);
  for (int n = 0; n <= 3; ++n) {
    add("extraspecial:+:" + std::to_string(n), 2L << (2 * n));
    add("extraspecial:-:" + std::to_string(n), 2L << (2 * n));
  }
  add("heis:2:1", 8);
  add("heis:2:2", 32);
  add("heis:2:3", 128);
  add("heis:3:1", 27);
  add("heis:3:2", 243);
  add("heis:5:1", 125);
  add("heis:7:1", 343);
  for (int n = 1; n <= 7; ++n) add("elemab:2:" + std::to_string(n), 1L << n);
  for (int n = 1; n <= 3; ++n) add("elemab:3:" + std::to_string(n), n == 1 ? 3 : n == 2 ? 9 : 27);
  add("elemab:5:2", 25);
  add("elemab:7:2", 49);
  for (const char* s : {"product(binary:T,cyclic:2)", "product(binary:T,cyclic:3)", "product(binary:O,cyclic:2)",
                        "product(binary:I,cyclic:2)", "product(extraspecial:+:2,cyclic:2)",
                        "product(extraspecial:-:2,cyclic:3)", "product(dihedral:4,dihedral:3)",
                        "product(bindihedral:3,cyclic:2)", "product(dihedral:5,cyclic:2)",
                        "product(bindihedral:2,bindihedral:2)", "product(binary:T,binary:T)"}) {
    specs.push_back(s);
  }
  for (const char* s : {"semidirect(dihedral:8,cyclic:3)", "semidirect(dihedral:12,cyclic:3)",
                        "semidirect(binary:T,elemab:2:2)", "semidirect(binary:O,cyclic:3)",
                        "semidirect(binary:O,elemab:2:2)", "semidirect(cyclic:2,cyclic:5)", "semidirect(cyclic:4,cyclic:5)",
                        "semidirect(cyclic:3,elemab:2:2)", "semidirect(cyclic:6,cyclic:7)", "semidirect(cyclic:3,elemab:2:3)",
                        "semidirect(dihedral:3,elemab:3:2)", "semidirect(bindihedral:2,elemab:3:2)",
                        "semidirect(binary:T,elemab:3:2)", "semidirect(cyclic:7,elemab:2:3)"}) {
    specs.push_back(s);
  }
  std::vector<std::string> out;
  for (auto& s : specs) {
    try {
      BuildOptions o;
      o.order_cap = max_order;
      (void)build_group(s, o);
      out.push_back(std::move(s));
    } catch (const Error&) {
      // over the order bound, or no transitive action
    }
  }
  return out;
}

VerificationReport run_sweep(int max_order, const SuiteOptions& options) {
  std::vector<Case> cases;
  for (const auto& spec : catalog(max_order)) cases.push_back({spec, [spec, options] { return sweep_group(spec, options.build); }});
  return {"sweep", run_cases(cases, options.jobs)};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<Case> cases;
  auto append = [&cases](std::vector<Case> more) { cases.insert(cases.end(), more.begin(), more.end()); };
  if (name == "trees" || name == "all") append(trees_cases(options));
  if (name == "forests" || name == "all") append(forests_cases(options));
  if (name == "identities" || name == "all") append(identities_cases(options));
  if (name == "sweep") return run_sweep(256, options);
  if (cases.empty()) throw Error(ErrorCode::ParseError, "unknown suite '" + name + "'");
  VerificationReport report{name, run_cases(cases, options.jobs)};
  if (name == "all") {
    auto sweep = run_sweep(256, options);
    report.records.insert(report.records.end(), sweep.records.begin(), sweep.records.end());
  }
  return report;
}

CheckRecord property_ring_axioms(int triples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  const std::vector<int> orders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30, 60};
  auto random_cyc = [&](int e) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::vector<BigInt> c(static_cast<std::size_t>(e));
    for (auto& x : c) x = coeff(rng);
    return CycInt::from_coefficients(e, std::move(c));
  };
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  int failures = 0;
  std::string first;
  for (int t = 0; t < triples; ++t) {
    // Mixed orders exercise the embedding into a common field.
    const int ea = orders[pick(rng)];
    const int eb = t % 4 == 0 ? orders[pick(rng)] : ea;
    const int ec = t % 8 == 0 ? orders[pick(rng)] : ea;
    const CycInt a = random_cyc(ea), b = random_cyc(eb), c = random_cyc(ec);
    const CycInt zero, one(1);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + zero == a && a * one == a && (a - a).is_zero() && -(-a) == a;
    std::int64_t k = 1;
    const int e = CycInt(a * b).order();
    for (std::int64_t cand = 2; cand < e; ++cand) {
      if (std::gcd(cand, static_cast<std::int64_t>(e)) == 1) {
        k = cand;
        break;
      }
    }
    ok = ok && (a * b).galois(k) == a.embed(e).galois(k) * b.embed(e).galois(k);
    if (!ok) {
      if (failures++ == 0) first = a.to_string() + " | " + b.to_string() + " | " + c.to_string();
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {"ring-axioms", "Z[zeta_e] is a commutative ring and Galois maps are homomorphisms",
          std::to_string(triples) + " random triples", "0 failures",
          std::to_string(failures) + " failures" + (first.empty() ? "" : " first: " + first), failures == 0, ms};
}

std::vector<std::vector<int>> unlabeled_trees(int n) {
  if (n < 1) return {};
  using Adj = std::vector<std::vector<int>>;
  // Canonical string of a tree rooted at its center(s).
  auto canonical = [](const Adj& adj) {
    const int size = static_cast<int>(adj.size());
    std::vector<int> degree(static_cast<std::size_t>(size));
    std::vector<int> layer;
    for (int v = 0; v < size; ++v) {
      degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
      if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = size;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int v : layer) {
        for (int u : adj[static_cast<std::size_t>(v)]) {
          if (--degree[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        }
      }
      layer = std::move(next);
    }
    std::function<std::string(int, int)> encode = [&](int v, int parent) {
      std::vector<std::string> kids;
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (u != parent) kids.push_back(encode(u, v));
      }
      std::sort(kids.begin(), kids.end());
      std::string s = "(";
      for (const auto& k : kids) s += k;
      return s + ")";
    };
    std::string best;
    for (int c : layer) {
      const std::string s = encode(c, -1);
      if (best.empty() || s < best) best = s;
    }
    return best;
  };
  std::map<std::string, Adj> level = {{"()", Adj(1)}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Adj> next;
    for (const auto& [key, adj] : level) {
      for (int v = 0; v < size - 1; ++v) {
        Adj grown = adj;
        grown.emplace_back();
        grown[static_cast<std::size_t>(v)].push_back(size - 1);
        grown.back().push_back(v);
        next.emplace(canonical(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& [key, adj] : level) {
    std::vector<int> parent(adj.size(), -1), order = {0};
    std::vector<char> seen(adj.size(), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int u : adj[static_cast<std::size_t>(order[i])]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          parent[static_cast<std::size_t>(u)] = order[i];
          order.push_back(u);
        }
      }
    }
    out.push_back(std::move(parent));
  }
  return out;
}

CheckRecord property_graph_aux(int max_vertices) {
  const auto start = std::chrono::steady_clock::now();
  static const std::vector<int> known = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  std::ostringstream counts;
  bool pass = true;
  int checked = 0;
  for (int n = 1; n <= max_vertices; ++n) {
    const auto trees = unlabeled_trees(n);
    counts << (n > 1 ? "," : "") << trees.size();
    if (n < static_cast<int>(known.size()) && static_cast<int>(trees.size()) != known[static_cast<std::size_t>(n)]) pass = false;
    for (const auto& parent : trees) {
      const IntMatrix a = tree_from_parents(parent);
      std::vector<std::int64_t> degree(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = a.row(v).sum();
      int next_to_leaf = 0;
      for (int v = 0; v < n; ++v) {
        bool adjacent = false;
        for (int u = 0; u < n; ++u) adjacent = adjacent || (a(v, u) != 0 && degree[static_cast<std::size_t>(u)] == 1);
        next_to_leaf += adjacent;
      }
      const bool star = n <= 2 || *std::max_element(degree.begin(), degree.end()) == n - 1;
      if (next_to_leaf == 1 && !star) pass = false;
      if (star && n >= 3 && next_to_leaf != 1) pass = false;
      if (!is_tree(a)) pass = false;
      ++checked;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream expected;
  for (int n = 1; n <= max_vertices && n < static_cast<int>(known.size()); ++n) expected << (n > 1 ? "," : "") << known[static_cast<std::size_t>(n)];
  return {"graph-aux", "a tree with one vertex next to leaves is a star",
          "all trees with <= " + std::to_string(max_vertices) + " vertices", "trees " + expected.str(),
          "trees " + counts.str() + (pass ? "" : ", lemma fails") + " (" + std::to_string(checked) + " checked)",
          pass && counts.str() == expected.str(), ms};
}

}  // namespace mckay
