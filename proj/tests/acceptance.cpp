// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mckay/verify.hpp"

using namespace mckay;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> families;
  int checks = 0;
  std::vector<const CheckRecord*> failures;
};

std::string family(const std::string& id) { return id.substr(0, id.find('.')); }

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "ADE fixtures: binary dihedral, BT, BO, BI", {"ade"}},
      {2, "dihedral fixtures: vertex counts and the odd loop", {"dihedral"}},
      {3, "extraspecial fixtures give hedgehogs", {"hedgehog"}},
      {4, "trace, edge-count, centralizer and spectrum identities", {"identity", "extra"}},
      {5, "kernel extensions: components, orbits and isomorphisms", {"construction"}},
      {6, "bipartite iff |Z| = 2", {"bipartite"}},
      {7, "tree and forest classification over the catalog", {"sweep", "forest"}},
      {8, "normal tower in BO", {"tower"}},
      {9, "ring axioms, orthogonality and the leaf lemma", {"property"}},
  };
  std::map<std::string, Criterion*> by_family;
  for (auto& c : criteria) {
    for (const auto& f : c.families) by_family[f] = &c;
  }

  SuiteOptions options;
  std::vector<VerificationReport> reports;
  std::vector<CheckRecord> extra;
  const auto start = std::chrono::steady_clock::now();
  for (const char* suite : {"trees", "forests", "identities", "sweep"}) {
    const auto t0 = std::chrono::steady_clock::now();
    reports.push_back(run_suite(suite, options));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << suite << ": " << reports.back().records.size() << " checks in " << secs << " s\n";
    if (std::string(suite) == "sweep") {
      extra.push_back({"sweep.runtime", "sweep under 180 s", "catalog order <= 256", "< 180",
                       std::to_string(secs), secs < 180.0, secs * 1000});
    }
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<CheckRecord> unmapped;
  auto place = [&](const CheckRecord& r) {
    const auto it = by_family.find(family(r.id));
    if (it == by_family.end()) {
      unmapped.push_back(r);
      return;
    }
    ++it->second->checks;
    if (!r.pass) it->second->failures.push_back(&r);
  };
  for (const auto& report : reports) {
    for (const auto& r : report.records) place(r);
  }
  for (const auto& r : extra) place(r);

  bool all = unmapped.empty();
  for (const auto& c : criteria) {
    const bool pass = c.failures.empty() && c.checks > 0;
    all = all && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.number << " " << c.title << " (" << c.checks - static_cast<int>(c.failures.size())
              << "/" << c.checks << ")\n";
    for (const auto* r : c.failures) {
      std::cerr << "  " << r->id << " [" << r->inputs << "] expected " << r->expected << ", observed " << r->observed << "\n";
    }
  }
  for (const auto& r : unmapped) std::cerr << "unmapped record " << r.id << " [" << r.inputs << "]\n";
  std::cerr << "total " << total << " s\n";
  return all ? 0 : 1;
}
