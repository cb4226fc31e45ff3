// Acceptance checks 1-10. With --criterion N runs one check; otherwise all.
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <vector>

#include "hermispec/claims.hpp"

int main(int argc, char** argv) {
  using namespace hermispec;
  std::vector<int> ids;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
      ids.push_back(std::atoi(argv[++a]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int k = 1; k <= ClaimRunner::count(); ++k) ids.push_back(k);

  const Registry reg = Registry::load(default_registry_path());
  ClaimRunner runner(reg);
  bool all = true;
  for (int id : ids) {
    const auto r = runner.run(id);
    all = all && r.ok();
    std::cout << "criterion " << std::setw(2) << r.id << ": " << (r.ok() ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(2) << r.seconds << "s";
    if (r.budget_seconds > 0) std::cout << " (budget " << r.budget_seconds << "s)";
    std::cout << "  " << r.title << ": " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
