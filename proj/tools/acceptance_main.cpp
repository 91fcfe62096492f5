#include "l2tor/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main() {
  std::uint64_t seed = l2tor::acceptance::kDefaultSeed;
  if (const char* s = std::getenv("L2TOR_SEED")) seed = std::strtoull(s, nullptr, 0);
  const auto results = l2tor::acceptance::run_all(seed);
  std::cout << l2tor::acceptance::format_table(results, false);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
