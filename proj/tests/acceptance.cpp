#include <cstdio>
#include "pwl/verify.hpp"
int main() {
  auto results = pwl::run_acceptance();
  bool ok = true;
  int i = 0;
  for (const auto& r : results) {
    ++i;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", i, r.name.c_str(), r.seconds);
    std::printf("       %s\n", r.detail.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
