// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ribbon/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  int n;              // 0: suite default
  double limit;       // seconds
};

}  // namespace

int main() {
  using namespace ribbon::verify;
  const std::vector<Criterion> criteria = {
      {1, "mon examples", "mon-examples", 0, 1},
      {2, "edge-type fixture", "edge-types", 0, 1},
      {3, "lemma equivalence on 6 labels", "lemma-equivalence", 3, 60},
      {4, "degree bounds", "degree-bounds", 0, 120},
      {5, "liberation, non-oriented", "liberation-nonoriented", 0, 120},
      {6, "liberation, oriented", "liberation-oriented", 0, 120},
      {7, "first main theorem, n=1..5", "main-theorem", 0, 60},
      {8, "key bijection", "bijection", 0, 300},
      {9, "second main theorem", "second-theorem", 0, 300},
      {10, "Jack oracle", "jack-oracle", 0, 300},
      {11, "Stanley special values", "stanley-special", 0, 600},
      {12, "counting sanity", "counting", 0, 60},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Options o;
    o.n = c.n;
    bool ok = false;
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Report r = run_suite(c.suite, o);
      ok = r.passed();
      if (!ok) why = r.counterexample.dump();
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= c.limit) {
      ok = false;
      why = "time limit " + std::to_string(c.limit) + " s exceeded";
    }
    failures += !ok;
    std::printf("%s criterion %d (%s): %.2f s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, why.empty() ? "" : " ",
                why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
