// prints one line per acceptance criterion; exit status 1 if any fails
#include "lenskit/sweeps.hpp"

#include <iostream>

int main() {
  lenskit::SweepOptions opts;
  bool ok = true;
  for (const auto& c : lenskit::acceptance_criteria()) {
    auto r = c(opts);
    ok = ok && r.pass;
    std::cout << lenskit::summary_line(r) << std::endl;
  }
  return ok ? 0 : 1;
}
