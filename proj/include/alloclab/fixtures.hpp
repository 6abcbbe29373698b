#pragma once

#include <functional>
#include <string>
#include <vector>

namespace alloclab {

struct FixtureOutcome {
  bool pass = false;
  std::string detail;  // rendered values, or the mismatch description
};

// A pinned reference check: a small computation whose expected outcome is
// frozen in code. The same registry backs the unit-test fixture suite and
// `alloc-lab verify`, so the two can never drift apart.
struct Fixture {
  std::string id;
  std::string summary;
  std::function<FixtureOutcome()> run;
};

const std::vector<Fixture>& reference_fixtures();

}  // namespace alloclab
