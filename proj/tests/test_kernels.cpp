#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fsb/arrangements.hpp"
#include "fsb/kernels.hpp"

using namespace fsb;
using namespace fsb::kernels;

TEST_CASE("flat counts") {
  // Dowling numbers for the group of order 2.
  const std::vector<long> totals{1, 2, 6, 24, 116, 648, 4088, 28640};
  for (int n = 0; n <= 7; ++n) {
    const auto s = serial::flat_counts_B(n);
    CHECK(s.total == totals[static_cast<std::size_t>(n)]);
    CHECK(parallel::flat_counts_B(n) == s);
  }
  for (int n = 0; n <= 6; ++n) {
    std::vector<long> by_dim(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& f : arr::flats_B(n)) ++by_dim[static_cast<std::size_t>(f.dimension())];
    CHECK(serial::flat_counts_B(n).by_dimension == by_dim);
  }
  CHECK(serial::flat_counts_B(5).by_dimension[1] == (243 - 1) / 2);
}

TEST_CASE("fixed orbit counts") {
  const auto ws = SignedPerm::all(3);
  for (int d = 0; d <= 3; ++d) {
    const auto s = serial::fixed_orbit_counts(3, d, ws);
    CHECK(parallel::fixed_orbit_counts(3, d, ws) == s);
    // Identity fixes everything.
    const auto id = std::find(ws.begin(), ws.end(), SignedPerm::identity(3)) - ws.begin();
    CHECK(s[static_cast<std::size_t>(id)] == static_cast<long>(orbit_classes(3, d).size()));
    // Burnside: average number of fixed points = number of W_3-orbits of flats.
    long sum = 0;
    for (long x : s) sum += x;
    CHECK(sum % static_cast<long>(ws.size()) == 0);
  }
}

TEST_CASE("ideal member counts") {
  const words::Word w(2, {1, -1, 2});
  const auto s = serial::ideal_member_counts(w, 5);
  CHECK(parallel::ideal_member_counts(w, 5) == s);
  CHECK(s[0] == 0);
  CHECK(s[3] == 1);  // only w itself
  const auto aut = words::principal_ideal_automaton(w);
  const auto by_aut = aut.count_by_length(5);
  for (std::size_t len = 0; len < s.size(); ++len) CHECK(Integer(s[len]) == by_aut[len]);
  const auto f = parallel::ideal_member_counts(w, 4, words::Coverage::kFreeOrbits);
  CHECK(f == serial::ideal_member_counts(w, 4, words::Coverage::kFreeOrbits));
}
