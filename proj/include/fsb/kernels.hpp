#pragma once

#include <vector>

#include "fsb/core.hpp"
#include "fsb/words.hpp"

namespace fsb::kernels {

/// Flats of B_n tallied by dimension (number of signed blocks).
struct FlatCounts {
  std::vector<long> by_dimension;
  long total = 0;
  friend bool operator==(const FlatCounts&, const FlatCounts&) = default;
};

// The serial and parallel versions compute identical results; the serial ones
// are the reference for tests and benchmarks.

namespace serial {
/// Explicit enumeration, one zero block at a time.
FlatCounts flat_counts_B(int n);
/// For each w: W_d-orbits of morphisms [-n,n] -> [-d,d] fixed by precomposition with w.
std::vector<long> fixed_orbit_counts(int n, int d, const std::vector<SignedPerm>& ws);
/// Number of words v of each length 0..max_length over w's alphabet with w <= v.
std::vector<long> ideal_member_counts(const words::Word& w, int max_length,
                                      words::Coverage coverage = words::Coverage::kAllOrbits);
}  // namespace serial

namespace parallel {
FlatCounts flat_counts_B(int n);
std::vector<long> fixed_orbit_counts(int n, int d, const std::vector<SignedPerm>& ws);
std::vector<long> ideal_member_counts(const words::Word& w, int max_length,
                                      words::Coverage coverage = words::Coverage::kAllOrbits);
/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();
}  // namespace parallel

}  // namespace fsb::kernels
