#include "fsb/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsb/errors.hpp"

namespace fsb::kernels {

namespace {

// Signed set partitions of the given coordinates: each coordinate opens a new
// block or joins an earlier block with either sign.
void signed_partitions(const std::vector<int>& coords, std::size_t i, int blocks, std::vector<long>& by_blocks) {
  if (i == coords.size()) {
    ++by_blocks[static_cast<std::size_t>(blocks)];
    return;
  }
  signed_partitions(coords, i + 1, blocks + 1, by_blocks);
  for (int b = 0; b < blocks; ++b)
    for (int s = 0; s < 2; ++s) signed_partitions(coords, i + 1, blocks, by_blocks);
}

void tally_zero_block(int n, std::uint32_t zero_mask, std::vector<long>& by_dim) {
  std::vector<int> rest;
  for (int k = 0; k < n; ++k)
    if (!(zero_mask >> k & 1)) rest.push_back(k + 1);
  signed_partitions(rest, 0, 0, by_dim);
}

void check_flat_size(int n) {
  if (n < 0) throw ShapeError("negative size");
  if (n > 12) throw ResourceError("flat enumeration limited to n <= 12");
}

FlatCounts finish(std::vector<long> by_dim) {
  FlatCounts c{std::move(by_dim), 0};
  for (long x : c.by_dimension) c.total += x;
  return c;
}

long word_count(int alphabet_n, int len) {
  long c = 1;
  for (int k = 0; k < len; ++k) c *= 2L * alphabet_n + 1;
  return c;
}

words::Word word_at(int alphabet_n, int len, long index) {
  std::vector<int> letters(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<int>(index % (2L * alphabet_n + 1)) - alphabet_n;
    index /= 2L * alphabet_n + 1;
  }
  return words::Word(alphabet_n, letters);
}

void check_word_budget(const words::Word& w, int max_length) {
  long total = 0;
  for (int len = 0; len <= max_length; ++len) total += word_count(w.alphabet_n, len);
  if (total > 200'000'000L) throw ResourceError("brute-force word count exceeds budget");
}

}  // namespace

namespace serial {

FlatCounts flat_counts_B(int n) {
  check_flat_size(n);
  std::vector<long> by_dim(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t z = 0; z < (1u << n); ++z) tally_zero_block(n, z, by_dim);
  return finish(std::move(by_dim));
}

std::vector<long> fixed_orbit_counts(int n, int d, const std::vector<SignedPerm>& ws) {
  const auto classes = orbit_classes(n, d);
  std::vector<long> out;
  for (const auto& w : ws) {
    long fixed = 0;
    for (const auto& phi : classes) fixed += canonical_representative(act(w, phi)) == phi;
    out.push_back(fixed);
  }
  return out;
}

std::vector<long> ideal_member_counts(const words::Word& w, int max_length, words::Coverage coverage) {
  check_word_budget(w, max_length);
  std::vector<long> out;
  for (int len = 0; len <= max_length; ++len) {
    long c = 0;
    const long total = word_count(w.alphabet_n, len);
    for (long i = 0; i < total; ++i) c += words::word_leq(w, word_at(w.alphabet_n, len, i), coverage);
    out.push_back(c);
  }
  return out;
}

}  // namespace serial

namespace parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FlatCounts flat_counts_B(int n) {
  check_flat_size(n);
  const long masks = 1L << n;
  std::vector<long> by_dim(static_cast<std::size_t>(n) + 1, 0);
#pragma omp parallel
  {
    std::vector<long> local(by_dim.size(), 0);
#pragma omp for schedule(dynamic)
    for (long z = 0; z < masks; ++z) tally_zero_block(n, static_cast<std::uint32_t>(z), local);
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) by_dim[k] += local[k];
  }
  return finish(std::move(by_dim));
}

std::vector<long> fixed_orbit_counts(int n, int d, const std::vector<SignedPerm>& ws) {
  const auto classes = orbit_classes(n, d);
  std::vector<long> out(ws.size(), 0);
  const long nw = static_cast<long>(ws.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < nw; ++k) {
    long fixed = 0;
    for (const auto& phi : classes) fixed += canonical_representative(act(ws[static_cast<std::size_t>(k)], phi)) == phi;
    out[static_cast<std::size_t>(k)] = fixed;
  }
  return out;
}

std::vector<long> ideal_member_counts(const words::Word& w, int max_length, words::Coverage coverage) {
  check_word_budget(w, max_length);
  std::vector<long> out;
  for (int len = 0; len <= max_length; ++len) {
    long c = 0;
    const long total = word_count(w.alphabet_n, len);
#pragma omp parallel for reduction(+ : c) schedule(static)
    for (long i = 0; i < total; ++i) c += words::word_leq(w, word_at(w.alphabet_n, len, i), coverage);
    out.push_back(c);
  }
  return out;
}

}  // namespace parallel

}  // namespace fsb::kernels
