#pragma once

#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fsb/arrangements.hpp"
#include "fsb/polynomial.hpp"

namespace fsb::kl {

/// Which factor of a flat the characteristic polynomial is taken of in the
/// recursion t^r P(1/t) = Σ_F χ(·) P(·). Standard: χ of the localization,
/// P of the contraction. Swapped exists only to show the guard rejects it.
enum class Convention { kStandard, kSwapped };
std::string convention_tag(Convention c);

/// Flats of one isomorphism class, counted.
struct CensusRow {
  arr::ArrIsoType localization;
  arr::ArrIsoType contraction;
  Integer count;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Closed-form census of B_n (kind B) or the braid arrangement on [n] (kind A).
std::vector<CensusRow> flat_type_census(int n, arr::Kind kind);
/// Census of a product type: the product of the factor censuses.
std::vector<CensusRow> census_of(const arr::ArrIsoType& type);
/// The same tally from explicit flat enumeration.
std::vector<CensusRow> brute_census(int n, arr::Kind kind);

using KLTable = std::map<std::string, series::Polynomial>;

/// Kazhdan-Lusztig polynomials of Coxeter arrangement types, memoized by
/// canonical type string. Reads may run concurrently with each other and
/// with inserts; entries are deterministic so a racing insert is harmless.
class KLEngine {
 public:
  static constexpr const char* kCacheVersion = "fsb-kl-1";

  /// Runs validate_convention() unless told not to.
  explicit KLEngine(Convention convention = Convention::kStandard, bool validate = true);
  /// Loads $FSB_KL_CACHE if the variable is set and the file exists;
  /// returns whether a file was loaded.
  bool load_environment_cache();

  Convention convention() const { return convention_; }

  /// Product types are factored; factors come from the recursion.
  series::Polynomial kl_poly(const arr::ArrIsoType& type);
  /// The recursion applied to the type as a whole, product or not, with a
  /// private memo and no factoring. Reference for multiplicativity.
  series::Polynomial kl_poly_direct(const arr::ArrIsoType& type);

  /// Coefficient of t^i of the KL polynomial of B_n or of the braid
  /// arrangement on [n].
  Integer dim_D(int i, int n, arr::Kind kind);

  /// Checks the degree-one coefficient of B_3 and B_4 against
  /// #(flats of dimension 1) - #(hyperplanes). Throws ConventionError.
  void validate_convention();

  /// Types derived by recursion (not loaded, not factored) in this engine.
  std::vector<std::string> derived_types() const;
  std::size_t derivation_count() const;

  KLTable table() const;
  void store(const std::string& path) const;
  /// Merges a cache file; throws CacheError on version or convention mismatch
  /// or on entries that are not KL polynomials.
  void load(const std::string& path);

 private:
  std::optional<series::Polynomial> lookup(const std::string& key) const;
  void insert(const std::string& key, const series::Polynomial& p, bool derived);
  series::Polynomial derive(const arr::ArrIsoType& type, const std::vector<CensusRow>& census,
                            const std::function<series::Polynomial(const arr::ArrIsoType&)>& sub) const;

  Convention convention_;
  mutable std::shared_mutex mu_;
  KLTable memo_;
  std::vector<std::string> derived_;
};

}  // namespace fsb::kl
