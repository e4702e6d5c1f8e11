#include "fsb/kl.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "fsb/errors.hpp"

namespace fsb::kl {

using arr::ArrIsoType;
using arr::Kind;
using series::Polynomial;

std::string convention_tag(Convention c) {
  return c == Convention::kStandard ? "chi(localization)*P(contraction)" : "chi(contraction)*P(localization)";
}

namespace {

void partitions(int m, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (m == 0) {
    visit(cur);
    return;
  }
  for (int p = std::min(m, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(m - p, p, cur, visit);
    cur.pop_back();
  }
}

// m! / (∏ λ_i! ∏ m_s!): ways to split an m-set into unordered blocks of sizes λ.
Integer set_partitions_of_shape(int m, const std::vector<int>& lambda) {
  Integer c = factorial(static_cast<unsigned>(m));
  std::map<int, unsigned> mult;
  for (int p : lambda) {
    c /= factorial(static_cast<unsigned>(p));
    ++mult[p];
  }
  for (auto [p, k] : mult) c /= factorial(k);
  return c;
}

std::vector<CensusRow> tally(std::map<std::pair<ArrIsoType, ArrIsoType>, Integer> rows) {
  std::vector<CensusRow> out;
  for (auto& [key, count] : rows) out.push_back({key.first, key.second, count});
  return out;
}

bool is_atomic(const ArrIsoType& t) {
  return (t.b > 0 && t.alpha.empty()) || (t.b == 0 && t.alpha.size() == 1);
}

}  // namespace

std::vector<CensusRow> flat_type_census(int n, Kind kind) {
  if (n < 0) throw ShapeError("negative size");
  std::map<std::pair<ArrIsoType, ArrIsoType>, Integer> rows;
  std::vector<int> cur;
  if (kind == Kind::B) {
    for (int z = 0; z <= n; ++z)
      partitions(n - z, n - z, cur, [&](const std::vector<int>& lambda) {
        Integer c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(z)) * set_partitions_of_shape(n - z, lambda);
        for (int p : lambda) c *= power(2, static_cast<unsigned>(p - 1));
        rows[{ArrIsoType(z, lambda), ArrIsoType::B(static_cast<int>(lambda.size()))}] += c;
      });
  } else {
    partitions(n, n, cur, [&](const std::vector<int>& lambda) {
      rows[{ArrIsoType(0, lambda), ArrIsoType::A(static_cast<int>(lambda.size()))}] += set_partitions_of_shape(n, lambda);
    });
  }
  return tally(std::move(rows));
}

std::vector<CensusRow> census_of(const ArrIsoType& type) {
  auto acc = flat_type_census(type.b, Kind::B);
  for (int a : type.alpha) {
    std::map<std::pair<ArrIsoType, ArrIsoType>, Integer> rows;
    for (const auto& x : acc)
      for (const auto& y : flat_type_census(a, Kind::A))
        rows[{x.localization * y.localization, x.contraction * y.contraction}] += x.count * y.count;
    acc = tally(std::move(rows));
  }
  return acc;
}

std::vector<CensusRow> brute_census(int n, Kind kind) {
  std::map<std::pair<ArrIsoType, ArrIsoType>, Integer> rows;
  for (const auto& f : kind == Kind::B ? arr::flats_B(n) : arr::flats_A(n))
    rows[{arr::localization_type(f), arr::contraction_type(f)}] += 1;
  return tally(std::move(rows));
}

KLEngine::KLEngine(Convention convention, bool validate) : convention_(convention) {
  if (validate) validate_convention();
}

bool KLEngine::load_environment_cache() {
  const char* path = std::getenv("FSB_KL_CACHE");
  if (!path || !*path || !std::filesystem::exists(path)) return false;
  load(path);
  return true;
}

std::optional<Polynomial> KLEngine::lookup(const std::string& key) const {
  std::shared_lock lock(mu_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void KLEngine::insert(const std::string& key, const Polynomial& p, bool derived) {
  std::unique_lock lock(mu_);
  if (memo_.emplace(key, p).second && derived) derived_.push_back(key);
}

Polynomial KLEngine::derive(const ArrIsoType& type, const std::vector<CensusRow>& census,
                            const std::function<Polynomial(const ArrIsoType&)>& sub) const {
  const int r = type.rank();
  if (r == 0) return Polynomial{1};
  const bool standard = convention_ == Convention::kStandard;
  Polynomial rest;
  for (const auto& row : census) {
    const ArrIsoType& chi_of = standard ? row.localization : row.contraction;
    const ArrIsoType& p_of = standard ? row.contraction : row.localization;
    if (chi_of.empty() && p_of == type) continue;
    rest += arr::char_poly(chi_of) * sub(p_of) * Rational(row.count);
  }
  Polynomial p = -rest.truncated((r + 1) / 2);
  // The identity t^r P(1/t) - P(t) = rest also fixes the upper half; it must agree.
  if (p.reflected(r) - p != rest)
    throw InternalError("KL recursion is inconsistent for " + type.canonical());
  return p;
}

Polynomial KLEngine::kl_poly(const ArrIsoType& type) {
  if (type.empty()) return Polynomial{1};
  if (!is_atomic(type)) {
    Polynomial p = kl_poly(ArrIsoType::B(type.b));
    for (int a : type.alpha) p *= kl_poly(ArrIsoType::A(a));
    return p;
  }
  const std::string key = type.canonical();
  if (auto hit = lookup(key)) return *hit;
  Polynomial p = derive(type, census_of(type), [this](const ArrIsoType& t) { return kl_poly(t); });
  insert(key, p, true);
  return p;
}

Polynomial KLEngine::kl_poly_direct(const ArrIsoType& type) {
  std::map<ArrIsoType, Polynomial> local;
  std::function<Polynomial(const ArrIsoType&)> rec = [&](const ArrIsoType& t) -> Polynomial {
    if (auto it = local.find(t); it != local.end()) return it->second;
    Polynomial p = derive(t, census_of(t), rec);
    local.emplace(t, p);
    return p;
  };
  return rec(type);
}

Integer KLEngine::dim_D(int i, int n, Kind kind) {
  if (i < 0) return 0;
  const auto p = kl_poly(kind == Kind::B ? ArrIsoType::B(n) : ArrIsoType::A(n));
  return p.coeff(i).get_num();
}

void KLEngine::validate_convention() {
  for (int n : {3, 4}) {
    long dim_one = 0;
    for (const auto& f : arr::flats_B(n)) dim_one += f.dimension() == 1;
    const Integer expected = dim_one - static_cast<long>(n) * n;
    Rational got;
    try {
      got = kl_poly(ArrIsoType::B(n)).coeff(1);
    } catch (const InternalError& e) {
      throw ConventionError("recursion convention " + convention_tag(convention_) + " is inconsistent: " + e.what());
    }
    if (got != expected)
      throw ConventionError("recursion convention " + convention_tag(convention_) + " gives t-coefficient " +
                            to_string(got) + " for B" + std::to_string(n) + ", expected " + to_string(expected));
  }
}

std::vector<std::string> KLEngine::derived_types() const {
  std::shared_lock lock(mu_);
  return derived_;
}

std::size_t KLEngine::derivation_count() const {
  std::shared_lock lock(mu_);
  return derived_.size();
}

KLTable KLEngine::table() const {
  std::shared_lock lock(mu_);
  return memo_;
}

void KLEngine::store(const std::string& path) const {
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["convention_tag"] = convention_tag(convention_);
  j["entries"] = nlohmann::json::object();
  for (const auto& [key, p] : table()) {
    auto& arr = j["entries"][key];
    arr = nlohmann::json::array();
    for (const auto& c : p.integer_coeffs()) arr.push_back(c.get_str());
  }
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write KL cache " + path);
  out << j.dump(1) << '\n';
}

void KLEngine::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot read KL cache " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("KL cache " + path + " is not valid JSON: " + e.what());
  }
  if (j.value("version", "") != kCacheVersion)
    throw CacheError("KL cache " + path + " has version '" + j.value("version", "") + "', expected " + kCacheVersion);
  if (j.value("convention_tag", "") != convention_tag(convention_))
    throw CacheError("KL cache " + path + " was built with convention '" + j.value("convention_tag", "") +
                     "', this engine uses '" + convention_tag(convention_) + "'");
  if (!j.contains("entries") || !j["entries"].is_object()) throw CacheError("KL cache " + path + " has no entries");
  std::vector<std::pair<std::string, Polynomial>> parsed;
  for (const auto& [key, coeffs] : j["entries"].items()) {
    ArrIsoType t;
    std::vector<Rational> cs;
    try {
      t = ArrIsoType::parse(key);
      for (const auto& c : coeffs) cs.emplace_back(Integer(c.get<std::string>()));
    } catch (const std::exception& e) {
      throw CacheError("KL cache entry '" + key + "' is malformed: " + e.what());
    }
    Polynomial p(cs);
    if (t.canonical() != key || p.coeff(0) != 1 || 2 * p.degree() >= std::max(t.rank(), 1))
      throw CacheError("KL cache entry '" + key + "' is not a KL polynomial");
    parsed.emplace_back(key, p);
  }
  for (const auto& [key, p] : parsed) insert(key, p, false);
}

}  // namespace fsb::kl
