// fsb: command-line front end. Results go to stdout, progress and timing to
// stderr. Exit codes: 0 success (and every requested check passed), 1 failed
// check or computation error, 2 usage error.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsb/arrangements.hpp"
#include "fsb/core.hpp"
#include "fsb/errors.hpp"
#include "fsb/kernels.hpp"
#include "fsb/kl.hpp"
#include "fsb/os_algebra.hpp"
#include "fsb/rep.hpp"
#include "fsb/series.hpp"
#include "fsb/verify.hpp"
#include "fsb/words.hpp"

using json = nlohmann::ordered_json;
using namespace fsb;

namespace {

constexpr int kUsageError = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Size limits enforced by the CLI on top of the library's own. Overridable
// from a JSON config file: {"bounds": {"kl_max_n": 80, ...}}.
struct Bounds {
  int hom_list_max_rows = 200000;
  int flats_list_max_n = 7;
  int kl_max_n = 60;
  int series_max_terms = 40;
  int chars_max_n = 7;
  int os_max_n = 6;
  int automaton_max_length = 60;
};

void load_bounds(const std::string& path, Bounds& b) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.contains("bounds")) return;
  const auto& jb = j["bounds"];
  for (auto it = jb.begin(); it != jb.end(); ++it) {
    int* slot = nullptr;
    if (it.key() == "hom_list_max_rows") slot = &b.hom_list_max_rows;
    else if (it.key() == "flats_list_max_n") slot = &b.flats_list_max_n;
    else if (it.key() == "kl_max_n") slot = &b.kl_max_n;
    else if (it.key() == "series_max_terms") slot = &b.series_max_terms;
    else if (it.key() == "chars_max_n") slot = &b.chars_max_n;
    else if (it.key() == "os_max_n") slot = &b.os_max_n;
    else if (it.key() == "automaton_max_length") slot = &b.automaton_max_length;
    else throw UsageError("config file " + path + ": unknown bound '" + it.key() + "'");
    if (!it.value().is_number_integer()) throw UsageError("config file " + path + ": bound '" + it.key() + "' must be an integer");
    *slot = it.value().get<int>();
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

enum class Format { kText, kJson, kCsv };

// One command result: a scalar, a table, or both, plus extra JSON fields.
struct Output {
  json fields = json::object();
  std::optional<std::string> value;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text_lines;  // text-format preamble
  bool table_in_text = true;            // false when text_lines already say it all
  bool table_in_json = true;            // false when fields already carry the rows
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render(const Output& o, Format f, std::ostream& os) {
  switch (f) {
    case Format::kJson: {
      json j = o.fields;
      if (o.value) j["value"] = *o.value;
      if (!o.header.empty() && o.table_in_json) {
        j["columns"] = o.header;
        json rows = json::array();
        for (const auto& r : o.rows) {
          json row = json::object();
          for (std::size_t k = 0; k < o.header.size() && k < r.size(); ++k) row[o.header[k]] = r[k];
          rows.push_back(row);
        }
        j["rows"] = rows;
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      if (o.header.empty()) {
        os << "value\n" << csv_cell(o.value.value_or("")) << "\n";
        break;
      }
      for (std::size_t k = 0; k < o.header.size(); ++k) os << (k ? "," : "") << csv_cell(o.header[k]);
      os << "\n";
      for (const auto& r : o.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_cell(r[k]);
        os << "\n";
      }
      break;
    }
    case Format::kText: {
      for (const auto& l : o.text_lines) os << l << "\n";
      if (o.value) os << *o.value << "\n";
      if (o.header.empty() || !o.table_in_text) break;
      std::vector<std::size_t> width(o.header.size());
      for (std::size_t k = 0; k < o.header.size(); ++k) width[k] = o.header[k].size();
      for (const auto& r : o.rows)
        for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], r[k].size());
      auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t k = 0; k < r.size(); ++k) {
          s += r[k];
          if (k + 1 < r.size()) s += std::string(width[k] - r[k].size() + 2, ' ');
        }
        os << s << "\n";
      };
      line(o.header);
      for (const auto& r : o.rows) line(r);
      break;
    }
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + tok + "'");
    }
  }
  return out;
}

// ---- hom ----

struct HomArgs {
  int n = 0, d = 0;
  bool count = false, list = false, orbits = false;
};

Output cmd_hom(const HomArgs& a, const Bounds& bounds) {
  require(a.n >= 0 && a.d >= 0, "n and d must be nonnegative");
  require(int(a.count) + int(a.list) + int(a.orbits) <= 1, "choose one of --count, --list, --orbits");
  Output o;
  o.fields["command"] = "hom";
  o.fields["n"] = a.n;
  o.fields["d"] = a.d;
  if (a.list) {
    require(hom_count(a.n, a.d) <= bounds.hom_list_max_rows,
            "hom --list would print " + hom_count(a.n, a.d).get_str() + " rows (bound hom_list_max_rows)");
    o.header = {"images", "zero_fiber", "flat"};
    for (const auto& phi : enumerate_hom(a.n, a.d)) {
      std::vector<std::string> im;
      for (int x : phi.images()) im.push_back(std::to_string(x));
      o.rows.push_back({join(im, " "), std::to_string(phi.zero_fiber()), arr::flat_of(phi).to_string()});
    }
    return o;
  }
  if (a.orbits) {
    o.header = {"representative", "flat", "stabilizer_order"};
    for (const auto& phi : orbit_classes(a.n, a.d)) {
      std::vector<std::string> im;
      for (int x : phi.images()) im.push_back(std::to_string(x));
      o.rows.push_back({join(im, " "), arr::flat_of(phi).to_string(), stabilizer_order(phi).get_str()});
    }
    return o;
  }
  o.value = hom_count(a.n, a.d).get_str();
  return o;
}

// ---- kl ----

struct KLArgs {
  int n = 0;
  std::string type = "B";
  int coeff = -1;
  std::string cache;
};

std::string cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("FSB_KL_CACHE")) return env;
  return {};
}

Output cmd_kl(const KLArgs& a, const Bounds& bounds) {
  const auto kind = arr::parse_kind(a.type);
  require(a.n >= 0 && a.n <= bounds.kl_max_n, "n must lie in 0.." + std::to_string(bounds.kl_max_n) + " (bound kl_max_n)");
  kl::KLEngine engine;
  const auto path = cache_path(a.cache);
  if (!path.empty() && std::filesystem::exists(path)) engine.load(path);
  const auto type = kind == arr::Kind::B ? arr::ArrIsoType::B(a.n) : arr::ArrIsoType::A(std::max(a.n, 1));
  std::cerr << "kl: computing " << type.canonical() << "\n";
  const auto p = engine.kl_poly(type);
  if (!path.empty()) engine.store(path);
  Output o;
  o.fields["command"] = "kl";
  o.fields["type"] = arr::to_string(kind);
  o.fields["n"] = a.n;
  if (a.coeff >= 0) {
    o.fields["coeff"] = a.coeff;
    o.value = fsb::to_string(p.coeff(a.coeff));
  } else {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(fsb::to_string(c));
    o.fields["coefficients"] = coeffs;
    o.value = p.to_string();
  }
  return o;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  int max_n = -1;
  int d = -1;
};

Output cmd_verify(const VerifyArgs& a, bool& all_pass) {
  const auto names = verify::suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("unknown suite '" + a.suite + "' (expected " + join(names, ", ") + ")");
  require(a.d < 0 || a.d <= 2, "--d must be 0, 1 or 2");
  kl::KLEngine engine;
  engine.load_environment_cache();
  verify::Options opt;
  opt.max_n = a.max_n;
  opt.d = a.d;
  opt.engine = &engine;
  opt.progress = [](const std::string& msg) { std::cerr << "verify: " << msg << "\n"; };
  const auto reports = verify::run_suite(a.suite, opt);

  Output o;
  o.fields["command"] = "verify";
  o.fields["suite"] = a.suite;
  all_pass = true;
  json jr = json::array();
  o.header = {"report", "check", "status", "detail"};
  for (const auto& r : reports) {
    std::cerr << "verify: " << r.id << " " << verify::to_string(r.status) << " in " << r.seconds << "s\n";
    all_pass = all_pass && r.status == verify::Status::kPass;
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"status", verify::to_string(c.status)}, {"detail", c.detail}});
      o.rows.push_back({r.id, c.name, verify::to_string(c.status), c.detail});
    }
    jr.push_back({{"id", r.id}, {"title", r.title}, {"status", verify::to_string(r.status)}, {"checks", checks}});
    o.text_lines.push_back(verify::to_string(r.status) + "  " + r.id + "  " + r.title);
    for (const auto& c : r.checks)
      o.text_lines.push_back("    " + verify::to_string(c.status) + "  " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  o.fields["status"] = all_pass ? "PASS" : "FAIL";
  o.fields["reports"] = jr;
  o.text_lines.push_back(std::string("suite ") + a.suite + ": " + (all_pass ? "PASS" : "FAIL"));
  o.table_in_text = false;
  o.table_in_json = false;
  return o;
}

// ---- series ----

struct SeriesArgs {
  std::string source;
  int i = 1;
  int d = 0;
  int terms = -1;
  bool fit = false;
  int pole_bound = -1;
  int mult_bound = -1;
};

Output cmd_series(const SeriesArgs& a, const Bounds& bounds) {
  std::vector<Integer> terms;
  series::FitOptions fo;
  long dominant = 1;
  Output o;
  o.fields["command"] = "series";
  o.fields["source"] = a.source;
  if (a.source == "dmod") {
    require(a.i >= 0, "--i must be nonnegative");
    const int count = a.terms > 0 ? a.terms : (a.i <= 1 ? 13 : 8 * a.i + 5);
    require(count <= bounds.series_max_terms, "too many terms (bound series_max_terms)");
    kl::KLEngine engine;
    engine.load_environment_cache();
    for (int n = 0; n < count; ++n) {
      std::cerr << "series: dim D^" << a.i << "_B[-" << n << "," << n << "]\n";
      terms.push_back(engine.dim_D(a.i, n, arr::Kind::B));
    }
    dominant = a.i == 0 ? 1 : 4 * a.i - 1;
    fo = {static_cast<int>(dominant), 2 * a.i + 1, 0, 5};
    o.fields["i"] = a.i;
  } else if (a.source == "projective") {
    require(a.d >= 0, "--d must be nonnegative");
    const int count = a.terms > 0 ? a.terms : 4 * a.d + 13;
    require(count <= bounds.series_max_terms, "too many terms (bound series_max_terms)");
    for (int n = 0; n < count; ++n) terms.push_back(hom_count(n, a.d));
    dominant = 2 * a.d + 1;
    fo = {static_cast<int>(dominant), 1, 0, 5};
    o.fields["d"] = a.d;
  } else {
    throw UsageError("unknown series source '" + a.source + "' (expected dmod or projective)");
  }
  if (a.pole_bound >= 0) fo.pole_bound = a.pole_bound;
  if (a.mult_bound >= 0) fo.mult_bound = a.mult_bound;

  std::vector<std::string> ts;
  for (const auto& t : terms) ts.push_back(t.get_str());
  o.fields["terms"] = ts;
  o.text_lines.push_back("terms: " + join(ts, " "));
  o.table_in_text = false;
  o.header = {"n", "term"};
  for (std::size_t n = 0; n < ts.size(); ++n) o.rows.push_back({std::to_string(n), ts[n]});
  if (!a.fit) return o;

  const auto f = series::fit_rational(terms, fo);
  std::vector<std::string> poles;
  for (long j : series::pole_set(f)) poles.push_back(std::to_string(j));
  const auto res = series::residue_at(f, dominant);
  o.fields["function"] = f.to_string();
  o.fields["poles"] = poles;
  o.fields["residue_at"] = dominant;
  o.fields["residue"] = res.converges ? json(fsb::to_string(res.limit)) : json(nullptr);
  o.text_lines.push_back("H(t) = " + f.to_string());
  o.text_lines.push_back("poles: {" + join(poles, ",") + "}");
  o.text_lines.push_back("residue-at-" + std::to_string(dominant) + " = " +
                         (res.converges ? fsb::to_string(res.limit) : res.describe()));
  o.table_in_text = false;
  o.rows.clear();
  o.header = {"function", "poles", "residue_at", "residue"};
  o.rows.push_back({f.to_string(), join(poles, " "), std::to_string(dominant), res.converges ? fsb::to_string(res.limit) : ""});
  return o;
}

// ---- flats ----

struct FlatsArgs {
  int n = 0;
  std::string type = "B";
  bool list = false;
};

Output cmd_flats(const FlatsArgs& a, const Bounds& bounds) {
  const auto kind = arr::parse_kind(a.type);
  Output o;
  o.fields["command"] = "flats";
  o.fields["type"] = arr::to_string(kind);
  o.fields["n"] = a.n;
  if (a.list) {
    require(a.n <= bounds.flats_list_max_n, "flats --list needs n <= " + std::to_string(bounds.flats_list_max_n));
    o.header = {"flat", "dimension", "localization", "contraction"};
    const auto flats = kind == arr::Kind::B ? arr::flats_B(a.n) : arr::flats_A(a.n);
    for (const auto& f : flats)
      o.rows.push_back({f.to_string(), std::to_string(f.dimension()), arr::localization_type(f).canonical(),
                        arr::contraction_type(f).canonical()});
    return o;
  }
  std::vector<long> by_dim;
  if (kind == arr::Kind::B) {
    by_dim = kernels::parallel::flat_counts_B(a.n).by_dimension;
  } else {
    for (const auto& f : arr::flats_A(a.n)) {
      const auto k = static_cast<std::size_t>(f.dimension());
      if (by_dim.size() <= k) by_dim.resize(k + 1, 0);
      ++by_dim[k];
    }
  }
  long total = 0;
  o.header = {"dimension", "flats"};
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    o.rows.push_back({std::to_string(k), std::to_string(by_dim[k])});
    total += by_dim[k];
  }
  o.fields["total"] = std::to_string(total);
  o.text_lines.push_back("total: " + std::to_string(total));
  return o;
}

// ---- os ----

struct OSArgs {
  int n = -1;
  std::string type = "B";
  std::string map;
  int target = -1;
  int degree = 1;
  bool dual = false;
};

Output cmd_os(const OSArgs& a, const Bounds& bounds) {
  Output o;
  o.fields["command"] = "os";
  if (a.map.empty()) {
    require(a.n >= 0, "os needs n or --map");
    require(a.n <= bounds.os_max_n, "n must be <= " + std::to_string(bounds.os_max_n) + " (bound os_max_n)");
    const auto kind = arr::parse_kind(a.type);
    const auto model = os::build_os(a.n, kind);
    o.fields["type"] = arr::to_string(kind);
    o.fields["n"] = a.n;
    o.header = {"degree", "dimension"};
    const auto dims = model->graded_dims();
    for (std::size_t k = 0; k < dims.size(); ++k) o.rows.push_back({std::to_string(k), std::to_string(dims[k])});
    return o;
  }
  require(a.target >= 0, "--map needs --target");
  const auto images = parse_ints(a.map);
  const BMorphism phi(static_cast<int>(images.size()), a.target, images);
  auto m = os::restriction_map(phi, a.degree);
  if (a.dual) m = os::dual_map(m);
  o.fields["morphism"] = phi.to_string();
  o.fields["degree"] = a.degree;
  o.fields["dual"] = a.dual;
  o.fields["shape"] = {m.matrix.rows(), m.matrix.cols()};
  json rows = json::array();
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    json row = json::array();
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
      cells.push_back(fsb::to_string(m.matrix(r, c)));
      row.push_back(cells.back());
    }
    rows.push_back(row);
    o.text_lines.push_back(join(cells, " "));
  }
  o.fields["matrix"] = rows;
  o.text_lines.insert(o.text_lines.begin(), phi.to_string() + ", degree " + std::to_string(a.degree) + (a.dual ? ", dual" : "") +
                                                ", " + std::to_string(m.matrix.rows()) + "x" + std::to_string(m.matrix.cols()));
  return o;
}

// ---- chars ----

struct CharsArgs {
  int n = 0;
  std::string source = "flats";
  int d = 1;
  bool table = false;
};

Output cmd_chars(const CharsArgs& a, const Bounds& bounds) {
  require(a.n >= 0 && a.n <= bounds.chars_max_n, "n must lie in 0.." + std::to_string(bounds.chars_max_n));
  Output o;
  o.fields["command"] = "chars";
  o.fields["n"] = a.n;
  if (a.table) {
    const auto& t = rep::class_table(rep::Group::W, a.n);
    o.header = {"irreducible"};
    for (std::size_t k = 0; k < t.classes.size(); ++k) o.header.push_back(t.label(k));
    for (const auto& b : rep::bipartitions_of(a.n)) {
      std::vector<std::string> row{b.to_string()};
      for (const auto& v : rep::irr_character(b).values) row.push_back(fsb::to_string(v));
      o.rows.push_back(row);
    }
    return o;
  }
  rep::ClassFunction ch;
  if (a.source == "flats") ch = rep::perm_character_flats(a.n, a.d);
  else if (a.source == "projective") ch = rep::projective_character(a.n, a.d);
  else if (a.source == "hyperplanes") ch = rep::perm_character_hyperplanes(a.n);
  else if (a.source == "d1") ch = rep::d1_virtual_character(a.n);
  else throw UsageError("unknown character source '" + a.source + "' (expected flats, projective, hyperplanes or d1)");
  o.fields["source"] = a.source;
  if (a.source == "flats" || a.source == "projective") o.fields["d"] = a.d;
  o.fields["dimension"] = fsb::to_string(ch.dimension());
  o.text_lines.push_back("dimension: " + fsb::to_string(ch.dimension()));
  o.header = {"lambda", "mu", "multiplicity", "irreducible_dimension"};
  for (const auto& c : rep::decompose(ch))
    o.rows.push_back({c.label.lambda.to_string(), c.label.mu.to_string(), c.multiplicity.get_str(),
                      fsb::to_string(rep::irr_character(c.label).dimension())});
  return o;
}

// ---- automaton ----

struct AutomatonArgs {
  int alphabet = 1;
  std::string word;
  bool free_orbits = false;
  bool dot = false;
  int counts = -1;
  bool series = false;
};

Output cmd_automaton(const AutomatonArgs& a, const Bounds& bounds) {
  const auto cov = a.free_orbits ? words::Coverage::kFreeOrbits : words::Coverage::kAllOrbits;
  const auto w = words::parse_word(a.alphabet, a.word);
  const auto aut = words::principal_ideal_automaton(w, cov);
  Output o;
  o.fields["command"] = "automaton";
  o.fields["alphabet"] = a.alphabet;
  o.fields["word"] = w.to_string();
  o.fields["coverage"] = a.free_orbits ? "free-orbits" : "all-orbits";
  o.fields["states"] = aut.num_states();
  if (a.dot) {
    o.value = aut.to_dot();
    return o;
  }
  auto table = aut.to_table();
  while (!table.empty() && table.back() == '\n') table.pop_back();
  o.fields["table"] = table;
  o.text_lines.push_back(table);
  if (a.counts >= 0) {
    require(a.counts <= bounds.automaton_max_length, "--counts bound is " + std::to_string(bounds.automaton_max_length));
    o.header = {"length", "words"};
    const auto c = aut.count_by_length(a.counts);
    for (std::size_t k = 0; k < c.size(); ++k) o.rows.push_back({std::to_string(k), c[k].get_str()});
  }
  if (a.series) {
    const auto f = words::ideal_series(aut);
    o.fields["series"] = f.to_string();
    o.text_lines.push_back("series: " + f.to_string());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite sets with involution: flats, KL polynomials, OS algebras, characters, series"};
  app.require_subcommand(1);
  std::string format_name = "text";
  std::string config;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--config", config, "JSON file overriding size bounds")->check(CLI::ExistingFile);

  HomArgs hom;
  auto* c_hom = app.add_subcommand("hom", "equivariant surjections [-n,n] -> [-d,d]");
  c_hom->add_option("n", hom.n)->required();
  c_hom->add_option("d", hom.d)->required();
  c_hom->add_flag("--count", hom.count, "number of morphisms (default)");
  c_hom->add_flag("--list", hom.list, "every morphism");
  c_hom->add_flag("--orbits", hom.orbits, "one morphism per W_d-orbit, with its flat");

  KLArgs kl;
  auto* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial of B_n or the braid arrangement");
  c_kl->add_option("n", kl.n)->required();
  c_kl->add_option("--type", kl.type, "B or A")->check(CLI::IsMember({"B", "A"}))->capture_default_str();
  c_kl->add_option("--coeff", kl.coeff, "print one coefficient");
  c_kl->add_option("--cache", kl.cache, "JSON cache file (default $FSB_KL_CACHE)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "run a verification suite: b-small, klb, osb, groebner");
  c_ver->add_option("suite", ver.suite)->required();
  c_ver->add_option("--max-n", ver.max_n, "largest n");
  c_ver->add_option("--d", ver.d, "restrict b-small to one d");

  SeriesArgs ser;
  auto* c_ser = app.add_subcommand("series", "dimension sequences and their rational generating functions");
  c_ser->add_option("source", ser.source, "dmod or projective")->required();
  c_ser->add_option("--i", ser.i, "KL degree for dmod")->capture_default_str();
  c_ser->add_option("--d", ser.d, "target [-d,d] for projective")->capture_default_str();
  c_ser->add_option("--terms", ser.terms, "number of terms");
  c_ser->add_flag("--fit", ser.fit, "fit a rational function");
  c_ser->add_option("--pole-bound", ser.pole_bound, "override the candidate pole bound");
  c_ser->add_option("--mult-bound", ser.mult_bound, "override the multiplicity bound");

  FlatsArgs fl;
  auto* c_fl = app.add_subcommand("flats", "flats of B_n or the braid arrangement");
  c_fl->add_option("n", fl.n)->required();
  c_fl->add_option("--type", fl.type, "B or A")->check(CLI::IsMember({"B", "A"}))->capture_default_str();
  c_fl->add_flag("--list", fl.list, "every flat with its localization and contraction");

  OSArgs osa;
  auto* c_os = app.add_subcommand("os", "Orlik-Solomon dimensions and restriction maps");
  c_os->add_option("n", osa.n, "graded dimensions of S(B_n)");
  c_os->add_option("--type", osa.type, "B or A")->check(CLI::IsMember({"B", "A"}))->capture_default_str();
  c_os->add_option("--map", osa.map, "images of 1..n, e.g. \"0 1 -2\"");
  c_os->add_option("--target", osa.target, "d of the target [-d,d]");
  c_os->add_option("--degree", osa.degree, "degree of the map")->capture_default_str();
  c_os->add_flag("--dual", osa.dual, "transpose (map between dual spaces)");

  CharsArgs ch;
  auto* c_ch = app.add_subcommand("chars", "W_n characters and decompositions");
  c_ch->add_option("n", ch.n)->required();
  c_ch->add_option("--source", ch.source, "flats, projective, hyperplanes or d1")->capture_default_str();
  c_ch->add_option("--d", ch.d, "d for flats/projective")->capture_default_str();
  c_ch->add_flag("--table", ch.table, "irreducible character table");

  AutomatonArgs au;
  auto* c_au = app.add_subcommand("automaton", "automaton of the principal ideal of a word");
  c_au->add_option("word", au.word, "letters, e.g. \"1 -1 2\"")->required();
  c_au->add_option("--alphabet", au.alphabet, "n of the alphabet [-n,n]")->capture_default_str();
  c_au->add_flag("--free-orbits", au.free_orbits, "exempt the letter 0 from first-occurrence coverage");
  c_au->add_flag("--dot", au.dot, "Graphviz output");
  c_au->add_option("--counts", au.counts, "accepted words of each length up to this");
  c_au->add_flag("--series", au.series, "generating function of accepted words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const Format format = format_name == "json" ? Format::kJson : format_name == "csv" ? Format::kCsv : Format::kText;
  bool checks_pass = true;
  try {
    Bounds bounds;
    if (!config.empty()) load_bounds(config, bounds);
    Output out;
    if (*c_hom) out = cmd_hom(hom, bounds);
    else if (*c_kl) out = cmd_kl(kl, bounds);
    else if (*c_ver) out = cmd_verify(ver, checks_pass);
    else if (*c_ser) out = cmd_series(ser, bounds);
    else if (*c_fl) out = cmd_flats(fl, bounds);
    else if (*c_os) out = cmd_os(osa, bounds);
    else if (*c_ch) out = cmd_chars(ch, bounds);
    else out = cmd_automaton(au, bounds);
    render(out, format, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return checks_pass ? 0 : 1;
}
