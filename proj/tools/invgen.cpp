// invgen: exact invariable-generation probabilities, Monte Carlo estimators,
// and Galois nonsolvability certificates from one binary.
//
// Exit codes: 0 success, 1 usage or input error, 2 inconclusive or
// unsupported range.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invgen/invgen.hpp"

namespace {

using nlohmann::ordered_json;

// degrees past this need an explicitly supplied atlas file
constexpr int kAutoBuildCeiling = 25;

std::string cache_name(int ceiling, bool stretch) {
  return "invgen-atlas-N" + std::to_string(ceiling) + (stretch ? "-stretch" : "") +
         ".atlas.json";
}

// Resolution order: --atlas flag, INVGEN_ATLAS, cache in the working
// directory, fresh build (which then populates the cache).
invgen::Atlas resolve_atlas(const std::string& flag_path, int needed, bool stretch) {
  std::string path = flag_path;
  if (path.empty())
    if (const char* env = std::getenv("INVGEN_ATLAS")) path = env;
  if (!path.empty()) {
    invgen::Atlas a = invgen::Atlas::load(path);
    if (a.max_degree() < needed)
      throw invgen::CapabilityError("atlas file " + path + " stops at degree " +
                                    std::to_string(a.max_degree()) + "; degree " +
                                    std::to_string(needed) + " is required");
    return a;
  }
  if (needed > kAutoBuildCeiling)
    throw invgen::CapabilityError(
        "degree " + std::to_string(needed) + " is past the auto-build ceiling " +
        std::to_string(kAutoBuildCeiling) + "; supply --atlas with a deeper atlas");
  int ceiling = std::max(needed, stretch ? 25 : 15);
  std::string cache = cache_name(ceiling, stretch);
  if (std::filesystem::exists(cache)) {
    try {
      invgen::Atlas a = invgen::Atlas::load(cache);
      if (a.max_degree() >= needed) return a;
    } catch (const invgen::Error& e) {
      std::fprintf(stderr, "warning: rebuilding unreadable cache %s (%s)\n",
                   cache.c_str(), e.what());
    }
  }
  invgen::Atlas a = invgen::Atlas::build(ceiling);
  try {
    a.save(cache);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "warning: could not write cache %s (%s)\n", cache.c_str(),
                 e.what());
  }
  return a;
}

std::pair<int, int> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw invgen::InputError("range must look like a..b, got '" + text + "'");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw invgen::InputError("range endpoints must be integers, got '" + text + "'");
  }
  if (lo < 1 || lo > hi)
    throw invgen::InputError("range must satisfy 1 <= a <= b, got '" + text + "'");
  return {lo, hi};
}

invgen::IntPolynomial parse_poly_arg(const std::string& text) {
  if (text.find(',') == std::string::npos) return invgen::IntPolynomial::parse(text);
  std::vector<invgen::BigInt> coeffs;  // ascending
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t a = piece.find_first_not_of(" \t");
    std::size_t b = piece.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw invgen::InputError("empty coefficient in list '" + text + "'");
    piece = piece.substr(a, b - a + 1);
    try {
      coeffs.emplace_back(piece);
    } catch (const std::exception&) {
      throw invgen::InputError("bad coefficient '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return invgen::IntPolynomial(std::move(coeffs));
}

int run_table(const std::string& range, const std::string& atlas_path, bool stretch,
              const std::string& format) {
  auto [lo, hi] = range.empty() ? std::pair<int, int>{5, stretch ? 25 : 15}
                                : parse_range(range);
  invgen::Atlas atlas = resolve_atlas(atlas_path, hi, stretch);
  ordered_json rows = ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    invgen::BigRational p = invgen::exact_p2(atlas, n);
    invgen::BigRational gap = invgen::BigRational(1) / (invgen::BigRational(1) - p);
    ordered_json row;
    row["n"] = n;
    row["p_num"] = boost::multiprecision::numerator(p).str();
    row["p_den"] = boost::multiprecision::denominator(p).str();
    row["p_rounded"] = invgen::decimal_string(p, 3);
    row["inv_gap"] = invgen::decimal_string(gap, 6);
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    std::printf("%s\n", rows.dump(1).c_str());
  } else {
    std::printf("n,p_num,p_den,p_rounded,inv_gap\n");
    for (const auto& row : rows)
      std::printf("%d,%s,%s,%s,%s\n", row["n"].get<int>(),
                  row["p_num"].get<std::string>().c_str(),
                  row["p_den"].get<std::string>().c_str(),
                  row["p_rounded"].get<std::string>().c_str(),
                  row["inv_gap"].get<std::string>().c_str());
  }
  return 0;
}

int run_certify(const std::string& poly_text, int budget,
                std::optional<std::uint64_t> seed, const std::string& atlas_path) {
  invgen::IntPolynomial f = parse_poly_arg(poly_text);
  int n = f.degree();
  invgen::Atlas atlas = resolve_atlas(atlas_path, n <= 4 ? 1 : n, false);
  invgen::Certificate cert = invgen::certify_nonsolvable(f, budget, atlas, seed);
  std::fputs(cert.transcript().c_str(), stderr);
  std::printf("%s\n", cert.to_json().dump(1).c_str());
  return cert.nonsolvable ? 0 : 2;
}

int run_estimate(int n, int trials, std::uint64_t seed, const std::string& atlas_path,
                 bool stretch, const std::string& format) {
  invgen::Atlas atlas = resolve_atlas(atlas_path, n, stretch);
  invgen::TrialStats st = invgen::estimate_mean_N(atlas, n, trials, seed);
  if (format == "json") {
    ordered_json out;
    out["n"] = n;
    out["trials"] = st.trials;
    out["seed"] = st.seed;
    out["mean"] = st.mean;
    out["std_error"] = st.std_error;
    ordered_json hist = ordered_json::object();
    for (const auto& [draws, count] : st.histogram)
      hist[std::to_string(draws)] = count;
    out["histogram"] = std::move(hist);
    std::printf("%s\n", out.dump(1).c_str());
  } else {
    std::printf("n,trials,seed,mean,std_error\n");
    std::printf("%d,%d,%llu,%.6f,%.6f\n", n, st.trials,
                static_cast<unsigned long long>(st.seed), st.mean, st.std_error);
  }
  return 0;
}

int run_stats(int n, int trials, std::uint64_t seed, const std::string& format) {
  invgen::ConditionStats cs =
      invgen::condition_stats(n, static_cast<std::uint64_t>(trials), seed);
  if (format == "json") {
    ordered_json out;
    out["n"] = cs.n;
    out["trials"] = cs.trials;
    out["seed"] = cs.seed;
    out["window_lo"] = cs.window_lo;
    out["window_hi"] = cs.window_hi;
    out["count_a"] = cs.count_a;
    out["prop_a"] = cs.prop_a;
    out["se_a"] = cs.se_a;
    out["count_b"] = cs.count_b;
    out["prop_b"] = cs.prop_b;
    out["se_b"] = cs.se_b;
    std::printf("%s\n", out.dump(1).c_str());
  } else {
    std::printf("n,trials,seed,window_lo,window_hi,count_a,prop_a,se_a,count_b,prop_b,se_b\n");
    std::printf("%d,%llu,%llu,%d,%d,%llu,%.6f,%.6f,%llu,%.6f,%.6f\n", cs.n,
                static_cast<unsigned long long>(cs.trials),
                static_cast<unsigned long long>(cs.seed), cs.window_lo, cs.window_hi,
                static_cast<unsigned long long>(cs.count_a), cs.prop_a, cs.se_a,
                static_cast<unsigned long long>(cs.count_b), cs.prop_b, cs.se_b);
  }
  return 0;
}

int run_atlas(int ceiling, bool stretch, const std::string& out_path,
              const std::string& atlas_path, const std::string& format) {
  invgen::Atlas atlas = [&] {
    if (!atlas_path.empty()) return invgen::Atlas::load(atlas_path);
    int c = ceiling > 0 ? ceiling : (stretch ? 25 : 15);
    invgen::Atlas a = invgen::Atlas::build(c);
    a.save(out_path.empty() ? cache_name(c, stretch) : out_path);
    return a;
  }();
  if (format == "json") {
    ordered_json out;
    out["max_degree"] = atlas.max_degree();
    out["degrees"] = ordered_json::array();
    for (int n = 1; n <= atlas.max_degree(); ++n)
      out["degrees"].push_back({{"degree", n},
                                {"transitive", atlas.transitive_rows(n).size()},
                                {"general", atlas.rows(n).size()}});
    std::printf("%s\n", out.dump(1).c_str());
  } else if (format == "csv") {
    std::printf("degree,transitive,general\n");
    for (int n = 1; n <= atlas.max_degree(); ++n)
      std::printf("%d,%zu,%zu\n", n, atlas.transitive_rows(n).size(),
                  atlas.rows(n).size());
  } else {
    std::printf("atlas ceiling %d\n", atlas.max_degree());
    for (int n = 1; n <= atlas.max_degree(); ++n)
      std::printf("  degree %2d: %3zu transitive, %3zu maximal solvable families\n", n,
                  atlas.transitive_rows(n).size(), atlas.rows(n).size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact probabilities of invariably generating nonsolvable groups, "
               "plus Galois nonsolvability certificates"};
  app.require_subcommand(1);

  std::string range, atlas_path, format = "csv", poly_text, out_path;
  int trials = 10000, budget = 200, n = 0, ceiling = 0;
  std::uint64_t seed = 1;
  bool stretch = false;

  CLI::App* tbl = app.add_subcommand(
      "table", "exact P(two uniform permutations invariably generate nonsolvably)");
  tbl->add_option("--range", range, "degree range a..b (default 5..15, stretch 5..25)");
  tbl->add_option("--atlas", atlas_path, "atlas file (overrides INVGEN_ATLAS)");
  tbl->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tbl->add_flag("--stretch", stretch, "extend the default ceiling to degree 25");

  CLI::App* cert = app.add_subcommand(
      "certify", "certify nonsolvability of a Galois group over Q");
  cert->add_option("poly", poly_text,
                   "polynomial, expression or ascending coefficient list")
      ->required();
  cert->add_option("--budget", budget, "usable primes to examine before giving up");
  CLI::Option* cert_seed = cert->add_option(
      "--seed", seed, "randomize the prime sequence with this seed");
  cert->add_option("--atlas", atlas_path, "atlas file (overrides INVGEN_ATLAS)");

  CLI::App* est = app.add_subcommand(
      "estimate", "Monte Carlo mean of the draw count N until nonsolvability");
  est->add_option("n", n, "degree of the symmetric group")->required();
  est->add_option("--trials", trials, "Monte Carlo trials");
  est->add_option("--seed", seed, "base seed, one derived stream per trial");
  est->add_option("--atlas", atlas_path, "atlas file (overrides INVGEN_ATLAS)");
  est->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  est->add_flag("--stretch", stretch, "extend the default ceiling to degree 25");

  CLI::App* sts = app.add_subcommand(
      "stats", "sampled proportions of the two large-cycle conditions");
  sts->add_option("n", n, "degree of the symmetric group")->required();
  sts->add_option("--trials", trials, "sampled permutations");
  sts->add_option("--seed", seed, "sampling seed");
  sts->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* atl = app.add_subcommand("atlas",
                                     "build, cache, or inspect a cycle-type atlas");
  atl->add_option("--ceiling", ceiling, "build up to this degree");
  atl->add_flag("--stretch", stretch, "default ceiling 25 instead of 15");
  atl->add_option("--out", out_path, "where to write the built atlas");
  atl->add_option("--atlas", atlas_path, "inspect this file instead of building");
  atl->add_option("--format", format, "csv or json (default: text summary)")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*tbl) return run_table(range, atlas_path, stretch, format);
    if (*cert)
      return run_certify(poly_text, budget,
                         cert_seed->count() ? std::optional<std::uint64_t>(seed)
                                            : std::nullopt,
                         atlas_path);
    if (*est) return run_estimate(n, trials, seed, atlas_path, stretch, format);
    if (*sts) return run_stats(n, trials, seed, format);
    if (*atl)
      return run_atlas(ceiling, stretch, out_path, atlas_path,
                       atl->count("--format") ? format : "text");
  } catch (const invgen::CapabilityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const invgen::SizeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const invgen::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
