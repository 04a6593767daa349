// Acceptance harness: one line of PASS/FAIL per criterion, exit code equal to
// the number of failures. Run with the CLI binary path as argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "invgen/invgen.hpp"

using namespace invgen;

namespace {

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" [threw: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %2d  %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              secs, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

const Atlas& stretch_atlas() {
  static Atlas a = Atlas::build(25);
  return a;
}

PermGroup sym(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                       Permutation::from_cycles(n, {all})});
}

PermGroup cyclic(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {all})});
}

std::set<std::string> type_strings(const std::vector<CycleType>& ts) {
  std::set<std::string> out;
  for (const CycleType& t : ts) out.insert(t.str());
  return out;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static std::string dir = [] {
    std::string tmpl = (std::filesystem::temp_directory_path() / "invgen-acc-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) std::abort();
    return std::string(buf.data());
  }();
  RunResult r;
  std::string cmd = "cd " + dir + " && " + g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char chunk[4096];
  std::size_t got;
  while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) r.out.append(chunk, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool table_matches(int lo, int hi, const std::vector<const char*>& expected) {
  for (int n = lo; n <= hi; ++n) {
    std::string got = decimal_string(exact_p2(stretch_atlas(), n), 3);
    if (got != expected[static_cast<std::size_t>(n - lo)]) {
      std::fprintf(stderr, "  n=%d: computed %s, reference %s\n", n, got.c_str(),
                   expected[static_cast<std::size_t>(n - lo)]);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  criterion(1, "exact P(N_n=2) for n=5..15 matches the reference to 3 decimals", [] {
    auto start = std::chrono::steady_clock::now();
    bool ok = table_matches(5, 15,
                            {"0.250", "0.244", "0.395", "0.380", "0.461", "0.543",
                             "0.601", "0.607", "0.660", "0.700", "0.723"});
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && secs < 600.0;
  });

  criterion(2, "stretch rows n=16..25 match the reference to 3 decimals", [] {
    return table_matches(16, 25,
                         {"0.730", "0.764", "0.788", "0.810", "0.821", "0.834",
                          "0.851", "0.864", "0.870", "0.885"});
  });

  criterion(3, "atlas rows equal exhaustive solvable enumeration for n<=7", [] {
    for (int n = 2; n <= 7; ++n) {
      std::set<std::set<std::string>> oracle, mine;
      for (const auto& s : all_solvable_subgroup_ct_sets(n))
        oracle.insert(type_strings(s));
      for (const AtlasRow& r : stretch_atlas().rows(n)) mine.insert(type_strings(r.types));
      if (oracle != mine) return false;
    }
    return true;
  });

  criterion(4, "wreath type law equals brute-force wreath products on six pairs", [] {
    std::vector<std::pair<PermGroup, PermGroup>> corpus;
    corpus.emplace_back(sym(2), sym(3));
    corpus.emplace_back(sym(3), sym(2));
    corpus.emplace_back(cyclic(4), sym(2));
    corpus.emplace_back(sym(2), cyclic(5));
    corpus.emplace_back(cyclic(5), sym(3));
    corpus.emplace_back(sym(4), sym(3));
    for (const auto& [u, v] : corpus) {
      if (type_strings(wreath_ct(u.cycle_type_set(), v.cycle_type_set())) !=
          type_strings(wreath_product(u, v).cycle_type_set()))
        return false;
    }
    return true;
  });

  criterion(5, "conjugacy class sizes sum to n! for n<=12", [] {
    for (int n = 1; n <= 12; ++n) {
      BigInt total = 0;
      for (const CycleType& t : enumerate_partitions(n)) total += class_size(t);
      if (total != factorial(static_cast<unsigned>(n))) return false;
    }
    return true;
  });

  criterion(6, "pattern probabilities in S_n (n<=10) never exceed the product bound", [] {
    for (int n = 1; n <= 10; ++n) {
      BigInt nfact = factorial(static_cast<unsigned>(n));
      const PartitionTable& pt = partition_table(n);
      for (int k = 1; k <= n; ++k) {
        for (const CycleType& mu : enumerate_partitions(k)) {
          std::vector<int> mult(static_cast<std::size_t>(k), 0);
          for (int part : mu.parts()) ++mult[static_cast<std::size_t>(part - 1)];
          BigInt hits = 0;
          for (const CycleType& lam : pt.types()) {
            bool super = true;
            for (int i = 1; i <= k; ++i)
              if (lam.multiplicity(i) < mult[static_cast<std::size_t>(i - 1)]) {
                super = false;
                break;
              }
            if (super) hits += class_size(lam);
          }
          if (BigRational(hits, nfact) > min_pattern_probability_bound(mult))
            return false;
        }
      }
    }
    return true;
  });

  criterion(7, "CLI certifies x^5-x-1 with primes {2,3} in under a second; "
               "ten solvable polynomials never certify at budget 500", [] {
    if (g_cli_path.empty()) {
      std::fprintf(stderr, "  no CLI path supplied\n");
      return false;
    }
    auto start = std::chrono::steady_clock::now();
    RunResult r = run_cli("certify 'x^5 - x - 1'");
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.exit_code != 0 || secs >= 1.0) return false;
    auto cert = nlohmann::json::parse(r.out, nullptr, false);
    if (cert.is_discarded() || cert["conclusion"] != "nonsolvable") return false;
    if (cert["primes"].size() != 2 || cert["primes"][0]["p"] != 2 ||
        cert["primes"][1]["p"] != 3)
      return false;

    const char* corpus[] = {
        "x^2 + 1",
        "x^3 - 2",
        "x^4 - x - 1",
        "x^5 - 2",
        "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1",
        "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
        "x^6 + x^3 + 1",
        "x^7 - 2",
        "x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
        "x^12 + x^11 + x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
    };
    for (const char* poly : corpus) {
      Certificate c =
          certify_nonsolvable(IntPolynomial::parse(poly), 500, stretch_atlas());
      if (c.nonsolvable) {
        std::fprintf(stderr, "  false certificate for %s\n", poly);
        return false;
      }
    }
    return true;
  });

  criterion(8, "Monte Carlo agrees with exact values (n=5..10) and E[N] at n=25 "
               "lands in [2.10, 2.30]", [] {
    const int trials = 100000;
    for (int n = 5; n <= 10; ++n) {
      TrialStats st = estimate_mean_N(stretch_atlas(), n, trials, 12345);
      double expect = to_double(exact_p2(stretch_atlas(), n));
      double observed = st.histogram.count(2)
                            ? static_cast<double>(st.histogram.at(2)) / trials
                            : 0.0;
      double se = std::sqrt(expect * (1.0 - expect) / trials);
      if (std::abs(observed - expect) > 5.0 * se) {
        std::fprintf(stderr, "  n=%d: observed %.5f, exact %.5f, se %.5f\n", n,
                     observed, expect, se);
        return false;
      }
    }
    TrialStats st25 = estimate_mean_N(stretch_atlas(), 25, 10000, 12345);
    if (st25.mean < 2.10 || st25.mean > 2.30) {
      std::fprintf(stderr, "  E[N] at 25: %.4f\n", st25.mean);
      return false;
    }
    return true;
  });

  criterion(9, "Frobenius densities of x^3-2 over primes <= 10^6 sit within 0.05 "
               "of (1/6, 1/2, 1/3)", [] {
    FrequencyReport rep =
        frobenius_frequencies(IntPolynomial::parse("x^3 - 2"), 1000000);
    double d111 = 0, d21 = 0, d3 = 0;
    for (const FrequencyEntry& e : rep.entries) {
      if (e.pattern.str() == "[1,1,1]") d111 = e.density;
      if (e.pattern.str() == "[2,1]") d21 = e.density;
      if (e.pattern.str() == "[3]") d3 = e.density;
    }
    return std::abs(d111 - 1.0 / 6) < 0.05 && std::abs(d21 - 0.5) < 0.05 &&
           std::abs(d3 - 1.0 / 3) < 0.05;
  });

  criterion(10, "exact 1 - P(N_n=2) is strictly decreasing for n=8..15", [] {
    for (int n = 8; n < 15; ++n) {
      BigRational gap_here = BigRational(1) - exact_p2(stretch_atlas(), n);
      BigRational gap_next = BigRational(1) - exact_p2(stretch_atlas(), n + 1);
      if (!(gap_next < gap_here)) return false;
    }
    return true;
  });

  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
