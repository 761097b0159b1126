// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "rcc11/rcc11.hpp"

using namespace rcc11;
using B = BaseRel;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string failed_checks(const verify::SuiteReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed && !c.informational) s += (s.empty() ? "" : " ") + c.name;
  return s.empty() ? "all checks pass" : "failed: " + s;
}

Outcome suite(const char* name, const verify::Options& o = {}) {
  const auto r = verify::run_suite(name, o);
  return {r->passed(), std::string(name) + ", " + failed_checks(*r)};
}

Outcome derivation() {
  std::ifstream in(std::string(RCC11_TEST_DATA) + "/rcc11_table.txt", std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  const CompTable transcribed = table_from_string(ss.str());
  const auto t0 = Clock::now();
  const CompTable derived = derive_table(standard_generators());
  const double dt = seconds_since(t0);
  int equal = 0;
  for (B r : kAllBaseRels)
    for (B s : kAllBaseRels)
      if (derived.entries(r, s) == transcribed.entries(r, s)) ++equal;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/121 cells equal, derive %.3fs", equal, dt);
  return {equal == 121 && dt < 1.0, buf};
}

Outcome reduction() {
  const auto a = reduction_stats(calculus(CalculusName::RCC11));
  const auto b = reduction_stats(calculus(CalculusName::RCC7));
  const bool ok = a.total == 15 && b.total == 6 && a.ratio_num * 8 < a.ratio_den && b.ratio_num * 8 < b.ratio_den;
  return {ok, "RCC11 T=" + std::to_string(a.total) + " (" + std::to_string(a.ratio_num) + "/" +
                  std::to_string(a.ratio_den) + "), RCC7 T=" + std::to_string(b.total) + " (" +
                  std::to_string(b.ratio_num) + "/" + std::to_string(b.ratio_den) + ")"};
}

Outcome timed_suite(const char* name, double limit) {
  const auto t0 = Clock::now();
  Outcome o = suite(name);
  const double dt = seconds_since(t0);
  char buf[48];
  std::snprintf(buf, sizeof buf, ", %.1fs (limit %.0fs)", dt, limit);
  o.detail += buf;
  o.passed = o.passed && dt < limit;
  return o;
}

Outcome matrices() {
  // row-major ii ib ie / bi bb be / ei eb ee, as printed
  const std::pair<B, const char*> printed[] = {
      {B::EQ, "1,0,0,0,1,0,0,0,1"},    {B::TPP, "1,0,0,1,1,0,1,1,1"}, {B::TPPI, "1,1,1,0,1,1,0,0,1"},
      {B::NTPP, "1,0,0,1,0,0,1,1,1"},  {B::NTPPI, "1,1,1,0,0,1,0,0,1"}, {B::PON, "1,1,1,1,1,1,1,1,1"},
      {B::PODY, "1,1,1,1,1,0,1,0,0"},  {B::PODZ, "1,1,1,1,0,0,1,0,0"}, {B::ECN, "0,0,1,0,1,1,1,1,1"},
      {B::ECD, "0,0,1,0,1,0,1,0,0"},   {B::DC, "0,0,1,0,0,1,1,1,1"},
  };
  int equal = 0;
  for (const auto& [r, m] : printed) {
    bool all = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto [a, b] = disk::generate_pair(r, seed);
      all = all && disk::nine_matrix(a, b).to_csv() == m;
    }
    if (all) ++equal;
  }
  return {equal == 11, std::to_string(equal) + "/11 relations match on 100 generated pairs each"};
}

Outcome solver() {
  netcsp::Network a(3);
  a.set(0, 1, RelSet(B::TPP));
  a.set(1, 2, RelSet(B::NTPP));
  const auto ca = netcsp::closure(a);
  const bool refined = ca && ca->at(0, 2) == RelSet(B::NTPP);

  netcsp::Network e(3);
  e.set(0, 1, RelSet(B::ECD));
  e.set(1, 2, RelSet(B::ECD));
  e.set(0, 2, RelSet(B::ECD));
  const bool inconsistent = !netcsp::closure(e);

  Rng rng(0);
  int idempotent = 0;
  for (int i = 0; i < 100; ++i) {
    const auto c = netcsp::closure(netcsp::random_network(rng, 5));
    if (!c) {
      ++idempotent;
      continue;
    }
    const auto again = netcsp::closure(*c);
    if (again && *again == *c) ++idempotent;
  }
  return {refined && inconsistent && idempotent == 100,
          std::string("TPP/NTPP ") + (refined ? "refined to NTPP" : "not refined") + ", ECD triangle " +
              (inconsistent ? "inconsistent" : "closed") + ", idempotent " + std::to_string(idempotent) + "/100"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"table derivation", derivation},
      {"reduction arithmetic", reduction},
      {"dual and converse laws", [] { return timed_suite("dual-laws", 30); }},
      {"9-intersection matrices", matrices},
      {"disk consistency", [] { return suite("disk-soundness"); }},
      {"disk extensionality", [] { return timed_suite("disk-extensionality", 600); }},
      {"B_omega axioms", [] { return suite("bw-axioms"); }},
      {"B_omega chains", [] { return suite("bw-chains"); }},
      {"B_omega PODY counterexample", [] { return suite("bw-pody"); }},
      {"hole chains", [] { return suite("holes-1d"); }},
      {"solver", solver},
  };
  int failures = 0, n = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %-28s %s  %.2fs  %s\n", ++n, name, o.passed ? "PASS" : "FAIL", seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%d criteria pass\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
