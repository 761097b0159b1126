#pragma once

// Verification suites. Each returns a report with its seed, parameters and
// one entry per check; the CLI and the acceptance binary both run these.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcc11/calculus.hpp"
#include "rcc11/comp_table.hpp"
#include "rcc11/derive.hpp"
#include "rcc11/disk/classify.hpp"
#include "rcc11/disk/generate.hpp"
#include "rcc11/disk/witness.hpp"
#include "rcc11/dyadic.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/interval1d.hpp"
#include "rcc11/random.hpp"
#include "rcc11/relation.hpp"

namespace rcc11::verify {

using nlohmann::json;

struct Check {
  std::string name;
  bool passed = true;
  json detail = json::object();
  bool informational = false;  // reported, never fails the suite
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  json params = json::object();
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.passed; });
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  json to_json() const {
    json out;
    out["suite"] = suite;
    out["seed"] = seed;
    out["params"] = params;
    out["checks"] = json::array();
    for (const auto& c : checks) {
      json j = c.detail;
      j["name"] = c.name;
      j["passed"] = c.passed;
      if (c.informational) j["informational"] = true;
      out["checks"].push_back(std::move(j));
    }
    out["passed"] = passed();
    return out;
  }
};

struct Options {
  std::uint64_t seed = 0;
  std::optional<int> depth;
  std::optional<int> trials;
  std::optional<int> budget;
  std::optional<int> k;
};

inline constexpr std::array<std::string_view, 7> kSuiteNames = {
    "disk-soundness", "disk-extensionality", "bw-axioms", "bw-chains", "bw-pody", "holes-1d", "dual-laws"};

struct Triad {
  BaseRel r, s, t;  // t in cell(r, s)
};

inline std::string triad_name(const Triad& x) {
  return std::string(token(x.r)) + "," + std::string(token(x.s)) + "->" + std::string(token(x.t));
}

/// Every (r, s, t) with t an entry of the golden cell (r, s), in table order.
inline std::vector<Triad> all_triads() {
  std::vector<Triad> out;
  for (BaseRel r : kAllBaseRels)
    for (BaseRel s : kAllBaseRels)
      for (BaseRel t : golden_table().entries(r, s)) out.push_back({r, s, t});
  return out;
}

/// Marked entries of the fifteen generator cells.
inline std::vector<Triad> marked_generator_triads() {
  std::vector<Triad> out;
  for (const auto& [r, s] : kGeneratorPairs)
    for (BaseRel t : golden_table().cell(r, s).marked) out.push_back({r, s, t});
  return out;
}

/// Positive triads with a PODY, PODZ or ECD entry whose witness is built
/// explicitly; given as (r, s, t) with t in cell(r, s).
inline const std::vector<Triad>& positive_dual_triads() {
  using B = BaseRel;
  static const std::vector<Triad> v = {
      {B::TPPI, B::TPP, B::PODZ},  {B::TPPI, B::NTPP, B::PODZ}, {B::TPPI, B::PON, B::PODY},
      {B::TPPI, B::PON, B::PODZ},  {B::NTPPI, B::PON, B::PODY}, {B::NTPPI, B::PON, B::PODZ},
      {B::PON, B::PON, B::PODY},   {B::PON, B::PON, B::PODZ},   {B::PON, B::PON, B::ECD},
  };
  return v;
}

namespace detail {

inline std::uint64_t triad_seed(std::uint64_t seed, const Triad& x, int instance) {
  const auto code = static_cast<std::uint64_t>(index_of(x.r) * 121 + index_of(x.s) * 11 + index_of(x.t));
  return mix_seed(mix_seed(seed, code), static_cast<std::uint64_t>(instance));
}

struct WitnessTally {
  long attempts = 0;
  long found = 0;
  long exhausted = 0;
  long candidates = 0;
  int max_candidates = 0;
  json failures = json::array();

  void add(const Triad& x, const disk::DiskRegion& a, const disk::DiskRegion& c, const disk::WitnessResult& w) {
    ++attempts;
    candidates += w.candidates;
    max_candidates = std::max(max_candidates, w.candidates);
    bool ok = false;
    if (w.z) ok = disk::classify(a, *w.z) == x.r && disk::classify(*w.z, c) == x.s;
    if (ok) {
      ++found;
      return;
    }
    ++exhausted;
    if (failures.size() < 10)
      failures.push_back({{"triad", triad_name(x)}, {"a", disk::to_string(a)}, {"c", disk::to_string(c)}});
  }
  json to_json() const {
    return {{"attempts", attempts},   {"found", found},
            {"exhausted", exhausted}, {"candidates", candidates},
            {"max_candidates", max_candidates}, {"failures", failures}};
  }
};

// One generated instance of t, and a witness search for it.
inline disk::WitnessResult witness_instance(const Triad& x, std::uint64_t seed, int budget, disk::DiskRegion& a,
                                            disk::DiskRegion& c) {
  auto [pa, pc] = disk::generate_pair(x.t, seed);
  a = pa;
  c = pc;
  return disk::find_witness(x.r, x.s, a, c, budget, seed);
}

}  // namespace detail

// --- disk-soundness ---------------------------------------------------------

inline SuiteReport disk_soundness(const Options& o) {
  const int trials = o.trials.value_or(10000);
  const int budget = o.budget.value_or(disk::kDefaultWitnessBudget);
  SuiteReport rep{"disk-soundness", o.seed, {{"trials", trials}, {"budget", budget}}, {}};

  // random triples a r b, b s c
  Rng rng(o.seed);
  long violations = 0, skipped = 0, triples = 0;
  std::map<std::pair<int, int>, RelSet> seen;
  json bad = json::array();
  for (int i = 0; i < trials; ++i) {
    const BaseRel r = rng.pick(kAllBaseRels), s = rng.pick(kAllBaseRels);
    try {
      const disk::DiskRegion b = disk::random_region(rng);
      const disk::DiskRegion a = disk::generate_related(rng, b, r);
      const disk::DiskRegion c = disk::generate_related(rng, b, converse(s));
      const BaseRel t = disk::classify(a, c);
      ++triples;
      seen[{index_of(r), index_of(s)}].insert(t);
      if (!golden_table().entries(r, s).contains(t)) {
        ++violations;
        if (bad.size() < 10)
          bad.push_back({{"a", disk::to_string(a)}, {"b", disk::to_string(b)}, {"c", disk::to_string(c)}});
      }
    } catch (const std::logic_error&) {
      ++skipped;
    }
  }
  long observed_entries = 0;
  for (const auto& [key, set] : seen) observed_entries += set.size();
  const long total_entries = static_cast<long>(all_triads().size());
  rep.checks.push_back({"random-triples-sound",
                        violations == 0 && triples >= trials,
                        {{"triples", triples}, {"skipped", skipped}, {"violations", violations}, {"examples", bad}}});
  rep.checks.push_back({"random-entry-coverage",
                        true,
                        {{"observed_entries", observed_entries}, {"total_entries", total_entries}},
                        true});

  // every entry realized by an explicit triple: a pair for t, then a witness
  long covered = 0, unsound = 0;
  json missing = json::array();
  for (const Triad& x : all_triads()) {
    bool done = false;
    for (int inst = 0; inst < 3 && !done; ++inst) {
      disk::DiskRegion a = disk::make_disk(0, 0, 1), c = a;
      const auto w = detail::witness_instance(x, detail::triad_seed(o.seed, x, inst), budget, a, c);
      if (!w.z) continue;
      const BaseRel ab = disk::classify(a, *w.z), bc = disk::classify(*w.z, c), ac = disk::classify(a, c);
      if (!golden_table().entries(ab, bc).contains(ac)) ++unsound;
      done = ab == x.r && bc == x.s && ac == x.t;
    }
    if (done)
      ++covered;
    else if (missing.size() < 20)
      missing.push_back(triad_name(x));
  }
  rep.checks.push_back({"constructed-entry-coverage",
                        covered == total_entries && unsound == 0,
                        {{"covered", covered}, {"total_entries", total_entries}, {"unsound", unsound}, {"missing", missing}}});
  return rep;
}

// --- disk-extensionality ----------------------------------------------------

inline SuiteReport disk_extensionality(const Options& o) {
  const int instances = o.trials.value_or(10);
  const int budget = o.budget.value_or(disk::kDefaultWitnessBudget);
  SuiteReport rep{"disk-extensionality", o.seed, {{"instances", instances}, {"budget", budget}}, {}};

  const auto triads = all_triads();
  const auto fig = marked_generator_triads();
  auto is_fig = [&](const Triad& x) {
    return std::any_of(fig.begin(), fig.end(), [&](const Triad& f) { return f.r == x.r && f.s == x.s && f.t == x.t; });
  };
  detail::WitnessTally all, marked;
  for (const Triad& x : triads)
    for (int inst = 0; inst < instances; ++inst) {
      disk::DiskRegion a = disk::make_disk(0, 0, 1), c = a;
      const auto w = detail::witness_instance(x, detail::triad_seed(o.seed, x, inst), budget, a, c);
      all.add(x, a, c, w);
      if (is_fig(x)) marked.add(x, a, c, w);
    }
  json all_j = all.to_json();
  all_j["triads"] = triads.size();
  rep.checks.push_back({"all-triads", all.exhausted == 0 && instances >= 1, all_j});
  json fig_j = marked.to_json();
  json names = json::array();
  for (const auto& f : fig) names.push_back(triad_name(f));
  fig_j["triads"] = names;
  rep.checks.push_back({"marked-generator-triads", fig.size() == 10 && marked.exhausted == 0, fig_j});
  return rep;
}

// --- bw-axioms --------------------------------------------------------------

inline SuiteReport bw_axioms(const Options& o) {
  const int depth = o.depth.value_or(3);
  SuiteReport rep{"bw-axioms", o.seed, {{"depth", depth}}, {}};
  const dyadic::AxiomReport ax = dyadic::check_axioms(depth);
  rep.params["witness_depth"] = ax.witness_depth;
  for (const auto& a : ax.axioms)
    rep.checks.push_back({a.name, a.passed(), {{"checked", a.checked}, {"failures", a.failures}}});

  // JEPD and table soundness over every triple at this depth
  const auto regions = dyadic::model(depth).all_regions();
  const std::size_t n = regions.size();
  std::vector<BaseRel> rel(n * n);
  long jepd_failures = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        rel[i * n + j] = dyadic::classify11(regions[i], regions[j]);
      } catch (const std::logic_error&) {
        ++jepd_failures;
      }
    }
  rep.checks.push_back({"jepd", jepd_failures == 0, {{"pairs", n * n}, {"failures", jepd_failures}}});
  long unsound = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!golden_table().entries(rel[i * n + j], rel[j * n + k]).contains(rel[i * n + k])) ++unsound;
  rep.checks.push_back({"table-soundness", unsound == 0, {{"triples", n * n * n}, {"violations", unsound}}});

  // C-extensionality: distinct regions with identical contact profiles
  long twins = 0;
  const dyadic::BwModel& m = dyadic::model(depth);
  std::map<std::vector<bool>, long> profiles;
  for (const auto& x : regions) {
    std::vector<bool> p;
    for (const auto& z : regions) p.push_back(m.contact(z, x));
    ++profiles[p];
  }
  for (const auto& [p, count] : profiles) twins += count * (count - 1) / 2;
  rep.checks.push_back({"c-extensionality", twins == 0, {{"regions", n}, {"indistinguishable_pairs", twins}}, true});
  return rep;
}

// --- bw-chains --------------------------------------------------------------

inline SuiteReport bw_chains(const Options& o) {
  const int kmax = o.k.value_or(2);
  const int depth = o.depth.value_or(4);
  const int samples = o.trials.value_or(2000);
  constexpr int kChainDepth = 5;
  constexpr int kLongest = 4;
  SuiteReport rep{"bw-chains", o.seed, {{"k", kmax}, {"depth", depth}, {"trials", samples}}, {}};

  long links = 0, bad_links = 0;
  for (int k = 1; k <= kLongest; ++k) {
    const auto chain = dyadic::standard_chain(k, kChainDepth);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      ++links;
      if (dyadic::classify11(chain[i], chain[i + 1]) != BaseRel::NTPP) ++bad_links;
    }
  }
  rep.checks.push_back(
      {"standard-chain-links", bad_links == 0, {{"k_max", kLongest}, {"depth", kChainDepth}, {"links", links}, {"failures", bad_links}}});

  const dyadic::BwRegion top = dyadic::cell("0", depth);
  json rows = json::array();
  bool ok = true;
  for (int k = 1; k <= kmax; ++k) {
    const dyadic::BwRegion bottom = dyadic::cell(std::string(static_cast<std::size_t>(k + 1), '0'), depth);
    const bool in_k = dyadic::chain_exists(bottom, top, k);
    const bool in_k1 = dyadic::chain_exists(bottom, top, k + 1);
    ok = ok && in_k && !in_k1;
    rows.push_back({{"k", k}, {"from", dyadic::to_string(bottom)}, {"steps_k", in_k}, {"steps_k_plus_1", in_k1}});
  }
  rep.checks.push_back({"chain-strictness", ok, {{"rows", rows}}});

  // λ-descent on random x_t NTPP a inside x_0
  Rng rng(o.seed);
  const dyadic::Mask left = dyadic::cell_mask("0", depth);
  long applicable = 0, descent_failures = 0;
  for (int i = 0; i < samples; ++i) {
    dyadic::Mask am = 0;
    while (am == 0) am = static_cast<dyadic::Mask>(rng.uniform(0, INT64_MAX)) & left;
    const dyadic::BwRegion a(depth, am);
    std::string t = "0";
    const auto len = rng.uniform(1, depth - 1);
    for (int j = 0; j < len; ++j) t += rng.coin() ? '1' : '0';
    if (dyadic::classify11(dyadic::cell(t, depth), a) != BaseRel::NTPP) continue;
    ++applicable;
    if (!dyadic::lambda_descent_holds(t, a)) ++descent_failures;
  }
  rep.checks.push_back({"lambda-descent",
                        applicable > 0 && descent_failures == 0,
                        {{"samples", samples}, {"applicable", applicable}, {"failures", descent_failures}}});
  return rep;
}

// --- bw-pody ----------------------------------------------------------------

inline SuiteReport bw_pody(const Options& o) {
  const int instances = o.trials.value_or(10);
  const int budget = o.budget.value_or(disk::kDefaultWitnessBudget);
  constexpr int kSearchDepth = 3;
  SuiteReport rep{"bw-pody", o.seed, {{"instances", instances}, {"budget", budget}, {"search_depth", kSearchDepth}}, {}};

  for (int depth : {3, 4}) {
    const auto p = dyadic::pody_counterexample(depth);
    const bool ok = p.relation_ac == BaseRel::PODY && p.witnesses_tpp == 0 && p.witnesses_ntpp == 0 &&
                    p.control_relation == BaseRel::PODZ && p.control_witness;
    rep.checks.push_back({"counterexample-depth-" + std::to_string(depth),
                          ok,
                          {{"relation_ac", token(p.relation_ac)},
                           {"candidates", p.candidates},
                           {"witnesses_tpp", p.witnesses_tpp},
                           {"witnesses_ntpp", p.witnesses_ntpp},
                           {"control_relation", token(p.control_relation)},
                           {"control_witness", p.control_witness}}});
  }

  // Positive triads: a witness in B_ω at the search depth, and on every
  // generated disk instance.
  const auto regions = dyadic::model(kSearchDepth).all_regions();
  const std::size_t n = regions.size();
  std::vector<BaseRel> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = dyadic::classify11(regions[i], regions[j]);
  json rows = json::array();
  bool all_ok = true;
  for (const Triad& x : positive_dual_triads()) {
    std::optional<std::string> bw;
    for (std::size_t i = 0; i < n && !bw; ++i)
      for (std::size_t k = 0; k < n && !bw; ++k) {
        if (rel[i * n + k] != x.t) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (rel[i * n + j] == x.r && rel[j * n + k] == x.s) {
            bw = dyadic::to_string(regions[i]) + " / " + dyadic::to_string(regions[j]) + " / " +
                 dyadic::to_string(regions[k]);
            break;
          }
      }
    detail::WitnessTally t;
    for (int inst = 0; inst < instances; ++inst) {
      disk::DiskRegion a = disk::make_disk(0, 0, 1), c = a;
      const auto w = detail::witness_instance(x, detail::triad_seed(o.seed, x, inst), budget, a, c);
      t.add(x, a, c, w);
    }
    const bool ok = bw.has_value() && t.exhausted == 0 && instances >= 1;
    all_ok = all_ok && ok;
    rows.push_back({{"triad", triad_name(x)},
                    {"bw_witness", bw ? json(*bw) : json(nullptr)},
                    {"disk_found", t.found},
                    {"disk_exhausted", t.exhausted}});
  }
  rep.checks.push_back({"positive-triads", all_ok, {{"rows", rows}}});
  return rep;
}

// --- holes-1d ---------------------------------------------------------------

inline SuiteReport holes_1d(const Options& o) {
  const int trials = o.trials.value_or(1000);
  constexpr int kMaxK = 3;
  SuiteReport rep{"holes-1d", o.seed, {{"trials", trials}, {"k_max", kMaxK}}, {}};
  using namespace interval1d;

  json rows = json::array();
  bool chains_ok = true, counts_ok = true, powers_ok = true;
  for (int k = 1; k <= kMaxK; ++k) {
    const auto c = build_hole_chain(k);
    bool adjacent = true, from_first = true;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) adjacent = adjacent && strict_hole(c[i], c[i + 1]);
    for (int j = 1; j <= k; ++j) from_first = from_first && strict_hole(c[0], c[static_cast<std::size_t>(2 * j - 1)]);
    const int b1 = boundary_count(c[0]);
    const int b2k = boundary_count(c[static_cast<std::size_t>(2 * k - 1)]);
    bool paths = true;
    for (int i = 1; i <= k; ++i) {
      const auto path = odd_power_path(k, i);
      paths = paths && static_cast<int>(path.size()) == 2 * i;
      for (std::size_t j = 0; j + 1 < path.size(); ++j)
        paths = paths && strict_hole(c[static_cast<std::size_t>(path[j] - 1)], c[static_cast<std::size_t>(path[j + 1] - 1)]);
    }
    const bool refuted = power_refuted_by_endpoints(c[0], c[static_cast<std::size_t>(2 * k - 1)], 2 * k + 1);
    chains_ok = chains_ok && adjacent && from_first;
    counts_ok = counts_ok && b1 == 2 && b2k == 2 * k + 1;
    powers_ok = powers_ok && paths && refuted;
    rows.push_back({{"k", k},
                    {"adjacent_strict", adjacent},
                    {"first_to_even_strict", from_first},
                    {"boundary_c1", b1},
                    {"boundary_c2k", b2k},
                    {"odd_power_paths", paths},
                    {"next_power_refuted", refuted}});
  }
  rep.checks.push_back({"hole-chains", chains_ok, {{"rows", rows}}});
  rep.checks.push_back({"boundary-counts", counts_ok, json::object()});
  rep.checks.push_back({"power-certificates", powers_ok, json::object()});

  // endpoint inclusion on strict holes: constructed pairs plus random pairs
  Rng rng(o.seed);
  long holes = 0, law_failures = 0, not_ecn = 0, not_strict = 0;
  auto check_pair = [&](const IntervalRegion& a, const IntervalRegion& b) {
    if (!strict_hole(a, b)) return;
    ++holes;
    if (classify11(a, b) != BaseRel::ECN) ++not_ecn;
    const auto ea = endpoints(a), eb = endpoints(b);
    const bool subset = std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
    if (!subset || ea.size() >= eb.size()) ++law_failures;
  };
  for (int i = 0; i < trials; ++i) {
    const auto [a, b] = random_hole_pair(rng);
    if (!strict_hole(a, b)) ++not_strict;
    check_pair(a, b);
    check_pair(random_region(rng), random_region(rng));
  }
  rep.checks.push_back({"endpoint-inclusion",
                        law_failures == 0 && not_ecn == 0 && not_strict == 0 && holes >= trials,
                        {{"strict_holes", holes},
                         {"failures", law_failures},
                         {"not_ecn", not_ecn},
                         {"generator_misses", not_strict}}});
  return rep;
}

// --- dual-laws --------------------------------------------------------------

/// RCC7 dual table as coarse labels: right dual, left dual, both.
inline const std::map<std::string, std::array<std::string, 3>>& rcc7_dual_table() {
  static const std::map<std::string, std::array<std::string, 3>> t = {
      {"PP", {"DN", "POD", "PPI"}},   {"PPI", {"POD", "DN", "PP"}}, {"PON", {"PON", "PON", "PON"}},
      {"POD", {"PPI", "PP", "DN"}},   {"DN", {"PP", "PPI", "POD"}}, {"ECD", {"EQ", "EQ", "ECD"}},
      {"EQ", {"ECD", "ECD", "EQ"}},
  };
  return t;
}

inline SuiteReport dual_laws(const Options& o) {
  const int trials = o.trials.value_or(100000);
  SuiteReport rep{"dual-laws", o.seed, {{"trials", trials}}, {}};
  const CompTable& g = golden_table();
  constexpr auto R = DualSide::Right;
  constexpr auto L = DualSide::Left;

  // symbolic, RCC11
  long checked = 0, failed = 0;
  auto expect = [&](bool ok) {
    ++checked;
    if (!ok) ++failed;
  };
  for (BaseRel r : kAllBaseRels) {
    const RelSet s(r);
    expect(g.entries(r, BaseRel::ECD) == dual(s, R));  // R^d = R∘ECD
    expect(g.entries(BaseRel::ECD, r) == dual(s, L));  // ^dR = ECD∘R
    expect(dual(dual(s, R), R) == s);
    expect(dual(dual(s, L), L) == s);
    expect(dual(dual(s, R), L) == dual(dual(s, L), R));
    expect(converse(dual(converse(s), R)) == dual(s, L));
    expect(converse(dual(converse(s), L)) == dual(s, R));
    expect(converse(converse(s)) == s);
  }
  for (BaseRel m : kDualGeneratingSet) expect(dual(dual(RelSet(m), L), R) == converse(RelSet(m)));
  RelSet generated;
  for (BaseRel m : kDualGeneratingSet) generated |= RelSet(m) | dual(RelSet(m), R);
  expect(generated.is_universal());
  rep.checks.push_back({"rcc11-symbolic", failed == 0, {{"identities", checked}, {"violations", failed}}});

  // duals distribute over meets, over every pair of relation sets
  std::array<std::uint16_t, 2048> rd{}, ld{};
  for (std::uint16_t m = 0; m < 2048; ++m) {
    rd[m] = dual(RelSet::from_mask(m), R).mask();
    ld[m] = dual(RelSet::from_mask(m), L).mask();
  }
  long meet_checked = 0, meet_failed = 0;
  for (std::uint32_t a = 0; a < 2048; ++a)
    for (std::uint32_t b = 0; b < 2048; ++b) {
      meet_checked += 2;
      if (((rd[a] & b) != 0) != ((a & rd[b]) != 0)) ++meet_failed;
      if (((ld[a] & b) != 0) != ((a & ld[b]) != 0)) ++meet_failed;
    }
  rep.checks.push_back({"set-meet-laws", meet_failed == 0, {{"pairs", meet_checked}, {"violations", meet_failed}}});

  // dual and converse laws over the golden table
  const auto v = validate_table(g);
  rep.checks.push_back({"table-laws", v.valid(), {{"identities", v.identities_checked}, {"violations", v.violations.size()}}});

  // symbolic, RCC7: the coarse duals are well defined and match the table
  const Calculus& c7 = calculus(CalculusName::RCC7);
  long c7_checked = 0, c7_failed = 0;
  json c7_bad = json::array();
  auto single = [&](const std::vector<std::string>& labels) -> std::string {
    return labels.size() == 1 ? labels.front() : std::string("?");
  };
  for (const auto& [label, row] : rcc7_dual_table()) {
    const RelSet block = expand(label, c7);
    const std::string rdual = single(coarse_dual(label, R, c7));
    const std::string ldual = single(coarse_dual(label, L, c7));
    const std::string both = single(coarsen_set(dual(dual(block, R), L), c7));
    const std::string via_r = single(coarsen_set(compose(g, block, RelSet(BaseRel::ECD)), c7));
    const std::string via_l = single(coarsen_set(compose(g, RelSet(BaseRel::ECD), block), c7));
    const std::string conv = single(coarse_converse(label, c7));
    const std::array<bool, 6> ok = {rdual == row[0], ldual == row[1], both == row[2],
                                    via_r == row[0], via_l == row[1],
                                    // ^dR^d = R~ on the dual generating set
                                    std::find(c7.dual_generators.begin(), c7.dual_generators.end(), label) ==
                                            c7.dual_generators.end() ||
                                        both == conv};
    for (bool b : ok) {
      ++c7_checked;
      if (!b) {
        ++c7_failed;
        if (c7_bad.size() < 10) c7_bad.push_back(label);
      }
    }
  }
  rep.checks.push_back({"rcc7-symbolic",
                        c7_failed == 0 && rcc7_dual_table().size() == c7.blocks.size(),
                        {{"identities", c7_checked}, {"violations", c7_failed}, {"labels", c7_bad}}});

  // semantic, on exact disk pairs; half the pairs are drawn per relation so
  // that the rare tangent relations show up
  Rng rng(o.seed);
  long pairs = 0, route = 0, conv_bad = 0, right_bad = 0, left_bad = 0, double_bad = 0;
  std::array<long, kNumBaseRels> per_relation{};
  json bad = json::array();
  for (int i = 0; i < trials; ++i) {
    disk::DiskRegion a = disk::random_region(rng), b = disk::random_region(rng);
    if (i % 2 == 1) {
      auto [x, y] = disk::generate_pair(rng.pick(kAllBaseRels), mix_seed(o.seed, static_cast<std::uint64_t>(i)));
      a = x;
      b = y;
    }
    ++pairs;
    const BaseRel ab = disk::classify(a, b);
    ++per_relation[static_cast<std::size_t>(index_of(ab))];
    bool any = false;
    auto tally = [&](bool ok, long& counter) {
      if (!ok) {
        ++counter;
        any = true;
      }
    };
    tally(disk::classify_by_clauses(a, b) == ab, route);
    tally(disk::classify(b, a) == converse(ab), conv_bad);
    tally(disk::classify(a, disk::complement(b)) == dual(ab, R), right_bad);
    tally(disk::classify(disk::complement(a), b) == dual(ab, L), left_bad);
    tally(disk::classify(disk::complement(a), disk::complement(b)) == dual(dual(ab, R), L), double_bad);
    if (any && bad.size() < 10) bad.push_back({{"a", disk::to_string(a)}, {"b", disk::to_string(b)}});
  }
  json dist = json::object();
  for (BaseRel r : kAllBaseRels) dist[std::string(token(r))] = per_relation[static_cast<std::size_t>(index_of(r))];
  const long total_bad = route + conv_bad + right_bad + left_bad + double_bad;
  rep.checks.push_back({"disk-semantics",
                        total_bad == 0 && pairs >= trials,
                        {{"pairs", pairs},
                         {"route_disagreements", route},
                         {"converse", conv_bad},
                         {"right_dual", right_bad},
                         {"left_dual", left_bad},
                         {"double_dual", double_bad},
                         {"relations", dist},
                         {"examples", bad}}});
  return rep;
}

/// nullopt for an unknown suite name.
inline std::optional<SuiteReport> run_suite(std::string_view name, const Options& o) {
  if (name == "disk-soundness") return disk_soundness(o);
  if (name == "disk-extensionality") return disk_extensionality(o);
  if (name == "bw-axioms") return bw_axioms(o);
  if (name == "bw-chains") return bw_chains(o);
  if (name == "bw-pody") return bw_pody(o);
  if (name == "holes-1d") return holes_1d(o);
  if (name == "dual-laws") return dual_laws(o);
  return std::nullopt;
}

}  // namespace rcc11::verify
