// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "worked_example.hpp"
#include "sepfam/sepfam.hpp"

using namespace sepfam;
using namespace sepfam::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome worked_example() {
  Outcome o;
  const Family p = family_P();
  const Family q = family_Q();
  const BipartitionTuple tp(4, {P1(), P2()});
  const BipartitionTuple tq(4, {Q1(), Q2(), Q3()});
  const auto start = Clock::now();
  const bool p_sep = is_separating(p);
  const bool p_min = is_minimal_separating(p);
  const bool q_sep = is_separating(q);
  const bool q_min = is_minimal_separating(q);
  const auto mp = encode(tp).to_strings();
  const auto mq = encode(tq).to_strings();
  const double ms = elapsed_ms(start);
  o.require(p_sep && p_min, "{P1,P2} not minimal separating");
  o.require(q_sep && q_min && q.size() == 3, "{Q1,Q2,Q3} not minimal separating of size 3");
  o.require(mp == std::vector<std::string>{"00", "01", "10", "11"}, "M_P differs");
  o.require(mq == std::vector<std::string>{"000", "100", "110", "111"}, "M_Q differs");
  o.require(ms < 1.0, "took " + std::to_string(ms) + " ms (limit 1 ms)");
  return o;
}

Outcome bijection_and_cayley() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<unsigned, std::size_t>> expected{{3, 3}, {4, 16}, {5, 125}};
  for (auto [n, count] : expected) {
    const auto brute = brute_minimal_max_families(n);
    o.require(brute.size() == count, "brute count at n=" + std::to_string(n) + " is " +
                                         std::to_string(brute.size()));
    std::vector<Family> via_trees;
    auto stream = enumerate_minimal_max_families(n);
    while (auto f = stream.next()) via_trees.push_back(std::move(*f));
    std::sort(via_trees.begin(), via_trees.end());
    o.require(via_trees == brute, "Prufer families differ from brute force at n=" + std::to_string(n));
  }
  SpanningTrees trees(6);
  std::size_t total = 0;
  while (auto t = trees.next()) {
    ++total;
    o.require(phi_forward(phi_inverse(*t)) == t->graph(), "phi(phi^-1(t)) != t at n=6");
  }
  o.require(total == 1296, "n=6 produced " + std::to_string(total) + " trees");
  const double ms = elapsed_ms(start);
  o.require(ms < 10000.0, "took " + std::to_string(ms) + " ms (limit 10 s)");
  return o;
}

Outcome phi_images() {
  Outcome o;
  o.require(phi_forward(family_Q()) == LabeledGraph(4, {{1, 2}, {2, 3}, {3, 4}}),
            "phi(Q) is not the path 1-2-3-4");
  o.require(phi_forward(family_P()) == LabeledGraph(4, {{1, 2}, {2, 4}, {4, 3}, {3, 1}}),
            "phi(P) is not the cycle 1-2-4-3-1");
  return o;
}

Outcome counting_vs_oracle() {
  Outcome o;
  const auto start = Clock::now();
  const Formulas f(32);
  for (unsigned n = 2; n <= 5; ++n) {
    const std::uint64_t pool = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k <= pool; ++k) {
      const std::string at = " at n=" + std::to_string(n) + ",k=" + std::to_string(k);
      const BigInt brute_tau = brute_count_separating(n, static_cast<unsigned>(k), false);
      o.require(f.tau_v1(n, k).value == brute_tau, "tau_v1 != brute" + at);
      if (k >= 2 && k < pool) o.require(f.tau_v2(n, k).value == brute_tau, "tau_v2 != brute" + at);
      if (k < pool) {
        const BigInt brute_sigma = brute_count_separating(n, static_cast<unsigned>(k), true);
        o.require(f.sigma_v1(n, k).value == brute_sigma, "sigma_v1 != brute" + at);
        o.require(f.sigma_v2(n, k).value == brute_sigma, "sigma_v2 != brute" + at);
      }
    }
  }
  o.require(f.tau_v1(4, 2).value == 3 && f.tau_v1(4, 3).value == 32, "tau(4,2)/tau(4,3) anchors");
  o.require(f.sigma_v1(4, 2).value == 3 && f.sigma_v1(4, 3).value == 29, "sigma anchors");
  o.require(f.tau_v2(5, 3).value == 140, "tau(5,3) anchor");
  const double ms = elapsed_ms(start);
  o.require(ms < 60000.0, "took " + std::to_string(ms) + " ms (limit 60 s)");
  return o;
}

Outcome identities() {
  Outcome o;
  const auto start = Clock::now();
  const Formulas f(32);
  for (unsigned n = 2; n <= 8; ++n) {
    const std::uint64_t last = std::min<std::uint64_t>(20, std::uint64_t{1} << (n - 1));
    for (std::uint64_t k = 1; k <= last; ++k) {
      const std::string at = " at n=" + std::to_string(n) + ",k=" + std::to_string(k);
      o.require(f.check_sum_identity(n, k).holds, "sum identity" + at);
      if (k >= 2) {
        o.require(f.check_sigma_tau(n, k).holds, "sigma/tau recurrence" + at);
        o.require(f.check_transpose_identity(n, k).holds, "transpose identity" + at);
      }
    }
  }
  for (unsigned k = 0; k <= 30; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      o.require(f.check_stirling1_identity(k, i).holds,
                "Stirling identity at k=" + std::to_string(k) + ",i=" + std::to_string(i));
    }
  }
  const double ms = elapsed_ms(start);
  o.require(ms < 10000.0, "took " + std::to_string(ms) + " ms (limit 10 s)");
  return o;
}

Outcome minimum_size() {
  Outcome o;
  for (unsigned n = 2; n <= 5; ++n) {
    const unsigned m = min_separating_size(n);
    const auto profile = brute_minimal_size_profile(n);
    o.require(count_min_size_families(n) == brute_count_separating(n, m, false),
              "min-size count vs brute at n=" + std::to_string(n));
    o.require(!profile.empty() && profile.begin()->first >= m && profile.rbegin()->first <= n - 1,
              "profile support outside [ceil log2 n, n-1] at n=" + std::to_string(n));
  }
  o.require(count_min_size_families(4) == 3 && count_min_size_families(5) == 140, "anchors 3, 140");

  // k = 1 arbitrary: the singleton ground set, whose only bipartition is {S}.
  o.require(min_ground_size_arbitrary(1) == 1 && is_separating(Family(1, {Bipartition::trivial(1)})),
            "k=1 arbitrary minimum ground size");
  for (unsigned k = 1; k <= 7; ++k) {
    for (bool proper : {false, true}) {
      if (!proper && k == 1) continue;
      unsigned found = 0;
      BigInt count = 0;
      for (unsigned n = 2; n <= kMaxOracleGround && found == 0; ++n) {
        const unsigned pool = (1u << (n - 1)) - (proper ? 1 : 0);
        if (k > pool) continue;
        count = brute_count_separating(n, k, proper);
        if (count != 0) found = n;
      }
      const std::string at = std::string(proper ? " proper" : " arbitrary") + " k=" + std::to_string(k);
      const unsigned size = proper ? min_ground_size_proper(k) : min_ground_size_arbitrary(k);
      const BigInt closed = proper ? count_min_ground_proper(k) : count_min_ground_arbitrary(k);
      o.require(found == size, "minimum ground size" + at);
      o.require(count == closed, "minimum ground count" + at);
    }
  }
  return o;
}

Outcome divisibility() {
  Outcome o;
  const Formulas f(130);
  for (unsigned n = 2; n <= 8; ++n) {
    const std::uint64_t pool = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k <= pool; ++k) {
      const std::string at = " at n=" + std::to_string(n) + ",k=" + std::to_string(k);
      o.require(f.tau_v1(n, k).remainder == 0, "tau_v1 remainder" + at);
      if (k < pool) o.require(f.sigma_v1(n, k).remainder == 0, "sigma_v1 remainder" + at);
    }
  }
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const auto clean = run_cli("verify --n-max 5 --k-max 8");
  o.require(clean.exit_code == 0, "clean verify exited " + std::to_string(clean.exit_code));
  const auto faulty = run_cli("verify --n-max 5 --k-max 8 --perturb-stirling first:4:2");
  o.require(faulty.exit_code == 1, "perturbed verify exited " + std::to_string(faulty.exit_code));
  o.require(faulty.out.find("FAIL stirling1-identity") != std::string::npos,
            "perturbed verify does not name the failing identity");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 worked example (predicates and matrices)", worked_example},
      {"2 bijection and Cayley counts", bijection_and_cayley},
      {"3 phi images (path and 4-cycle)", phi_images},
      {"4 tau/sigma closed forms vs brute force, n <= 5", counting_vs_oracle},
      {"5 identities on n <= 8, k <= 20; Stirling identity k <= 30", identities},
      {"6 minimum-size and minimum-ground propositions", minimum_size},
      {"7 exact final division in the v1 forms", divisibility},
      {"8 CLI verify contract and fault injection", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(start);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << ms << " ms)";
    if (!o.ok) std::cout << "  -- " << o.detail;
    std::cout << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
