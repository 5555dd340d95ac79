#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wdegen {

enum class ClaimStatus { verified, refuted, skipped };

// One checked claim. `id` comes from the fixed registry below, `anchor`
// names the statement being exercised, `params` records the ranges the
// run actually covered, and a refutation carries the offending graph as
// graph6 in `witness_g6`.
struct ClaimResult {
  std::string id;
  std::string anchor;
  nlohmann::json params;
  ClaimStatus status = ClaimStatus::verified;
  std::string detail;
  std::string witness_g6;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  double runtime_seconds = 0.0;
};

struct VerifyOptions {
  std::optional<int> k;      // restrict claims to this k where meaningful
  std::optional<int> max_n;  // cap the order ranges
  bool strict = false;       // currently interpreted by callers (exit codes)
  int workers = 0;           // forwarded to enumeration
};

// Claim registry:
//   table.sequences      maximum-Wiener sequences for k = 1..5, first 10 terms
//   formulas.coherence   summation form == closed form (== floor form, k <= 5)
//   thm2.pnk             BFS Wiener of path powers == upper bound
//   thm1.sharpness       BFS Wiener of K_k + empty == lower bound
//   bounds.exhaustive    every small maximal k-degenerate graph sits within
//                        the bounds; equality below iff diameter <= 2
//   thm5.uniqueness      unique maximum-Wiener k-tree is the path power
//                        (k = 2, n = 6..9 and k = 3, n = 8)
//   cor2.k3.n6           order-6 3-tree maximizers: path power and K_3 + empty
//   cor2.k3.n7           order-7 3-tree maximizers: the five known graphs
//   prop4.classification every small diameter-2 2-tree is tree + K1 and/or
//                        one triangle with rooted vertices
//   prop4.outerplanar.n6 diameter-2 members of the order-6 polygon
//                        triangulations are exactly the fan and tr2
//   lemma2.status        vertex status bound: formula witness on path powers
//                        plus every vertex of every enumerated graph
//   lemma1.deletion      W(G) <= W(G-v) + status(v), equality iff isometric,
//                        on random connected graphs
//   bounds.coincidence   lower == upper for k <= n <= 2k+1, strict at 2k+2
const std::vector<std::string>& claim_ids();

// Suites: formulas, sharpness, prop4, thm5, cor2, all.
const std::vector<std::string>& suite_names();
// Claim ids belonging to a suite; throws std::invalid_argument on an
// unknown suite.
std::vector<std::string> suite_claims(const std::string& suite);

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

nlohmann::json report_to_json(const VerificationReport& report);
const char* claim_status_name(ClaimStatus s);

}  // namespace wdegen
