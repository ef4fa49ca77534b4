#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/bigint.hpp"
#include "maxdet/equivalence.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

/// Inner products <u, v> of mu_3 vectors of length n whose product vector is
/// balanced, other than n. Order: x ascending, then y, over x+y+z = n.
std::vector<CycInt> admissible_entries(int n);

struct SearchOptions {
  int threads = 0;             // 0: MAXDET_THREADS, else hardware concurrency
  bool standard_form = false;  // extra pruning by standard_form_check
  bool record_collisions = false;
  std::function<void(int r, std::size_t candidates, std::size_t phi_size)> on_level;
};

struct SearchCandidate {
  GramMatrix gram;
  BigInt det;
  Certificate cert;
};

/// A discarded extension and the index of the kept candidate it matched.
struct Collision {
  std::size_t kept;
  GramMatrix gram;
};

struct SearchLevel {
  int n = 0;
  int r = 0;
  std::vector<SearchCandidate> candidates;
  std::vector<CycInt> phi;  // Phi^(r): off-diagonal values of the candidates
  std::vector<Collision> collisions;
};

/// G_1 = {[n]} with phi = admissible_entries(n).
SearchLevel initial_level(int n);

/// One extension step r -> r+1 against target det^2.
SearchLevel extend_level(const SearchLevel& level, const BigInt& target, const SearchOptions& opt = {});

enum class Verdict { MaximalConfirmed, LargerCandidateFound, BoundRefuted };

std::string verdict_name(Verdict v);
/// CLI exit status: 0, 3, 4.
int verdict_exit_code(Verdict v);

struct FinalCandidate {
  GramMatrix gram;
  BigInt det;
  bool norm_feasible = false;
  Certificate cert;
};

struct LevelCount {
  int r = 0;
  std::size_t candidates = 0;
  std::size_t phi_size = 0;
};

struct SearchReport {
  int n = 0;
  int ell = 3;
  BigInt target;
  std::vector<LevelCount> levels;
  std::vector<CycInt> phi1;
  std::vector<FinalCandidate> final_set;
  Verdict verdict = Verdict::BoundRefuted;
};

SearchReport certify(int n, const BigInt& target, const SearchOptions& opt = {});
/// Same run; an empty final set proves det^2 < d for every order-n matrix.
SearchReport refute_bound(int n, const BigInt& d, const SearchOptions& opt = {});

/// {n, target, levels, final, verdict}; big integers are decimal strings.
std::string report_json(const SearchReport& rep);

struct Feasibility {
  bool applicable = true;
  bool feasible = true;
  std::optional<long long> witness;  // smallest offending prime
};

/// Norm obstruction for Barba matrices over mu_3 (n = 1 mod 3).
Feasibility barba3_obstruction(int n);
/// No BH(n,6) (hence no BH(n,3)) if an odd prime p = 5 (mod 6) divides n to odd power.
Feasibility winterhof_bh6(int n);

}  // namespace maxdet
