#pragma once

#include <map>

#include "socle/groebner.hpp"
#include "socle/hilbert.hpp"

namespace socle {

/// Sparse table of graded Betti numbers β_{i,j}.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  long long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, long long v) {
    if (v) entries[{i, j}] += v;
  }
  int pd() const {
    int p = 0;
    for (const auto& [k, v] : entries)
      if (v) p = std::max(p, k.first);
    return p;
  }
  int regularity() const {
    int r = 0;
    for (const auto& [k, v] : entries)
      if (v) r = std::max(r, k.second - k.first);
    return r;
  }
  long long total(int i) const {
    long long t = 0;
    for (const auto& [k, v] : entries)
      if (k.first == i) t += v;
    return t;
  }
  /// β_{i,j} == β_{c-i, c+r-j} for all (i, j).
  bool gorenstein_symmetric(int c, int r) const {
    for (const auto& [k, v] : entries)
      if (v != get(c - k.first, c + r - k.second)) return false;
    return true;
  }
  bool operator==(const BettiTable& o) const;
  /// Alternating column sums: sum_i (-1)^i β_{i,j} per degree j.
  std::vector<long long> euler_alternating_sums() const;
};

/// Free complex F_0 <- F_1 <- ... with graded maps, column-sparse.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int>> twists;  // per homological degree
  // differential(k): F_k -> F_{k-1}; one sparse column (row, entry) per generator of F_k
  std::vector<std::vector<std::vector<std::pair<int, Poly>>>> diffs;
  bool minimal = false;

  int length() const { return static_cast<int>(twists.size()) - 1; }
  const std::vector<std::vector<std::pair<int, Poly>>>& differential(int k) const {
    return diffs[static_cast<size_t>(k) - 1];
  }
  BettiTable betti() const;
  /// Exact check that consecutive maps compose to zero.
  bool composes_to_zero() const;
  /// No differential entry is a nonzero constant.
  bool has_no_unit_entries() const;
};

/// Minimal graded free resolution of S/I by iterated syzygies on the reduced
/// GB (Schreyer's theorem) followed by unit-entry cancellation.
FreeResolution free_resolution(const Ideal& I, int length_bound = -1);

/// True iff the alternating Betti sums match the K-polynomial coefficients.
bool euler_identity_check(const BettiTable& t, const HilbertData& h);

struct GorensteinReport {
  bool artinian = false;
  bool cohen_macaulay = false;  // pd == height
  long long type = 0;           // rank of the last module
  bool gorenstein = false;      // CM and type 1
  bool betti_symmetric = false;
  bool h_symmetric = false;
  int regularity = 0;
  int pd = 0;
  long long multiplicity = 0;
  std::vector<long long> h_vector;
  BettiTable betti;
};

GorensteinReport gorenstein_diagnostics(const Ideal& I);

struct RegularityBoundReport {
  bool precondition_met = false;  // quadratic Cohen-Macaulay
  bool quadratic = false;
  bool cohen_macaulay = false;
  int regularity = 0;
  int pd = 0;
  bool bound_holds = false;       // reg <= pd
  bool equality = false;          // reg == pd
  bool complete_intersection = false;
  bool equality_iff_ci = false;
};

RegularityBoundReport regularity_bound_check(const Ideal& I);

}  // namespace socle
