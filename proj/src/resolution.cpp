#include "socle/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace socle {

bool BettiTable::operator==(const BettiTable& o) const {
  for (const auto& [k, v] : entries)
    if (v != o.get(k.first, k.second)) return false;
  for (const auto& [k, v] : o.entries)
    if (v != get(k.first, k.second)) return false;
  return true;
}

std::vector<long long> BettiTable::euler_alternating_sums() const {
  int maxj = 0;
  for (const auto& [k, v] : entries)
    if (v) maxj = std::max(maxj, k.second);
  std::vector<long long> sums(static_cast<size_t>(maxj) + 1, 0);
  for (const auto& [k, v] : entries)
    sums[static_cast<size_t>(k.second)] += (k.first % 2 == 0 ? v : -v);
  return sums;
}

BettiTable FreeResolution::betti() const {
  BettiTable t;
  for (size_t i = 0; i < twists.size(); ++i)
    for (int j : twists[i]) t.add(static_cast<int>(i), j, 1);
  return t;
}

bool FreeResolution::composes_to_zero() const {
  for (int k = 2; k <= length(); ++k) {
    const auto& d2 = differential(k);
    const auto& d1 = differential(k - 1);
    for (const auto& col : d2) {
      // image of one generator of F_k, pushed through d_{k-1}
      std::map<int, Poly> acc;
      for (const auto& [mid, p] : col) {
        for (const auto& [row, q] : d1[static_cast<size_t>(mid)]) {
          auto it = acc.find(row);
          if (it == acc.end())
            acc.emplace(row, p * q);
          else
            it->second = it->second + p * q;
        }
      }
      for (const auto& [row, p] : acc)
        if (!p.is_zero()) return false;
    }
  }
  return true;
}

bool FreeResolution::has_no_unit_entries() const {
  for (int k = 1; k <= length(); ++k)
    for (const auto& col : differential(k))
      for (const auto& [row, p] : col)
        if (!p.is_zero() && p.degree() == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Schreyer tower
// ---------------------------------------------------------------------------

namespace {

struct Level {
  std::vector<Vec> cols;    // elements of F_{k-1}
  std::vector<VTerm> leads; // w.r.t. the induced order on F_{k-1}
  std::vector<int> twists;
  std::vector<Monomial> via;  // accumulated lead monomial down to S
};

/// Minimal generators of ({m_j : j > i, same component} : m_i), with witnesses.
std::vector<std::pair<Monomial, int>> pair_targets(const std::vector<VTerm>& leads,
                                                   const std::vector<std::vector<int>>& comp_members,
                                                   int i) {
  std::vector<std::pair<Monomial, int>> cand;
  const VTerm& li = leads[static_cast<size_t>(i)];
  for (int j : comp_members[static_cast<size_t>(li.comp)]) {
    if (j <= i) continue;
    const Monomial l = li.m.lcm(leads[static_cast<size_t>(j)].m);
    cand.push_back({l.divided_by(li.m), j});
  }
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
    if (a.first.deg != b.first.deg) return a.first.deg < b.first.deg;
    if (!(a.first == b.first)) return a.first.e < b.first.e;
    return a.second < b.second;
  });
  std::vector<std::pair<Monomial, int>> kept;
  for (const auto& c : cand) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.first.divides(c.first)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(c);
  }
  return kept;
}

struct SparseMap {
  // col[c]: row -> entry; row_index[r]: columns with a nonzero entry in row r
  std::vector<std::map<int, Poly>> col;
  std::vector<std::set<int>> row_index;

  void init(int nrows, int ncols) {
    col.assign(static_cast<size_t>(ncols), {});
    row_index.assign(static_cast<size_t>(nrows), {});
  }
  void set(int r, int c, Poly p) {
    if (p.is_zero()) return;
    col[static_cast<size_t>(c)][r] = std::move(p);
    row_index[static_cast<size_t>(r)].insert(c);
  }
  void erase(int r, int c) {
    col[static_cast<size_t>(c)].erase(r);
    row_index[static_cast<size_t>(r)].erase(c);
  }
  const Poly* get(int r, int c) const {
    auto it = col[static_cast<size_t>(c)].find(r);
    return it == col[static_cast<size_t>(c)].end() ? nullptr : &it->second;
  }
};

}  // namespace

FreeResolution free_resolution(const Ideal& I, int length_bound) {
  const RingPtr ring = I.ring();
  if (!I.is_homogeneous()) throw NonHomogeneous();
  FreeResolution res;
  res.ring = ring;

  if (I.is_unit()) {
    // S/I = 0; its minimal resolution is the zero complex
    res.twists = {{}};
    res.minimal = true;
    return res;
  }
  res.twists.push_back({0});  // F_0 = S
  const auto& gb = I.groebner().gens;
  if (gb.empty()) {
    res.minimal = true;
    return res;
  }

  // level 1: the reduced GB
  std::vector<Level> levels;
  {
    Level l1;
    for (const auto& g : gb) {
      l1.cols.push_back(Vec::from_poly(g));
      l1.leads.push_back(VTerm{0, g.lead_monomial()});
      l1.twists.push_back(g.degree());
      l1.via.push_back(g.lead_monomial());
    }
    levels.push_back(std::move(l1));
  }

  const int max_levels = ring->nvars() + 2;
  bool tower_complete = false;
  for (int k = 1; k <= max_levels; ++k) {
    const Level& cur = levels.back();
    // induced order on F_{k-1}: via chain of the previous level
    std::vector<Monomial> prev_via;
    if (levels.size() >= 2) {
      prev_via = levels[levels.size() - 2].via;
    } else {
      prev_via = {Monomial::one()};  // F_0 = S
    }
    const ModOrder ord = ModOrder::schreyer(ring->order(), prev_via);
    const ReducerIndex index(cur.cols);

    int ncomp = 0;
    for (const auto& l : cur.leads) ncomp = std::max(ncomp, l.comp + 1);
    std::vector<std::vector<int>> comp_members(static_cast<size_t>(ncomp));
    for (size_t i = 0; i < cur.leads.size(); ++i)
      comp_members[static_cast<size_t>(cur.leads[i].comp)].push_back(static_cast<int>(i));

    Level next;
    for (size_t i = 0; i < cur.cols.size(); ++i) {
      for (const auto& [mu, j] : pair_targets(cur.leads, comp_members, static_cast<int>(i))) {
        const Monomial lcm = mu * cur.leads[i].m;
        const Monomial uj = lcm.divided_by(cur.leads[static_cast<size_t>(j)].m);
        const Scalar ci = cur.cols[i].lead_coeff().inv();
        const Scalar cj = cur.cols[static_cast<size_t>(j)].lead_coeff().inv();
        Vec s = cur.cols[i].times_monomial(mu, ci).minus(
            ord, cur.cols[static_cast<size_t>(j)].times_monomial(uj, cj));
        std::vector<std::vector<std::pair<Monomial, Scalar>>> q;
        Vec rem = vec_normal_form(ord, std::move(s), cur.cols, index, &q);
        if (!rem.is_zero()) throw std::logic_error("S-pair of a Schreyer basis failed to reduce");
        std::vector<VEntry> entries;
        entries.push_back({VTerm{static_cast<int>(i), mu}, ci});
        entries.push_back({VTerm{j, uj}, -cj});
        for (size_t t = 0; t < q.size(); ++t)
          for (const auto& [m, c] : q[t]) entries.push_back({VTerm{static_cast<int>(t), m}, -c});
        const ModOrder next_ord = ModOrder::schreyer(ring->order(), cur.via);
        Vec tau = Vec::from_terms(next_ord, std::move(entries));
        if (tau.is_zero()) throw std::logic_error("zero Schreyer syzygy");
        if (!(tau.lead() == VTerm{static_cast<int>(i), mu}))
          throw std::logic_error("Schreyer lead term does not match its pair target");
        next.leads.push_back(tau.lead());
        next.twists.push_back(static_cast<int>(mu.deg) + cur.twists[i]);
        next.via.push_back(mu * cur.via[i]);
        next.cols.push_back(std::move(tau));
      }
    }
    if (next.cols.empty()) {
      tower_complete = true;
      break;
    }
    levels.push_back(std::move(next));
  }
  if (!tower_complete) throw std::logic_error("Schreyer tower exceeded the variable-count bound");

  // assemble the complex
  std::vector<SparseMap> maps(levels.size());
  for (size_t k = 0; k < levels.size(); ++k) {
    const Level& lv = levels[k];
    const int nrows = k == 0 ? 1 : static_cast<int>(levels[k - 1].cols.size());
    maps[k].init(nrows, static_cast<int>(lv.cols.size()));
    for (size_t c = 0; c < lv.cols.size(); ++c) {
      const int maxc = lv.cols[c].max_comp();
      for (int r = 0; r <= maxc; ++r) {
        Poly p = lv.cols[c].coord(ring, r);
        if (!p.is_zero()) maps[k].set(r, static_cast<int>(c), std::move(p));
      }
    }
    res.twists.push_back(lv.twists);
  }

  // prune unit entries, ascending through the maps
  std::vector<std::vector<char>> alive(res.twists.size());
  for (size_t k = 0; k < res.twists.size(); ++k)
    alive[k].assign(res.twists[k].size(), 1);

  for (size_t k = 0; k < maps.size(); ++k) {
    std::deque<std::pair<int, int>> work;
    for (size_t c = 0; c < maps[k].col.size(); ++c)
      for (const auto& [r, p] : maps[k].col[c])
        if (p.degree() == 0) work.push_back({r, static_cast<int>(c)});
    while (!work.empty()) {
      auto [r, c] = work.front();
      work.pop_front();
      if (!alive[k + 1][static_cast<size_t>(c)] || !alive[k][static_cast<size_t>(r)]) continue;
      const Poly* up = maps[k].get(r, c);
      if (!up || up->degree() != 0) continue;
      const Scalar uinv = up->lead_coeff().inv();

      // column operations: clear row r outside column c
      std::vector<int> row_cols(maps[k].row_index[static_cast<size_t>(r)].begin(),
                                maps[k].row_index[static_cast<size_t>(r)].end());
      const std::map<int, Poly> pivot_col = maps[k].col[static_cast<size_t>(c)];
      for (int c2 : row_cols) {
        if (c2 == c) continue;
        const Poly factor = maps[k].get(r, c2)->scaled(uinv);
        for (const auto& [r2, p] : pivot_col) {
          if (r2 == r) continue;
          const Poly* cur = maps[k].get(r2, c2);
          Poly next = cur ? *cur - factor * p : -(factor * p);
          maps[k].erase(r2, c2);
          if (!next.is_zero()) {
            const bool became_unit = next.degree() == 0;
            maps[k].set(r2, c2, std::move(next));
            if (became_unit) work.push_back({r2, c2});
          }
        }
        maps[k].erase(r, c2);
      }
      // clear column c outside row r (implicit row operations)
      const std::map<int, Poly> col_copy = maps[k].col[static_cast<size_t>(c)];
      for (const auto& [r2, p] : col_copy)
        if (r2 != r) maps[k].erase(r2, c);
      maps[k].erase(r, c);

      alive[k + 1][static_cast<size_t>(c)] = 0;
      alive[k][static_cast<size_t>(r)] = 0;
      // generator r of F_k disappears: drop its column from the previous map
      if (k >= 1) {
        const std::map<int, Poly> prev_col = maps[k - 1].col[static_cast<size_t>(r)];
        for (const auto& [r2, p] : prev_col) maps[k - 1].erase(r2, r);
      }
      // generator c of F_{k+1} disappears: drop its row from the next map
      if (k + 1 < maps.size()) {
        std::vector<int> next_cols(maps[k + 1].row_index[static_cast<size_t>(c)].begin(),
                                   maps[k + 1].row_index[static_cast<size_t>(c)].end());
        for (int c2 : next_cols) maps[k + 1].erase(c, c2);
      }
    }
  }

  // compact
  std::vector<std::vector<int>> newidx(res.twists.size());
  std::vector<std::vector<int>> newtwists(res.twists.size());
  for (size_t kk = 0; kk < res.twists.size(); ++kk) {
    newidx[kk].assign(res.twists[kk].size(), -1);
    for (size_t g = 0; g < res.twists[kk].size(); ++g) {
      if (!alive[kk][g]) continue;
      newidx[kk][g] = static_cast<int>(newtwists[kk].size());
      newtwists[kk].push_back(res.twists[kk][g]);
    }
  }
  res.diffs.clear();
  for (size_t k = 0; k < maps.size(); ++k) {
    std::vector<std::vector<std::pair<int, Poly>>> cols;
    for (size_t c = 0; c < maps[k].col.size(); ++c) {
      if (!alive[k + 1][c]) continue;
      std::vector<std::pair<int, Poly>> out;
      for (const auto& [r, p] : maps[k].col[c])
        out.push_back({newidx[k][static_cast<size_t>(r)], p});
      cols.push_back(std::move(out));
    }
    res.diffs.push_back(std::move(cols));
  }
  res.twists = std::move(newtwists);
  while (res.twists.size() > 1 && res.twists.back().empty()) {
    res.twists.pop_back();
    res.diffs.pop_back();
  }
  if (length_bound >= 0 && res.length() > length_bound) {
    res.twists.resize(static_cast<size_t>(length_bound) + 1);
    res.diffs.resize(static_cast<size_t>(length_bound));
  }
  res.minimal = true;
  return res;
}

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

bool euler_identity_check(const BettiTable& t, const HilbertData& h) {
  const auto sums = t.euler_alternating_sums();
  const size_t n = std::max(sums.size(), h.numerator.size());
  for (size_t j = 0; j < n; ++j) {
    const long long a = j < sums.size() ? sums[j] : 0;
    const long long b = j < h.numerator.size() ? h.numerator[j] : 0;
    if (a != b) return false;
  }
  return true;
}

GorensteinReport gorenstein_diagnostics(const Ideal& I) {
  GorensteinReport rep;
  if (I.is_unit()) return rep;
  const FreeResolution res = free_resolution(I);
  rep.betti = res.betti();
  rep.pd = rep.betti.pd();
  rep.regularity = rep.betti.regularity();
  const HilbertData h = hilbert(I);
  rep.h_vector = h.h_vector;
  rep.multiplicity = h.multiplicity;
  rep.artinian = h.dim == 0;
  const int height = I.ring()->nvars() - h.dim;
  rep.cohen_macaulay = rep.pd == height;
  rep.type = rep.betti.total(rep.pd);
  rep.gorenstein = rep.cohen_macaulay && rep.type == 1;
  rep.betti_symmetric = rep.betti.gorenstein_symmetric(height, rep.regularity);
  rep.h_symmetric = true;
  for (size_t i = 0; i < rep.h_vector.size(); ++i)
    if (rep.h_vector[i] != rep.h_vector[rep.h_vector.size() - 1 - i]) rep.h_symmetric = false;
  return rep;
}

RegularityBoundReport regularity_bound_check(const Ideal& I) {
  RegularityBoundReport rep;
  if (I.is_unit() || I.is_zero_ideal()) return rep;
  const auto& mingens = I.minimal_generators();
  rep.quadratic = true;
  for (const auto& g : mingens)
    if (g.degree() != 2) rep.quadratic = false;
  const FreeResolution res = free_resolution(I);
  const BettiTable t = res.betti();
  rep.pd = t.pd();
  rep.regularity = t.regularity();
  const int height = I.height();
  rep.cohen_macaulay = rep.pd == height;
  rep.precondition_met = rep.quadratic && rep.cohen_macaulay;
  rep.bound_holds = rep.regularity <= rep.pd;
  rep.equality = rep.regularity == rep.pd;
  rep.complete_intersection = static_cast<int>(mingens.size()) == height;
  rep.equality_iff_ci = rep.equality == rep.complete_intersection;
  return rep;
}

}  // namespace socle
