#include "socle/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "socle/combinat.hpp"
#include "socle/linalg.hpp"

namespace socle {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  // descending lexicographic enumeration by exponent vector
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      cur.e[static_cast<size_t>(var)] = static_cast<uint8_t>(left);
      cur.deg = static_cast<uint16_t>(d);
      out.push_back(cur);
      cur.e[static_cast<size_t>(var)] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.e[static_cast<size_t>(var)] = static_cast<uint8_t>(k);
      rec(var + 1, left - k);
    }
    cur.e[static_cast<size_t>(var)] = 0;
  };
  if (d == 0) {
    out.push_back(Monomial::one());
    return out;
  }
  rec(0, d);
  return out;
}

// ---------------------------------------------------------------------------
// Vec
// ---------------------------------------------------------------------------

Vec Vec::from_terms(const ModOrder& ord, std::vector<VEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [&](const VEntry& a, const VEntry& b) { return ord.cmp(a.t, b.t) > 0; });
  Vec v;
  for (auto& e : entries) {
    if (!v.e_.empty() && v.e_.back().t == e.t) {
      v.e_.back().c += e.c;
      if (v.e_.back().c.is_zero()) v.e_.pop_back();
    } else if (!e.c.is_zero()) {
      v.e_.push_back(std::move(e));
    }
  }
  return v;
}

Vec Vec::from_poly(const Poly& p, int comp) {
  Vec v;
  v.e_.reserve(p.terms().size());
  for (const auto& t : p.terms()) v.e_.push_back({VTerm{comp, t.m}, t.c});
  return v;
}

Vec Vec::plus(const ModOrder& ord, const Vec& o) const {
  Vec r;
  r.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    const int c = ord.cmp(e_[i].t, o.e_[j].t);
    if (c > 0) {
      r.e_.push_back(e_[i++]);
    } else if (c < 0) {
      r.e_.push_back(o.e_[j++]);
    } else {
      Scalar s = e_[i].c + o.e_[j].c;
      if (!s.is_zero()) r.e_.push_back({e_[i].t, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < e_.size(); ++i) r.e_.push_back(e_[i]);
  for (; j < o.e_.size(); ++j) r.e_.push_back(o.e_[j]);
  return r;
}

Vec Vec::minus(const ModOrder& ord, const Vec& o) const { return plus(ord, o.negated()); }

Vec Vec::times_monomial(const Monomial& m, const Scalar& c) const {
  Vec r;
  if (c.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& e : e_) r.e_.push_back({VTerm{e.t.comp, e.t.m * m}, e.c * c});
  return r;  // order-preserving for every supported module order
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r;
  if (c.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& e : e_) r.e_.push_back({e.t, e.c * c});
  return r;
}

Vec Vec::negated() const {
  Vec r;
  r.e_.reserve(e_.size());
  for (const auto& e : e_) r.e_.push_back({e.t, -e.c});
  return r;
}

Poly Vec::coord(const RingPtr& ring, int comp) const {
  std::vector<Term> terms;
  for (const auto& e : e_)
    if (e.t.comp == comp) terms.push_back({e.t.m, e.c});
  return Poly(ring, std::move(terms));
}

int Vec::max_comp() const {
  int m = -1;
  for (const auto& e : e_) m = std::max(m, e.t.comp);
  return m;
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

ReducerIndex::ReducerIndex(const std::vector<Vec>& basis) {
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    const int c = basis[i].lead().comp;
    if (c >= static_cast<int>(bycomp.size())) bycomp.resize(static_cast<size_t>(c) + 1);
    bycomp[static_cast<size_t>(c)].push_back(static_cast<int>(i));
  }
}

Vec vec_normal_form(const ModOrder& ord, Vec f, const std::vector<Vec>& basis,
                    const ReducerIndex& index,
                    std::vector<std::vector<std::pair<Monomial, Scalar>>>* trail_out) {
  if (trail_out) trail_out->assign(basis.size(), {});
  // f is consumed from the front; irreducible heads accumulate in `done`
  std::vector<VEntry> done;
  size_t head = 0;  // offset of the live part of f
  while (head < f.entries().size()) {
    const VTerm& lt = f.entries()[head].t;
    int red = -1;
    if (lt.comp < static_cast<int>(index.bycomp.size())) {
      for (int idx : index.bycomp[static_cast<size_t>(lt.comp)]) {
        if (basis[static_cast<size_t>(idx)].lead().m.divides(lt.m)) {
          red = idx;
          break;
        }
      }
    }
    if (red < 0) {
      done.push_back(f.entries()[head]);
      ++head;
      continue;
    }
    const Vec& g = basis[static_cast<size_t>(red)];
    const Monomial q = lt.m.divided_by(g.lead().m);
    const Scalar c = f.entries()[head].c / g.lead_coeff();
    Vec live;
    live.entries().assign(f.entries().begin() + static_cast<long>(head), f.entries().end());
    f = live.minus(ord, g.times_monomial(q, c));
    head = 0;
    if (trail_out) (*trail_out)[static_cast<size_t>(red)].push_back({q, c});
  }
  Vec r;
  r.entries() = std::move(done);
  return r;
}

Vec vec_normal_form(const ModOrder& ord, Vec f, const std::vector<Vec>& basis,
                    std::vector<std::vector<std::pair<Monomial, Scalar>>>* trail_out) {
  return vec_normal_form(ord, std::move(f), basis, ReducerIndex(basis), trail_out);
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace {

struct TrailOps {
  RingPtr ring;
  bool on = false;

  std::vector<Poly> unit(size_t n, size_t i) const {
    std::vector<Poly> t(n, Poly::zero(ring));
    t[i] = Poly::constant(ring, Scalar::one(ring->field()));
    return t;
  }
  void axpy(std::vector<Poly>& dst, const Monomial& m, const Scalar& c,
            const std::vector<Poly>& src) const {
    if (!on) return;
    for (size_t k = 0; k < dst.size(); ++k)
      if (!src[k].is_zero()) dst[k] = dst[k] + src[k].times_monomial(m, c);
  }
  void scale(std::vector<Poly>& t, const Scalar& c) const {
    if (!on) return;
    for (auto& p : t) p = p.scaled(c);
  }
};

}  // namespace

ModuleGB module_buchberger(const RingPtr& ring, const ModOrder& ord, std::vector<Vec> in_gens,
                           bool track_trails) {
  TrailOps T{ring, track_trails};
  const size_t ngens = in_gens.size();

  std::vector<Vec> basis;
  std::vector<std::vector<Poly>> trails;
  for (size_t i = 0; i < ngens; ++i) {
    if (in_gens[i].is_zero()) continue;  // zero generators dropped silently
    basis.push_back(in_gens[i]);
    if (track_trails) trails.push_back(T.unit(ngens, i));
  }

  const bool rank1 = ord.kind != ModOrder::Kind::Schreyer &&
                     std::all_of(basis.begin(), basis.end(),
                                 [](const Vec& v) { return v.max_comp() <= 0; });

  // pending pairs ordered by (lcm degree, i, j); processed set for the chain criterion
  std::set<std::tuple<int, int, int>> pending;
  std::set<std::pair<int, int>> processed;
  auto push_pairs_for = [&](int t) {
    for (int k = 0; k < t; ++k) {
      if (basis[static_cast<size_t>(k)].is_zero()) continue;
      if (basis[static_cast<size_t>(k)].lead().comp != basis[static_cast<size_t>(t)].lead().comp)
        continue;
      const Monomial l =
          basis[static_cast<size_t>(k)].lead().m.lcm(basis[static_cast<size_t>(t)].lead().m);
      pending.insert({static_cast<int>(l.deg), k, t});
    }
  };
  for (size_t t = 1; t < basis.size(); ++t) push_pairs_for(static_cast<int>(t));

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    processed.insert({i, j});
    const Vec& gi = basis[static_cast<size_t>(i)];
    const Vec& gj = basis[static_cast<size_t>(j)];
    const Monomial lcm = gi.lead().m.lcm(gj.lead().m);

    if (rank1 && gi.lead().m.coprime_with(gj.lead().m)) continue;  // product criterion
    // chain criterion: some k with lead dividing the lcm, both side pairs done
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == static_cast<size_t>(i) || k == static_cast<size_t>(j)) continue;
      const Vec& gk = basis[k];
      if (gk.is_zero() || gk.lead().comp != gi.lead().comp) continue;
      if (!gk.lead().m.divides(lcm)) continue;
      auto key_ik = std::minmax(static_cast<int>(k), i);
      auto key_jk = std::minmax(static_cast<int>(k), j);
      if (processed.count({key_ik.first, key_ik.second}) &&
          processed.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    const Monomial ui = lcm.divided_by(gi.lead().m);
    const Monomial uj = lcm.divided_by(gj.lead().m);
    const Scalar ci = gi.lead_coeff().inv();
    const Scalar cj = gj.lead_coeff().inv();
    Vec s = gi.times_monomial(ui, ci).minus(ord, gj.times_monomial(uj, cj));
    std::vector<Poly> strail;
    if (track_trails) {
      strail.assign(ngens, Poly::zero(ring));
      T.axpy(strail, ui, ci, trails[static_cast<size_t>(i)]);
      T.axpy(strail, uj, -cj, trails[static_cast<size_t>(j)]);
    }
    std::vector<std::vector<std::pair<Monomial, Scalar>>> q;
    Vec r = vec_normal_form(ord, std::move(s), basis, track_trails ? &q : nullptr);
    if (r.is_zero()) continue;
    if (track_trails) {
      for (size_t k = 0; k < basis.size(); ++k)
        for (const auto& [m, c] : q[k]) T.axpy(strail, m, -c, trails[k]);
    }
    basis.push_back(std::move(r));
    if (track_trails) trails.push_back(std::move(strail));
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // interreduce to the reduced basis: minimal leads, monic, reduced tails
  std::vector<int> keep;
  {
    std::vector<int> idx(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return ord.cmp(basis[static_cast<size_t>(a)].lead(), basis[static_cast<size_t>(b)].lead()) < 0;
    });
    for (int i : idx) {
      const VTerm& lt = basis[static_cast<size_t>(i)].lead();
      bool dominated = false;
      for (int k : keep) {
        const VTerm& kt = basis[static_cast<size_t>(k)].lead();
        if (kt.comp == lt.comp && kt.m.divides(lt.m)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) keep.push_back(i);
    }
  }
  std::vector<Vec> reduced;
  std::vector<std::vector<Poly>> rtrails;
  std::vector<Vec> keepers;
  keepers.reserve(keep.size());
  for (int i : keep) keepers.push_back(basis[static_cast<size_t>(i)]);
  for (size_t n = 0; n < keep.size(); ++n) {
    const int i = keep[n];
    const Vec& g = basis[static_cast<size_t>(i)];
    // tail reduction only: a kept lead never divides another kept lead, and a
    // lead cannot divide the strictly smaller monomials of its own tail
    Vec head, tail;
    head.entries().push_back(g.entries().front());
    tail.entries().assign(g.entries().begin() + 1, g.entries().end());
    std::vector<std::vector<std::pair<Monomial, Scalar>>> q;
    Vec nf = head.plus(ord, vec_normal_form(ord, tail, keepers, T.on ? &q : nullptr));
    std::vector<Poly> tr;
    if (T.on) {
      tr = trails[static_cast<size_t>(i)];
      for (size_t k = 0; k < keepers.size(); ++k)
        for (const auto& [m, c] : q[k]) T.axpy(tr, m, -c, trails[static_cast<size_t>(keep[k])]);
    }
    const Scalar lc = nf.lead_coeff().inv();
    Vec out = nf.scaled(lc);
    T.scale(tr, lc);
    reduced.push_back(std::move(out));
    rtrails.push_back(std::move(tr));
  }

  // descending leads for determinism
  std::vector<int> order_idx(reduced.size());
  for (size_t i = 0; i < reduced.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return ord.cmp(reduced[static_cast<size_t>(a)].lead(), reduced[static_cast<size_t>(b)].lead()) > 0;
  });
  ModuleGB out;
  for (int i : order_idx) {
    out.basis.push_back(std::move(reduced[static_cast<size_t>(i)]));
    if (T.on) out.trails.push_back(std::move(rtrails[static_cast<size_t>(i)]));
  }
  return out;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens) {
  ModOrder ord = ModOrder::pot(ring->order());
  std::vector<Vec> vecs;
  for (const auto& g : gens) {
    if (!g.is_zero()) vecs.push_back(Vec::from_poly(g));
  }
  ModuleGB gb = module_buchberger(ring, ord, std::move(vecs), false);
  GroebnerBasis out;
  out.ring = ring;
  out.reduced = true;
  for (const auto& v : gb.basis) out.gens.push_back(v.coord(ring, 0));
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!f.ring()->compatible(*gb.ring)) throw RingMismatch();
  ModOrder ord = ModOrder::pot(gb.ring->order());
  std::vector<Vec> basis;
  basis.reserve(gb.gens.size());
  for (const auto& g : gb.gens) basis.push_back(Vec::from_poly(g));
  Vec r = vec_normal_form(ord, Vec::from_poly(f.with_ring(gb.ring)), basis);
  return r.coord(gb.ring, 0);
}

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

const GroebnerBasis& Ideal::groebner() const {
  if (!gb_) gb_ = buchberger(ring_, gens_);
  return *gb_;
}

std::vector<Monomial> Ideal::initial_gens() const {
  std::vector<Monomial> lead;
  for (const auto& g : groebner().gens) lead.push_back(g.lead_monomial());
  return lead;
}

Poly Ideal::normal_form(const Poly& f) const { return socle::normal_form(f, groebner()); }

bool Ideal::contains_ideal(const Ideal& o) const {
  for (const auto& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& o) const { return contains_ideal(o) && o.contains_ideal(*this); }

bool Ideal::is_unit() const {
  const auto& g = groebner().gens;
  return g.size() == 1 && g[0].degree() == 0;
}

bool Ideal::is_zero_ideal() const { return groebner().gens.empty(); }

namespace {

// Largest subset of allowed variables containing no generator support.
int max_independent_subset(const std::vector<uint32_t>& supports, uint32_t allowed,
                           std::unordered_map<uint32_t, int>& memo) {
  auto hit = memo.find(allowed);
  if (hit != memo.end()) return hit->second;
  int result = -1;
  for (uint32_t s : supports) {
    if ((s & ~allowed) == 0) {
      // support fully inside the candidate set: exclude one of its variables
      int best = 0;
      for (int v = 0; v < 32; ++v)
        if (s & (1u << v))
          best = std::max(best, max_independent_subset(supports, allowed & ~(1u << v), memo));
      result = best;
      break;
    }
  }
  if (result < 0) result = __builtin_popcount(allowed);
  memo[allowed] = result;
  return result;
}

}  // namespace

int Ideal::krull_dim() const {
  if (dim_) return *dim_;
  if (is_unit()) throw UnitIdeal();
  std::vector<uint32_t> supports;
  for (const auto& m : initial_gens()) {
    uint32_t s = 0;
    for (int v = 0; v < ring_->nvars(); ++v)
      if (m.e[static_cast<size_t>(v)]) s |= 1u << v;
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end(), [](uint32_t a, uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  const uint32_t all = ring_->nvars() >= 32 ? ~0u : ((1u << ring_->nvars()) - 1);
  std::unordered_map<uint32_t, int> memo;
  dim_ = max_independent_subset(supports, all, memo);
  return *dim_;
}

const std::vector<Poly>& Ideal::minimal_generators() const {
  if (mingens_) return *mingens_;
  std::vector<Poly> result;
  if (is_unit()) {
    result.push_back(Poly::constant(ring_, Scalar::one(ring_->field())));
    mingens_ = std::move(result);
    return *mingens_;
  }
  if (!is_homogeneous()) throw NonHomogeneous();
  const auto& gb = groebner().gens;
  if (!gb.empty()) {
    int dmin = gb[0].degree(), dmax = gb[0].degree();
    for (const auto& g : gb) {
      dmin = std::min(dmin, g.degree());
      dmax = std::max(dmax, g.degree());
    }
    const Field& F = ring_->field();
    for (int d = dmin; d <= dmax; ++d) {
      const auto mons = monomials_of_degree(ring_->nvars(), d);
      std::unordered_map<Monomial, int, MonomialHash> index;
      for (size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
      auto to_row = [&](const Poly& p) {
        std::vector<Scalar> row(mons.size(), Scalar::zero(F));
        for (const auto& t : p.terms()) row[static_cast<size_t>(index.at(t.m))] = t.c;
        return row;
      };
      // span of S_1 * I_{d-1}: every m*g with deg m >= 1
      std::vector<std::vector<Scalar>> spanners;
      for (const auto& g : gb) {
        if (g.degree() >= d) continue;
        for (const auto& m : monomials_of_degree(ring_->nvars(), d - g.degree()))
          spanners.push_back(to_row(g.times_monomial(m, Scalar::one(F))));
      }
      std::vector<std::vector<Scalar>> candidates;
      std::vector<int> cand_src;
      for (size_t k = 0; k < gb.size(); ++k) {
        if (gb[k].degree() != d) continue;
        candidates.push_back(to_row(gb[k]));
        cand_src.push_back(static_cast<int>(k));
      }
      for (int c : linalg::complement_indices(F, spanners, candidates, static_cast<int>(mons.size())))
        result.push_back(gb[static_cast<size_t>(cand_src[static_cast<size_t>(c)])]);
    }
  }
  mingens_ = std::move(result);
  return *mingens_;
}

// ---------------------------------------------------------------------------
// Syzygies
// ---------------------------------------------------------------------------

namespace {

/// Minimal generators of the monomial ideal generated by lcm(m_i, m_j)/m_i
/// over j > i in the same component, with a deterministic witness for each.
std::vector<std::pair<Monomial, int>> schreyer_targets(const std::vector<VTerm>& leads, int i) {
  std::vector<std::pair<Monomial, int>> cand;
  for (size_t j = static_cast<size_t>(i) + 1; j < leads.size(); ++j) {
    if (leads[j].comp != leads[static_cast<size_t>(i)].comp) continue;
    const Monomial l = leads[static_cast<size_t>(i)].m.lcm(leads[j].m);
    cand.push_back({l.divided_by(leads[static_cast<size_t>(i)].m), static_cast<int>(j)});
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

}  // namespace

std::vector<ModuleElement> syzygies(const RingPtr& ring, const std::vector<Poly>& in_gens) {
  std::vector<Poly> gens;
  for (const auto& g : in_gens)
    if (!g.is_zero()) gens.push_back(g);
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw NonHomogeneous();

  GradedFreeModule target{ring, {}};
  for (const auto& g : gens) target.twists.push_back(g.degree());

  std::vector<ModuleElement> out;
  if (gens.empty()) return out;

  const ModOrder ord = ModOrder::pot(ring->order());
  std::vector<Vec> vecs;
  for (const auto& g : gens) vecs.push_back(Vec::from_poly(g));
  ModuleGB gb = module_buchberger(ring, ord, vecs, true);

  // gens in terms of the GB: full division
  const size_t r = gb.basis.size();
  std::vector<std::vector<Poly>> Q(gens.size(), std::vector<Poly>(r, Poly::zero(ring)));
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::vector<std::pair<Monomial, Scalar>>> q;
    Vec rem = vec_normal_form(ord, Vec::from_poly(gens[i]), gb.basis, &q);
    if (!rem.is_zero()) throw std::logic_error("generator does not reduce against its own GB");
    for (size_t k = 0; k < r; ++k) {
      std::vector<Term> terms;
      for (const auto& [m, c] : q[k]) terms.push_back({m, c});
      Q[i][k] = Poly(ring, std::move(terms));
    }
  }

  auto emit = [&](std::vector<Poly> coords) {
    ModuleElement me{target, std::move(coords)};
    if (!me.is_zero()) out.push_back(std::move(me));
  };

  // conversion syzygies: e_i - Q_i . A
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<Poly> coords(gens.size(), Poly::zero(ring));
    coords[i] = Poly::constant(ring, Scalar::one(ring->field()));
    for (size_t k = 0; k < r; ++k)
      for (size_t g = 0; g < gens.size(); ++g)
        if (!Q[i][k].is_zero() && !gb.trails[k][g].is_zero())
          coords[g] = coords[g] - Q[i][k] * gb.trails[k][g];
    emit(std::move(coords));
  }

  // Schreyer syzygies of the GB, pulled back through the trails
  std::vector<VTerm> leads;
  for (const auto& b : gb.basis) leads.push_back(b.lead());
  for (size_t i = 0; i < r; ++i) {
    for (const auto& [mu, j] : schreyer_targets(leads, static_cast<int>(i))) {
      const Monomial lcm = mu * leads[i].m;
      const Monomial uj = lcm.divided_by(leads[static_cast<size_t>(j)].m);
      const Scalar ci = gb.basis[i].lead_coeff().inv();
      const Scalar cj = gb.basis[static_cast<size_t>(j)].lead_coeff().inv();
      Vec s = gb.basis[i].times_monomial(mu, ci).minus(
          ord, gb.basis[static_cast<size_t>(j)].times_monomial(uj, cj));
      std::vector<std::vector<std::pair<Monomial, Scalar>>> q;
      Vec rem = vec_normal_form(ord, std::move(s), gb.basis, &q);
      if (!rem.is_zero()) throw std::logic_error("S-pair of a GB failed to reduce to zero");
      // tau = mu*ci*e_i - uj*cj*e_j - sum q_k e_k  (on the GB); push to gens via trails
      std::vector<Poly> tau(r, Poly::zero(ring));
      tau[i] = Poly::monomial(ring, mu, ci);
      tau[static_cast<size_t>(j)] = tau[static_cast<size_t>(j)] - Poly::monomial(ring, uj, cj);
      for (size_t k = 0; k < r; ++k) {
        std::vector<Term> terms;
        for (const auto& [m, c] : q[k]) terms.push_back({m, -c});
        tau[k] = tau[k] + Poly(ring, std::move(terms));
      }
      std::vector<Poly> coords(gens.size(), Poly::zero(ring));
      for (size_t k = 0; k < r; ++k)
        for (size_t g = 0; g < gens.size(); ++g)
          if (!tau[k].is_zero() && !gb.trails[k][g].is_zero())
            coords[g] = coords[g] + tau[k] * gb.trails[k][g];
      emit(std::move(coords));
    }
  }
  return out;
}

bool module_contains(const GradedFreeModule& mod, const std::vector<ModuleElement>& gens,
                     const ModuleElement& v) {
  const RingPtr& ring = mod.ring;
  const ModOrder ord = ModOrder::pot(ring->order());
  std::vector<Vec> vecs;
  for (const auto& g : gens) {
    std::vector<VEntry> entries;
    for (size_t c = 0; c < g.coords.size(); ++c)
      for (const auto& t : g.coords[c].terms())
        entries.push_back({VTerm{static_cast<int>(c), t.m}, t.c});
    vecs.push_back(Vec::from_terms(ord, std::move(entries)));
  }
  ModuleGB gb = module_buchberger(ring, ord, std::move(vecs), false);
  std::vector<VEntry> entries;
  for (size_t c = 0; c < v.coords.size(); ++c)
    for (const auto& t : v.coords[c].terms())
      entries.push_back({VTerm{static_cast<int>(c), t.m}, t.c});
  return vec_normal_form(ord, Vec::from_terms(ord, std::move(entries)), gb.basis).is_zero();
}

// ---------------------------------------------------------------------------
// Colon, intersection, regular sequences
// ---------------------------------------------------------------------------

namespace {

RingPtr extended_ring(const RingPtr& ring) {
  std::vector<std::string> names = ring->names();
  names.push_back("t_elim");
  return Ring::make(ring->nvars() + 1, ring->field(), Order::elim(ring->nvars() + 1),
                    std::move(names));
}

Poly embed(const Poly& p, const RingPtr& ext) { return Poly(ext, p.terms()); }

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw RingMismatch();
  const RingPtr ring = a.ring();
  const RingPtr ext = extended_ring(ring);
  const int tv = ring->nvars();
  const Poly t = Poly::variable(ext, tv);
  const Poly one_minus_t = Poly::constant(ext, Scalar::one(ext->field())) - t;
  std::vector<Poly> gens;
  for (const auto& g : a.gens()) gens.push_back(t * embed(g, ext));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * embed(g, ext));
  GroebnerBasis gb = buchberger(ext, gens);
  std::vector<Poly> result;
  for (const auto& g : gb.gens) {
    bool has_t = false;
    for (const auto& term : g.terms())
      if (term.m.e[static_cast<size_t>(tv)]) {
        has_t = true;
        break;
      }
    if (!has_t) result.push_back(Poly(ring, g.terms()));
  }
  return Ideal(ring, std::move(result));
}

Poly exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  check_same_ring(f, g);
  const RingPtr ring = f.ring();
  Poly rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    if (!g.lead_monomial().divides(rem.lead_monomial()))
      throw std::invalid_argument("polynomial division is not exact");
    const Monomial q = rem.lead_monomial().divided_by(g.lead_monomial());
    const Scalar c = rem.lead_coeff() / g.lead_coeff();
    quot.push_back({q, c});
    rem = rem - g.times_monomial(q, c);
  }
  return Poly(ring, std::move(quot));
}

Ideal colon(const Ideal& a, const Poly& b) {
  if (b.is_zero()) {
    // (A : 0) = (1)
    return Ideal(a.ring(), {Poly::constant(a.ring(), Scalar::one(a.ring()->field()))});
  }
  Ideal meet = intersect(a, Ideal(a.ring(), {b}));
  std::vector<Poly> gens;
  for (const auto& g : meet.gens()) gens.push_back(exact_divide(g, b));
  return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw RingMismatch();
  if (b.gens().empty())
    return Ideal(a.ring(), {Poly::constant(a.ring(), Scalar::one(a.ring()->field()))});
  bool first = true;
  Ideal acc;
  for (const auto& g : b.gens()) {
    Ideal part = colon(a, g);
    acc = first ? std::move(part) : intersect(acc, part);
    first = false;
  }
  return acc;
}

bool is_regular_sequence(const std::vector<Poly>& seq, const Ideal& modulo) {
  Ideal j = modulo;
  for (const auto& f : seq) {
    if (f.is_zero()) return false;
    if (j.is_unit()) return false;
    if (!colon(j, f).equals(j)) return false;
    std::vector<Poly> gens = j.gens();
    gens.push_back(f);
    j = Ideal(j.ring(), std::move(gens));
  }
  return true;
}

}  // namespace socle
