#include "socle/koszul.hpp"

#include <unordered_map>

#include "socle/combinat.hpp"
#include "socle/linalg.hpp"

namespace socle {

QuotientRing::QuotientRing(Ideal I) : ideal_(std::move(I)) {
  if (!ideal_.is_artinian()) throw NotArtinian();
  const RingPtr& ring = ideal_.ring();
  const auto leads = ideal_.initial_gens();
  auto standard = [&](int d) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
      bool reducible = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          reducible = true;
          break;
        }
      if (!reducible) out.push_back(m);
    }
    return out;
  };
  for (int d = 0;; ++d) {
    auto b = standard(d);
    if (b.empty()) break;
    socle_ = d;
    basis_.push_back(std::move(b));
  }
  // multiplication tables
  const Field& field = ring->field();
  const auto& gb = ideal_.groebner();
  tables_.resize(basis_.size());
  for (int d = 0; d < socle_; ++d) {
    std::unordered_map<Monomial, int, MonomialHash> up;
    for (size_t k = 0; k < basis_[static_cast<size_t>(d) + 1].size(); ++k)
      up[basis_[static_cast<size_t>(d) + 1][k]] = static_cast<int>(k);
    auto& slot = tables_[static_cast<size_t>(d)];
    slot.resize(static_cast<size_t>(ring->nvars()));
    for (int var = 0; var < ring->nvars(); ++var) {
      auto& cols = slot[static_cast<size_t>(var)];
      cols.resize(basis_[static_cast<size_t>(d)].size());
      for (size_t j = 0; j < basis_[static_cast<size_t>(d)].size(); ++j) {
        const Poly img = normal_form(
            Poly::monomial(ring, basis_[static_cast<size_t>(d)][j] * Monomial::var(var),
                           Scalar::one(field)),
            gb);
        std::vector<Scalar> col(basis_[static_cast<size_t>(d) + 1].size(), Scalar::zero(field));
        for (const auto& t : img.terms()) col[static_cast<size_t>(up.at(t.m))] = t.c;
        cols[j] = std::move(col);
      }
    }
  }
}

namespace {

/// Degreewise construction of a minimal R-free resolution of k, carried out
/// over a concrete arithmetic policy.
template <class Ops>
ResidueBetti resolve_worker(const Ops& ops, const QuotientRing& R, int steps, int slack,
                            bool stop_early) {
  using Elt = typename Ops::Elt;
  const RingPtr& ring = R.ideal().ring();
  const int nvars = ring->nvars();
  const int cap = steps + slack;

  ResidueBetti out;
  out.steps = steps;
  out.slack = slack;
  out.betti[{0, 0}] = 1;

  // converted multiplication tables: tab[d][var][col] over basis(d+1)
  std::vector<std::vector<std::vector<std::vector<Elt>>>> tab(
      static_cast<size_t>(R.socle_degree()));
  for (int d = 0; d < R.socle_degree(); ++d) {
    tab[static_cast<size_t>(d)].resize(static_cast<size_t>(nvars));
    for (int v = 0; v < nvars; ++v) {
      const auto& src = R.mult(v, d);
      auto& dst = tab[static_cast<size_t>(d)][static_cast<size_t>(v)];
      dst.resize(src.size());
      for (size_t c = 0; c < src.size(); ++c) {
        dst[c].reserve(src[c].size());
        for (const auto& s : src[c]) dst[c].push_back(ops.from_scalar(s));
      }
    }
  }

  struct Step {
    std::vector<int> gdeg;                  // generator degrees
    std::vector<std::vector<Elt>> image;    // image in (F_{prev})_{gdeg}
  };

  // piece of F at internal degree j: blocks (gen g, R-basis of degree j - gdeg[g])
  auto piece_dim = [&](const Step& s, int j) {
    int dim = 0;
    for (int d : s.gdeg) dim += R.dim(j - d);
    return dim;
  };
  auto block_offsets = [&](const Step& s, int j) {
    std::vector<int> off(s.gdeg.size() + 1, 0);
    for (size_t g = 0; g < s.gdeg.size(); ++g)
      off[g + 1] = off[g] + R.dim(j - s.gdeg[g]);
    return off;
  };
  // v in (F)_j -> x_var * v in (F)_{j+1}
  auto mono_apply = [&](const Step& s, int j, const std::vector<Elt>& v, int var) {
    const auto off_in = block_offsets(s, j);
    const auto off_out = block_offsets(s, j + 1);
    std::vector<Elt> out_v(static_cast<size_t>(piece_dim(s, j + 1)), ops.zero());
    for (size_t g = 0; g < s.gdeg.size(); ++g) {
      const int e = j - s.gdeg[g];
      if (e < 0 || e >= R.socle_degree() || R.dim(e) == 0 || R.dim(e + 1) == 0) continue;
      const auto& t = tab[static_cast<size_t>(e)][static_cast<size_t>(var)];
      for (int col = 0; col < R.dim(e); ++col) {
        const Elt& x = v[static_cast<size_t>(off_in[g] + col)];
        if (ops.is_zero(x)) continue;
        const auto& tcol = t[static_cast<size_t>(col)];
        for (int row = 0; row < R.dim(e + 1); ++row)
          if (!ops.is_zero(tcol[static_cast<size_t>(row)]))
            out_v[static_cast<size_t>(off_out[g] + row)] = ops.add(
                out_v[static_cast<size_t>(off_out[g] + row)],
                ops.mul(x, tcol[static_cast<size_t>(row)]));
      }
    }
    return out_v;
  };
  // multiply an image vector by a full monomial, one variable at a time
  auto monomial_apply = [&](const Step& s, int j, std::vector<Elt> v, const Monomial& m) {
    int at = j;
    for (int var = 0; var < nvars; ++var)
      for (int k = 0; k < m.e[static_cast<size_t>(var)]; ++k) v = mono_apply(s, at++, v, var);
    return v;
  };

  // F_0 = R; F_1 = R(-1)^{dim R_1} with the variable basis as its image
  Step f0;
  f0.gdeg = {0};
  Step f1;
  for (int k = 0; k < R.dim(1); ++k) {
    f1.gdeg.push_back(1);
    std::vector<Elt> img(static_cast<size_t>(R.dim(1)), ops.zero());
    img[static_cast<size_t>(k)] = ops.one();
    f1.image.push_back(std::move(img));
  }
  if (!f1.gdeg.empty()) out.betti[{1, 1}] = static_cast<long long>(f1.gdeg.size());

  std::vector<Step> F{f0, f1};
  for (int i = 1; i < steps; ++i) {
    const Step& cur = F[static_cast<size_t>(i)];
    const Step& prev = F[static_cast<size_t>(i) - 1];
    Step next;
    std::vector<std::vector<std::vector<Elt>>> kernels(static_cast<size_t>(cap) + 1);
    for (int j = i + 1; j <= cap; ++j) {
      // matrix of the differential (F_i)_j -> (F_{i-1})_j
      const int ncols = piece_dim(cur, j);
      const int nrows = piece_dim(prev, j);
      if (ncols == 0) continue;
      linalg::Mat<Ops> M(ops, nrows, ncols);
      int col = 0;
      for (size_t g = 0; g < cur.gdeg.size(); ++g) {
        const int e = j - cur.gdeg[g];
        if (e < 0 || R.dim(e) == 0) continue;
        for (const auto& m : R.basis(e)) {
          const auto image = monomial_apply(prev, cur.gdeg[g], cur.image[g], m);
          for (int row = 0; row < nrows; ++row)
            if (!ops.is_zero(image[static_cast<size_t>(row)]))
              M.at(row, col) = image[static_cast<size_t>(row)];
          ++col;
        }
      }
      kernels[static_cast<size_t>(j)] = linalg::kernel(std::move(M));

      // minimal generators of the kernel in degree j
      linalg::RowSpan<Ops> span(ops, ncols);
      if (j - 1 >= 0)
        for (const auto& w : kernels[static_cast<size_t>(j) - 1])
          for (int var = 0; var < nvars; ++var) span.add(mono_apply(cur, j - 1, w, var));
      long long fresh = 0;
      for (const auto& w : kernels[static_cast<size_t>(j)]) {
        if (!span.add(w)) continue;
        ++fresh;
        next.gdeg.push_back(j);
        next.image.push_back(w);
      }
      if (fresh) out.betti[{i + 1, j}] = fresh;
      if (stop_early && fresh && j != i + 1) {
        out.stopped_early = true;
        return out;
      }
    }
    F.push_back(std::move(next));
  }
  return out;
}

}  // namespace

ResidueBetti resolve_residue_field(const QuotientRing& R, int steps, int degree_slack,
                                   bool stop_at_off_diagonal) {
  const Field& f = R.ideal().ring()->field();
  if (steps < 1 || degree_slack < 1) throw std::invalid_argument("steps and slack must be >= 1");
  if (linalg::has_fast_path(f))
    return resolve_worker(linalg::GFpOps(f.modulus()), R, steps, degree_slack,
                          stop_at_off_diagonal);
  return resolve_worker(linalg::ScalarOps(f), R, steps, degree_slack, stop_at_off_diagonal);
}

KoszulCertificate koszul_certificate(const Ideal& I, int steps, int slack,
                                     bool stop_at_off_diagonal) {
  KoszulCertificate cert;
  cert.steps = steps;
  cert.slack = slack;
  cert.field = I.ring()->field().str();
  for (const auto& g : I.minimal_generators()) {
    if (g.degree() != 2) {
      cert.verdict = KoszulCertificate::Verdict::NotKoszul;
      cert.reason = "ideal is not generated by quadrics";
      return cert;
    }
  }
  const QuotientRing R(I);
  const ResidueBetti rb = resolve_residue_field(R, steps, slack, stop_at_off_diagonal);
  cert.betti = rb.betti;
  for (const auto& [key, v] : rb.betti) {
    if (v > 0 && key.second != key.first) {
      cert.verdict = KoszulCertificate::Verdict::NotKoszul;
      cert.off_i = key.first;
      cert.off_j = key.second;
      cert.off_beta = v;
      cert.reason = "off-diagonal residue-field Betti number";
      return cert;
    }
  }
  cert.verdict = KoszulCertificate::Verdict::KoszulUpTo;
  cert.reason = "no off-diagonal residue-field Betti numbers in the checked range";
  return cert;
}

SyzygyObstruction syzygy_obstruction(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const Field& field = ring->field();
  const int n = ring->nvars();
  const auto& q = I.minimal_generators();
  const int s = static_cast<int>(q.size());
  for (const auto& g : q)
    if (g.degree() != 2) throw NotQuadratic();

  const auto s1 = monomials_of_degree(n, 1);
  const auto s2 = monomials_of_degree(n, 2);
  const auto s3 = monomials_of_degree(n, 3);
  const auto s4 = monomials_of_degree(n, 4);
  std::unordered_map<Monomial, int, MonomialHash> i2, i3, i4;
  for (size_t k = 0; k < s2.size(); ++k) i2[s2[k]] = static_cast<int>(k);
  for (size_t k = 0; k < s3.size(); ++k) i3[s3[k]] = static_cast<int>(k);
  for (size_t k = 0; k < s4.size(); ++k) i4[s4[k]] = static_cast<int>(k);

  // syzygies in degree 4: kernel of (S_2)^s -> S_4
  const int width4 = s * static_cast<int>(s2.size());
  std::vector<std::vector<Scalar>> rows4(
      s4.size(), std::vector<Scalar>(static_cast<size_t>(width4), Scalar::zero(field)));
  for (int g = 0; g < s; ++g)
    for (size_t m = 0; m < s2.size(); ++m)
      for (const auto& t : q[static_cast<size_t>(g)].terms())
        rows4[static_cast<size_t>(i4.at(t.m * s2[m]))]
             [static_cast<size_t>(g) * s2.size() + m] += t.c;
  const auto syz4 = linalg::kernel_of(field, rows4, width4);

  // linear syzygies: kernel of (S_1)^s -> S_3
  const int width3 = s * static_cast<int>(s1.size());
  std::vector<std::vector<Scalar>> rows3(
      s3.size(), std::vector<Scalar>(static_cast<size_t>(width3), Scalar::zero(field)));
  for (int g = 0; g < s; ++g)
    for (size_t m = 0; m < s1.size(); ++m)
      for (const auto& t : q[static_cast<size_t>(g)].terms())
        rows3[static_cast<size_t>(i3.at(t.m * s1[m]))]
             [static_cast<size_t>(g) * s1.size() + m] += t.c;
  const auto lin = linalg::kernel_of(field, rows3, width3);

  // Z_4 = S_1 * (linear syzygies) + span(Koszul syzygies)
  std::vector<std::vector<Scalar>> z;
  for (const auto& L : lin) {
    for (int var = 0; var < n; ++var) {
      std::vector<Scalar> v(static_cast<size_t>(width4), Scalar::zero(field));
      for (int g = 0; g < s; ++g)
        for (size_t m = 0; m < s1.size(); ++m) {
          const Scalar& c = L[static_cast<size_t>(g) * s1.size() + m];
          if (c.is_zero()) continue;
          v[static_cast<size_t>(g) * s2.size() +
            static_cast<size_t>(i2.at(s1[m] * Monomial::var(var)))] += c;
        }
      z.push_back(std::move(v));
    }
  }
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      std::vector<Scalar> v(static_cast<size_t>(width4), Scalar::zero(field));
      for (const auto& t : q[static_cast<size_t>(a)].terms())
        v[static_cast<size_t>(b) * s2.size() + static_cast<size_t>(i2.at(t.m))] += t.c;
      for (const auto& t : q[static_cast<size_t>(b)].terms())
        v[static_cast<size_t>(a) * s2.size() + static_cast<size_t>(i2.at(t.m))] -= t.c;
      z.push_back(std::move(v));
    }

  SyzygyObstruction out;
  out.syzygy_dim = static_cast<long long>(syz4.size());
  {
    // witness: first kernel vector outside span(Z)
    linalg::ScalarSpan scan(field, z, width4);
    out.z_dim = scan.dim();
    for (const auto& w : syz4) {
      if (scan.contains(w)) continue;
      out.found = true;
      GradedFreeModule mod{ring, std::vector<int>(static_cast<size_t>(s), 2)};
      std::vector<Poly> coords;
      for (int g = 0; g < s; ++g) {
        std::vector<Term> terms;
        for (size_t m = 0; m < s2.size(); ++m) {
          const Scalar& c = w[static_cast<size_t>(g) * s2.size() + m];
          if (!c.is_zero()) terms.push_back({s2[m], c});
        }
        coords.push_back(Poly(ring, std::move(terms)));
      }
      out.witness = ModuleElement{mod, std::move(coords)};
      // exactness of the witness
      Poly check = Poly::zero(ring);
      for (int g = 0; g < s; ++g) check = check + out.witness.coords[static_cast<size_t>(g)] *
                                                      q[static_cast<size_t>(g)];
      if (!check.is_zero()) throw std::logic_error("obstruction witness is not a syzygy");
      break;
    }
  }
  return out;
}

Degree2BoundReport degree2_betti_bound(const BettiTable& t) {
  Degree2BoundReport rep;
  rep.beta_2_4 = t.get(2, 4);
  rep.beta_1_2 = t.get(1, 2);
  rep.bound = binom(rep.beta_1_2, 2);
  rep.fires = rep.beta_2_4 > rep.bound;
  return rep;
}

}  // namespace socle
