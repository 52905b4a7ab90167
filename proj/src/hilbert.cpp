#include "socle/hilbert.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "socle/combinat.hpp"

namespace socle {

std::vector<long long> poly_mult(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

namespace {

void poly_acc(std::vector<long long>& a, const std::vector<long long>& b, int shift) {
  if (a.size() < b.size() + static_cast<size_t>(shift)) a.resize(b.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + static_cast<size_t>(shift)] += b[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool dominated = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

struct KPoly {
  int nvars;
  std::map<std::string, std::vector<long long>> memo;

  std::string key(const std::vector<Monomial>& gens) const {
    std::string k;
    k.reserve(gens.size() * static_cast<size_t>(nvars));
    for (const auto& m : gens)
      for (int v = 0; v < nvars; ++v) k.push_back(static_cast<char>(m.e[static_cast<size_t>(v)]));
    return k;
  }

  std::vector<long long> run(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].deg == 0) return {0};  // unit ideal
    const std::string k = key(gens);
    auto hit = memo.find(k);
    if (hit != memo.end()) return hit->second;

    std::vector<long long> result;
    // pure powers: K-polynomial is the product of (1 - t^deg)
    bool all_pure = true;
    for (const auto& m : gens) {
      int support = 0;
      for (int v = 0; v < nvars; ++v) support += m.e[static_cast<size_t>(v)] ? 1 : 0;
      if (support > 1) {
        all_pure = false;
        break;
      }
    }
    if (all_pure) {
      result = {1};
      for (const auto& m : gens) {
        std::vector<long long> f(static_cast<size_t>(m.deg) + 1, 0);
        f[0] = 1;
        f[static_cast<size_t>(m.deg)] = -1;
        result = poly_mult(result, f);
      }
    } else {
      // pivot on the variable hitting the most generators
      int pivot = -1, best = -1;
      for (int v = 0; v < nvars; ++v) {
        int cnt = 0;
        for (const auto& m : gens) cnt += m.e[static_cast<size_t>(v)] ? 1 : 0;
        if (cnt > best) {
          best = cnt;
          pivot = v;
        }
      }
      std::vector<Monomial> without, quotient;
      for (const auto& m : gens) {
        Monomial q = m;
        if (q.e[static_cast<size_t>(pivot)]) {
          q.deg = static_cast<uint16_t>(q.deg - 1);
          q.e[static_cast<size_t>(pivot)] -= 1;
        } else {
          without.push_back(m);
        }
        quotient.push_back(q);
      }
      // N(I) = (1 - t) N(I restricted away from pivot) + t N(I : pivot)
      std::vector<long long> a = run(std::move(without));
      std::vector<long long> b = run(std::move(quotient));
      poly_acc(result, a, 0);
      std::vector<long long> neg_a(a.size(), 0);
      for (size_t i = 0; i < a.size(); ++i) neg_a[i] = -a[i];
      poly_acc(result, neg_a, 1);
      poly_acc(result, b, 1);
      while (result.size() > 1 && result.back() == 0) result.pop_back();
    }
    memo[k] = result;
    return result;
  }
};

// exact division by (1 - t); caller guarantees divisibility
std::vector<long long> divide_one_minus_t(const std::vector<long long>& n) {
  std::vector<long long> q(n.size() > 1 ? n.size() - 1 : 1, 0);
  long long acc = 0;
  for (size_t k = 0; k + 1 < n.size() || k < 1; ++k) {
    acc += k < n.size() ? n[k] : 0;
    if (k < q.size()) q[k] = acc;
  }
  long long total = 0;
  for (long long c : n) total += c;
  if (total != 0) throw std::logic_error("K-polynomial not divisible by (1 - t)");
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

std::vector<long long> kpolynomial(const std::vector<Monomial>& monomial_gens, int nvars) {
  KPoly engine{nvars, {}};
  return engine.run(monomial_gens);
}

long long HilbertData::value(int d) const {
  if (d < 0) return 0;
  long long acc = 0;
  for (size_t k = 0; k < numerator.size(); ++k) {
    const int shift = d - static_cast<int>(k);
    if (shift < 0) break;
    acc += numerator[k] * binom(nvars - 1 + shift, nvars - 1);
  }
  return acc;
}

HilbertData hilbert(const Ideal& I) {
  HilbertData out;
  out.nvars = I.ring()->nvars();
  if (I.is_unit()) {
    out.numerator = {0};
    out.dim = 0;
    out.h_vector = {};
    out.multiplicity = 0;
    return out;
  }
  out.numerator = kpolynomial(I.initial_gens(), out.nvars);
  out.dim = I.krull_dim();
  std::vector<long long> h = out.numerator;
  for (int k = 0; k < out.nvars - out.dim; ++k) h = divide_one_minus_t(h);
  out.h_vector = h;
  for (long long c : h) {
    out.multiplicity += c;
    if (c < 0) out.h_nonnegative = false;
  }
  return out;
}

}  // namespace socle
