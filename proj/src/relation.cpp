#include "relation.hpp"

#include <algorithm>

namespace knotloc::detail {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> to_q(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational h = q + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  std::vector<std::vector<Rational>> bs(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> B(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      bs[i] = to_q(b[i]);
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = B[j] == 0 ? Rational(0) : dot(to_q(b[i]), bs[j]) / B[j];
        for (std::size_t c = 0; c < bs[i].size(); ++c) bs[i][c] -= mu[i][j] * bs[j][c];
      }
      B[i] = dot(bs[i], bs[i]);
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  const Rational delta(3, 4);
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = round_nearest(mu[k][jj]);
      if (q != 0) {
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[jj][c];
        for (std::size_t l = 0; l <= jj; ++l) mu[k][l] -= Rational(q) * (l == jj ? Rational(1) : mu[jj][l]);
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

std::vector<std::vector<Integer>> small_relations(const std::vector<Rational>& x, const Integer& scale,
                                                  const Rational& tol, const Integer& max_coeff) {
  const std::size_t n = x.size();
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[i][n] = round_nearest(x[i] * Rational(scale));
  }
  lll_reduce(basis);
  std::vector<std::vector<Integer>> out;
  for (const auto& row : basis) {
    std::vector<Integer> c(row.begin(), row.begin() + static_cast<long>(n));
    Integer g = 0, l1 = 0;
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
      l1 += abs(c[i]);
      s += Rational(c[i]) * x[i];
    }
    if (g == 0) continue;
    for (auto& e : c) e /= g;
    l1 /= g;
    s /= Rational(g);
    if (std::any_of(c.begin(), c.end(), [&](const Integer& e) { return abs(e) > max_coeff; })) continue;
    if (abs(s) > tol * Rational(l1)) continue;
    auto first = std::find_if(c.begin(), c.end(), [](const Integer& e) { return e != 0; });
    if (*first < 0)
      for (auto& e : c) e = -e;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    Integer na = 0, nb = 0;
    for (const auto& e : a) na += e * e;
    for (const auto& e : b) nb += e * e;
    return na < nb;
  });
  return out;
}

}  // namespace knotloc::detail
