#include "bh/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bh/error.hpp"

namespace bh {

IntMatrix reflection_matrix(const IntMatrix& g, std::size_t i) {
  if (i >= g.dim() || g(i, i) != -2)
    fail(ErrorCode::NotARoot, "basis vector " + std::to_string(i) + " does not have square -2");
  IntMatrix s = IntMatrix::identity(g.dim());
  // column k is the image of e_k = e_k + <e_k, e_i> e_i
  for (std::size_t k = 0; k < g.dim(); ++k)
    s(i, k) += g(k, i);
  return s;
}

CoxeterResult coxeter_element(const IntMatrix& g, long n_max) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) != -2)
      fail(ErrorCode::NotARootBasis, "diagonal entry " + std::to_string(i) + " is " + g(i, i).get_str());
  CoxeterResult r;
  r.tau = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    r.tau = r.tau * reflection_matrix(g, i);
  r.char_poly = char_poly(r.tau);
  r.factorization = factor_cyclotomic(r.char_poly, n_max);
  if (r.factorization.fully_cyclotomic()) {
    long l = 1;
    for (const auto& [k, m] : r.factorization.factors)
      l = std::lcm(l, k);
    const IntMatrix id = IntMatrix::identity(n);
    if (pow(r.tau, static_cast<unsigned long>(l)) == id) {
      for (long d = 1; d <= l; ++d)
        if (l % d == 0 && pow(r.tau, static_cast<unsigned long>(d)) == id) {
          r.order = d;
          break;
        }
    }
  }
  return r;
}

bool preserves_form(const IntMatrix& tau, const IntMatrix& g) {
  return tau.transposed() * g * tau == g;
}

bool is_plus_minus_reciprocal(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  std::vector<Integer> rev(c.rbegin(), c.rend());
  IntPolynomial r(std::move(rev));
  return r == p || r == -p;
}

LatticeInvariants lattice_invariants(const IntMatrix& g) {
  if (!g.is_symmetric())
    fail(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
  const std::size_t n = g.dim();
  LatticeInvariants inv;
  inv.rank = n;
  inv.det = det_bareiss(g);

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = g(i, j);
  auto add_to = [&](std::size_t dst, std::size_t src) {
    // congruence with the elementary matrix adding src to dst
    for (std::size_t j = 0; j < n; ++j)
      a[dst][j] += a[src][j];
    for (std::size_t i = 0; i < n; ++i)
      a[i][dst] += a[i][src];
  };
  auto swap_idx = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a)
      std::swap(row[p], row[q]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0)
        ++p;
      if (p < n) {
        swap_idx(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && a[k][q] == 0)
          ++q;
        if (q == n) {
          ++inv.zero;
          continue;
        }
        add_to(k, q);  // a[k][k] becomes 2 a[k][q] since a[q][q] = 0
      }
    }
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0)
        continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j)
        a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j)
        a[j][i] = a[i][j];
    }
    if (pivot > 0)
      ++inv.positive;
    else
      ++inv.negative;
  }
  return inv;
}

namespace {

// Joint colour refinement so that colours are comparable between the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const IntMatrix& g1, const IntMatrix& g2) {
  const std::size_t n = g1.dim();
  std::vector<int> c1(n, 0), c2(n, 0);
  std::size_t classes = 0;
  for (int round = 0; round <= static_cast<int>(n); ++round) {
    std::map<std::pair<int, std::vector<std::pair<long, int>>>, int> ids;
    auto signature = [&](const IntMatrix& g, const std::vector<int>& c, std::size_t v) {
      std::vector<std::pair<long, int>> nb;
      nb.emplace_back(g(v, v).get_si(), -1);
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && g(v, w) != 0)
          nb.emplace_back(g(v, w).get_si(), c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], nb);
    };
    std::vector<std::pair<int, std::vector<std::pair<long, int>>>> s1, s2;
    for (std::size_t v = 0; v < n; ++v) {
      s1.push_back(signature(g1, c1, v));
      s2.push_back(signature(g2, c2, v));
    }
    for (const auto& s : s1)
      ids.emplace(s, 0);
    for (const auto& s : s2)
      ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids)
      id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      c1[v] = ids[s1[v]];
      c2[v] = ids[s2[v]];
    }
    if (ids.size() == classes)
      break;
    classes = ids.size();
  }
  return {c1, c2};
}

}  // namespace

std::optional<std::vector<std::size_t>> graph_isomorphic(const IntMatrix& g1, const IntMatrix& g2) {
  if (g1.dim() != g2.dim())
    return std::nullopt;
  const std::size_t n = g1.dim();
  auto [c1, c2] = refine(g1, g2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2)
      return std::nullopt;
  }

  // Assign vertices of G2 in BFS order so each new vertex has assigned neighbours.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s])
      continue;
    std::vector<std::size_t> queue{s};
    placed[s] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::size_t v = queue[h];
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!placed[w] && g2(v, w) != 0) {
          placed[w] = true;
          queue.push_back(w);
        }
    }
  }

  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, std::size_t cand) {
    const std::size_t v = order[depth];
    if (g2(v, v) != g1(cand, cand))
      return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t u = order[d];
      if (g2(v, u) != g1(cand, perm[u]))
        return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n)
      return true;
    const std::size_t v = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || c1[cand] != c2[v] || !consistent(depth, cand))
        continue;
      used[cand] = true;
      perm[v] = cand;
      if (self(self, depth + 1))
        return true;
      used[cand] = false;
    }
    return false;
  };
  if (!search(search, 0))
    return std::nullopt;
  return perm;
}

}  // namespace bh
