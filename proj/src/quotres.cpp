#include "bh/quotres.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "bh/error.hpp"

namespace bh {

namespace {

std::string monomial_text(const Rational& c, const std::vector<std::pair<char, int>>& powers, bool first) {
  std::ostringstream os;
  Rational mag = abs(c);
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  bool any = false;
  for (auto [var, e] : powers)
    if (e != 0)
      any = true;
  if (!any || mag != 1) {
    os << mag.get_str();
    if (any)
      os << '*';
  }
  bool sep = false;
  for (auto [var, e] : powers) {
    if (e == 0)
      continue;
    if (sep)
      os << '*';
    sep = true;
    os << var;
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

}  // namespace

LaurentPoly2 LaurentPoly2::monomial(const Rational& c, int eu, int ev) {
  LaurentPoly2 p;
  p.add_term({eu, ev}, c);
  return p;
}

void LaurentPoly2::add_term(const Exponent& e, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

bool LaurentPoly2::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    if (e.first < 0 || e.second < 0)
      return false;
  return true;
}

Rational LaurentPoly2::coefficient(int eu, int ev) const {
  auto it = terms_.find({eu, ev});
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0)
      fail(ErrorCode::InvalidArgument, "negative power of zero");
    return rational_pow(Rational(1) / x, -e);
  }
  Rational r = 1;
  for (int i = 0; i < e; ++i)
    r *= x;
  return r;
}

}  // namespace

Rational LaurentPoly2::eval(const Rational& u, const Rational& v) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_)
    s += c * rational_pow(u, e.first) * rational_pow(v, e.second);
  return s;
}

std::vector<Rational> LaurentPoly2::restrict_u_zero() const {
  if (!is_polynomial())
    fail(ErrorCode::InvalidArgument, "restriction of a Laurent polynomial with negative exponents");
  std::vector<Rational> out;
  for (const auto& [e, c] : terms_) {
    if (e.first != 0)
      continue;
    if (out.size() <= static_cast<std::size_t>(e.second))
      out.resize(e.second + 1);
    out[e.second] = c;
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
  LaurentPoly2 r = monomial(1, 0, 0);
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out += monomial_text(c, {{'u', e.first}, {'v', e.second}}, first);
    first = false;
  }
  return out;
}

Poly3 Poly3::monomial(const Rational& c, int ex, int ey, int ez) {
  Poly3 p;
  if (c != 0)
    p.terms[{ex, ey, ez}] = c;
  return p;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms) {
    Rational& slot = terms[e];
    slot += c;
    if (slot == 0)
      terms.erase(e);
  }
  return *this;
}

std::string Poly3::to_string() const {
  if (terms.empty())
    return "0";
  std::string out;
  bool first = true;
  // Highest total degree first, matching how the curves are usually written.
  std::vector<std::pair<std::array<int, 3>, Rational>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first[2] > b.first[2];
  });
  for (const auto& [e, c] : sorted) {
    out += monomial_text(c, {{'X', e[0]}, {'Y', e[1]}, {'Z', e[2]}}, first);
    first = false;
  }
  return out;
}

ResolutionChart::ResolutionChart(int i, int k) : i_(i), k_(k) {
  if (k < 2 || i < 1 || i > k)
    fail(ErrorCode::InvalidRange, "chart " + std::to_string(i) + " of order " + std::to_string(k));
}

std::array<LaurentPoly2::Exponent, 3> ResolutionChart::substitution() const {
  return {{{i_, i_ - 1}, {k_ - i_, k_ + 1 - i_}, {1, 1}}};
}

LaurentPoly2 ResolutionChart::substitute(const Poly3& p) const {
  const auto sub = substitution();
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms) {
    int eu = 0, ev = 0;
    for (int j = 0; j < 3; ++j) {
      eu += e[j] * sub[j].first;
      ev += e[j] * sub[j].second;
    }
    out += LaurentPoly2::monomial(c, eu, ev);
  }
  return out;
}

Poly3 invariant_image(int a, int b, int k) {
  if (a <= 0 || b <= 0 || k < 2 || (a + b) % k != 0)
    fail(ErrorCode::InvalidRange, "curve x^" + std::to_string(a) + " + y^" + std::to_string(b) +
                                    " is not compatible with order " + std::to_string(k));
  return Poly3::monomial(1, 0, 0, a) + Poly3::monomial(1, 0, (a + b) / k, 0);
}

Poly3 invariant_image(int m, int k) {
  if (m <= 0 || m >= k)
    fail(ErrorCode::InvalidRange, "need 0 < m < k, got m=" + std::to_string(m) + ", k=" + std::to_string(k));
  return invariant_image(m, k - m, k);
}

ProperTransform proper_transform(const Poly3& curve, const ResolutionChart& chart) {
  LaurentPoly2 total = chart.substitute(curve);
  if (total.is_zero())
    fail(ErrorCode::NotFactorable, "curve pulls back to zero");
  int mu = INT_MAX, mv = INT_MAX;
  for (const auto& [e, c] : total.terms()) {
    mu = std::min(mu, e.first);
    mv = std::min(mv, e.second);
  }
  LaurentPoly2 unit = total * LaurentPoly2::monomial(1, -mu, -mv);
  if (unit.coefficient(0, 0) == 0)
    fail(ErrorCode::NotFactorable, "no monomial factorization with a unit in chart " +
                                     std::to_string(chart.index()) + ": " + total.to_string());
  return {{mu, mv}, unit};
}

bool chart_transitions_consistent(int k) {
  for (int i = 1; i < k; ++i) {
    const auto next = ResolutionChart(i + 1, k).substitution();
    const auto here = ResolutionChart(i, k).substitution();
    // u' = 1/v, v' = u v^2
    for (int j = 0; j < 3; ++j) {
      auto [a, b] = next[j];
      LaurentPoly2 pulled = LaurentPoly2::monomial(1, 0, -a) * LaurentPoly2::monomial(1, b, 2 * b);
      if (!(pulled == LaurentPoly2::monomial(1, here[j].first, here[j].second)))
        return false;
    }
  }
  return true;
}

namespace {

IntPolynomial clear_denominators(const std::vector<Rational>& coeffs) {
  Integer l = 1;
  for (const Rational& c : coeffs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const Rational& c : coeffs) {
    Rational s = c * l;
    out.push_back(s.get_num());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

std::vector<ChartAttachment> scan_attachments(const Poly3& curve, int k) {
  std::vector<ChartAttachment> out;
  for (int j = 1; j < k; ++j) {
    ProperTransform pt = proper_transform(curve, ResolutionChart(j, k));
    IntPolynomial r = clear_denominators(pt.unit.restrict_u_zero());
    // Strip the root v = 0; that point lies on E_(j-1) and is seen from chart j-1.
    std::size_t low = 0;
    while (low < r.coefficients().size() && r.coefficients()[low] == 0)
      ++low;
    if (low > 0)
      r = IntPolynomial(std::vector<Integer>(r.coefficients().begin() + low, r.coefficients().end()));
    if (r.degree() <= 0)
      continue;
    IntPolynomial g = primitive_gcd(r, r.derivative());
    IntPolynomial squarefree = exact_div(r.primitive_part(), g);
    out.push_back({j, squarefree.degree(), g.degree() == 0});
  }
  return out;
}

int attachment_index(int m, int k) {
  if (m <= 0 || m >= k)
    fail(ErrorCode::InvalidRange, "need 0 < m < k, got m=" + std::to_string(m) + ", k=" + std::to_string(k));
  return k - m;
}

ChartAttachment attachment_double(int k) {
  if (k < 2)
    fail(ErrorCode::InvalidRange, "need k >= 2, got " + std::to_string(k));
  return {k - 1, 2, true};
}

LemmaInstance lemma_single(int m, int k) {
  LemmaInstance li;
  li.image = invariant_image(m, k);
  li.chart = attachment_index(m, k);
  li.transform = proper_transform(li.image, ResolutionChart(li.chart, k));
  li.attachments = scan_attachments(li.image, k);
  return li;
}

LemmaInstance lemma_double(int k) {
  LemmaInstance li;
  li.image = invariant_image(2, 2 * k - 2, k);
  li.chart = attachment_double(k).component;
  li.transform = proper_transform(li.image, ResolutionChart(li.chart, k));
  li.attachments = scan_attachments(li.image, k);
  return li;
}

}  // namespace bh
