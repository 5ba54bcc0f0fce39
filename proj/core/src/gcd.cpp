#include "foliage/gcd.hpp"

#include <random>
#include <stdexcept>

#include "foliage/modpoly.hpp"

namespace foliage {

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) {
    throw std::out_of_range("coefficients_in: variable index out of range");
  }
  if (p.is_zero()) {
    return {};
  }
  std::vector<std::vector<Term>> buckets(p.degree_in(var) + 1);
  for (const Term& t : p.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.emplace_back(p.nvars(), std::move(b));
  }
  return out;
}

Poly from_coefficients(std::span<const Poly> coeffs, std::size_t var) {
  if (coeffs.empty()) {
    throw std::invalid_argument("from_coefficients: empty coefficient list");
  }
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const Term& t : coeffs[e].terms()) {
      Monomial m = t.mono;
      m.set(var, m[var] + static_cast<unsigned>(e));
      terms.push_back({m, t.coeff});
    }
  }
  return Poly(coeffs.front().nvars(), std::move(terms));
}

namespace {

// Univariate polynomials over Q[other vars], lowest power first, no zero top.
using UPoly = std::vector<Poly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) {
    p.pop_back();
  }
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly uprem(UPoly a, const UPoly& b) {
  if (b.empty()) {
    throw std::domain_error("pseudo-remainder by zero");
  }
  const int db = udeg(b);
  int remaining = udeg(a) - db + 1;
  if (remaining < 0) {
    return a;
  }
  const Poly& lb = b.back();
  while (!a.empty() && udeg(a) >= db) {
    const Poly la = a.back();
    const int shift = udeg(a) - db;
    for (auto& c : a) {
      c *= lb;
    }
    for (int i = 0; i <= db; ++i) {
      a[shift + i] -= la * b[i];
    }
    trim(a);
    --remaining;
  }
  if (remaining > 0) {
    const Poly factor = pow(lb, static_cast<unsigned>(remaining));
    for (auto& c : a) {
      c *= factor;
    }
  }
  return a;
}

UPoly divide_all(const UPoly& p, const Poly& d) {
  UPoly out;
  out.reserve(p.size());
  for (const Poly& c : p) {
    auto q = divide_exact(c, d);
    if (!q) {
      throw std::logic_error("subresultant sequence: inexact division");
    }
    out.push_back(std::move(*q));
  }
  return out;
}

UPoly to_u(const Poly& p, std::size_t var) {
  UPoly u = coefficients_in(p, var);
  trim(u);
  return u;
}

bool involves(const Poly& p, std::size_t var) { return p.degree_in(var) > 0; }

// Certifies gcd(a, b) is constant by specializing all but one variable at
// random points mod p; a coprime image with preserved leading coefficients
// rules out any common factor involving that variable.
bool modular_coprime(const Poly& a, const Poly& b) {
  std::mt19937_64 rng(0x5eed1234ULL);
  const ModField field(kDefaultPrime);
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (!involves(a, v) || !involves(b, v)) {
      continue;
    }
    bool certified = false;
    for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
      std::vector<std::uint64_t> point(a.nvars());
      for (auto& c : point) {
        c = field.uniform(rng);
      }
      auto image = [&](const Poly& p) {
        DenseModPoly out;
        for (const Poly& c : coefficients_in(p, v)) {
          out.push_back(eval_mod(c, point, field));
        }
        return out;
      };
      DenseModPoly ia;
      DenseModPoly ib;
      try {
        ia = image(a);
        ib = image(b);
      } catch (const std::domain_error&) {
        return false;
      }
      if (ia.back() == 0 || ib.back() == 0) {
        continue;
      }
      certified = dense_gcd(ia, ib, field).size() == 1;
    }
    if (!certified) {
      return false;
    }
  }
  return true;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly primitive_gcd_in(const Poly& a, const Poly& b, std::size_t var) {
  UPoly A = to_u(a, var);
  UPoly B = to_u(b, var);
  if (udeg(A) < udeg(B)) {
    std::swap(A, B);
  }
  const std::size_t n = a.nvars();
  Poly g = Poly::constant(n, Rational(1));
  Poly h = Poly::constant(n, Rational(1));
  while (true) {
    const int delta = udeg(A) - udeg(B);
    UPoly R = uprem(A, B);
    if (R.empty()) {
      break;
    }
    if (udeg(R) == 0) {
      return Poly::constant(n, Rational(1));
    }
    A = std::move(B);
    B = divide_all(R, g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      auto q = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
      if (!q) {
        throw std::logic_error("subresultant sequence: inexact h update");
      }
      h = std::move(*q);
    }
  }
  const Poly last = from_coefficients(B, var);
  const Poly c = content_in(last, var);
  auto pp = divide_exact(last, c);
  return *pp;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) {
    return make_monic(b);
  }
  if (b.is_zero()) {
    return make_monic(a);
  }
  if (a.is_constant() || b.is_constant()) {
    return Poly::constant(n, Rational(1));
  }
  if (modular_coprime(a, b)) {
    return Poly::constant(n, Rational(1));
  }
  if (divide_exact(a, b)) {
    return make_monic(b);
  }
  if (divide_exact(b, a)) {
    return make_monic(a);
  }
  std::size_t var = n;
  for (std::size_t v = n; v-- > 0;) {
    if (involves(a, v) && involves(b, v)) {
      var = v;
      break;
    }
  }
  if (var == n) {
    return Poly::constant(n, Rational(1));
  }
  for (std::size_t v = 0; v < n; ++v) {
    // A variable present in only one input cannot occur in the gcd.
    if (involves(a, v) != involves(b, v)) {
      const Poly& with = involves(a, v) ? a : b;
      const Poly& without = involves(a, v) ? b : a;
      return gcd_rec(content_in(with, v), without);
    }
  }
  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly pa = *divide_exact(a, ca);
  const Poly pb = *divide_exact(b, cb);
  const Poly g = primitive_gcd_in(pa, pb, var);
  return make_monic(gcd_rec(ca, cb) * g);
}

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("pseudo_remainder: variable-count mismatch");
  }
  if (b.is_zero()) {
    throw std::domain_error("pseudo-remainder by zero");
  }
  if (a.is_zero()) {
    return a;
  }
  UPoly r = uprem(to_u(a, var), to_u(b, var));
  if (r.empty()) {
    return Poly(a.nvars());
  }
  return from_coefficients(r, var);
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) {
    return p;
  }
  return p * (1 / p.leading_term().coeff);
}

Poly content_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) {
    return p;
  }
  Poly g(p.nvars());
  for (const Poly& c : coefficients_in(p, var)) {
    if (c.is_zero()) {
      continue;
    }
    g = gcd_rec(g, c);
    if (g.is_constant()) {
      break;
    }
  }
  return g;
}

Poly gcd_multivar(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("gcd_multivar: variable-count mismatch");
  }
  return gcd_rec(a, b);
}

Poly gcd_all(std::span<const Poly> polys) {
  if (polys.empty()) {
    return Poly(1);
  }
  Poly g(polys.front().nvars());
  for (const Poly& p : polys) {
    g = gcd_multivar(g, p);
    if (!g.is_zero() && g.is_constant()) {
      break;
    }
  }
  return g;
}

Poly resultant(const Poly& a, const Poly& b, std::size_t var) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("resultant: variable-count mismatch");
  }
  const std::size_t n = a.nvars();
  if (var >= n) {
    throw std::out_of_range("resultant: variable index out of range");
  }
  if (a.is_zero() || b.is_zero()) {
    return Poly(n);
  }
  UPoly A = to_u(a, var);
  UPoly B = to_u(b, var);
  Rational sign = 1;
  if (udeg(A) < udeg(B)) {
    std::swap(A, B);
    if (udeg(A) % 2 == 1 && udeg(B) % 2 == 1) {
      sign = -sign;
    }
  }
  if (udeg(B) == 0) {
    return pow(B[0], static_cast<unsigned>(udeg(A))) * sign;
  }
  Poly g = Poly::constant(n, Rational(1));
  Poly h = Poly::constant(n, Rational(1));
  while (true) {
    const int delta = udeg(A) - udeg(B);
    if (udeg(A) % 2 == 1 && udeg(B) % 2 == 1) {
      sign = -sign;
    }
    UPoly R = uprem(A, B);
    if (R.empty()) {
      return Poly(n);
    }
    A = std::move(B);
    B = divide_all(R, g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) {
      auto q = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
      if (!q) {
        throw std::logic_error("resultant: inexact h update");
      }
      h = std::move(*q);
    }
    if (udeg(B) == 0) {
      const unsigned da = static_cast<unsigned>(udeg(A));
      // h <- h^(1 - da) * lc(B)^da
      const Poly num = pow(B[0], da);
      if (da == 0) {
        return h * sign;
      }
      auto q = divide_exact(num, pow(h, da - 1));
      if (!q) {
        throw std::logic_error("resultant: inexact final step");
      }
      return *q * sign;
    }
  }
}

}  // namespace foliage
