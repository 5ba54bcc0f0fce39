#include "foliage/modpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace foliage {

ModField::ModField(std::uint64_t prime) : p_(prime) {
  if (prime < 3 || prime >= (1ULL << 63)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^63");
  }
}

std::uint64_t ModField::pow(std::uint64_t base, std::uint64_t exponent) const {
  std::uint64_t r = 1;
  base %= p_;
  while (exponent > 0) {
    if (exponent & 1U) {
      r = mul(r, base);
    }
    base = mul(base, base);
    exponent >>= 1U;
  }
  return r;
}

std::uint64_t ModField::inv(std::uint64_t a) const {
  if (a % p_ == 0) {
    throw std::domain_error("inverse of zero in F_p");
  }
  return pow(a, p_ - 2);
}

std::uint64_t ModField::reduce(const Integer& z) const {
  Integer m;
  mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p_);
  return m.get_ui();
}

std::uint64_t ModField::reduce(const Rational& r) const {
  const std::uint64_t den = reduce(r.get_den());
  if (den == 0) {
    throw std::domain_error("prime " + std::to_string(p_) + " divides denominator " + r.get_den().get_str());
  }
  return mul(reduce(r.get_num()), inv(den));
}

std::uint64_t ModField::uniform(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return dist(rng);
}

ModPoly::ModPoly(std::size_t nvars, std::uint64_t prime, std::vector<ModTerm> terms)
    : nvars_(nvars), prime_(prime), terms_(std::move(terms)) {
  const ModField field(prime);
  std::sort(terms_.begin(), terms_.end(),
            [](const ModTerm& x, const ModTerm& y) { return grlex_greater(x.mono, y.mono); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    std::uint64_t sum = terms_[i].coeff % prime;
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) {
      sum = field.add(sum, terms_[j].coeff % prime);
      ++j;
    }
    if (sum != 0) {
      terms_[out++] = {terms_[i].mono, sum};
    }
    i = j;
  }
  terms_.resize(out);
}

bool operator==(const ModPoly& a, const ModPoly& b) {
  if (a.nvars_ != b.nvars_ || a.prime_ != b.prime_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

ModPoly reduce_mod(const Poly& p, std::uint64_t prime) {
  const ModField field(prime);
  std::vector<ModTerm> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    terms.push_back({t.mono, field.reduce(t.coeff)});
  }
  return ModPoly(p.nvars(), prime, std::move(terms));
}

namespace {

template <class TermRange, class CoeffOf>
std::uint64_t eval_terms(const TermRange& terms, std::size_t nvars, std::span<const std::uint64_t> point,
                         const ModField& field, CoeffOf coeff_of) {
  if (point.size() != nvars) {
    throw std::invalid_argument("eval_mod: point length mismatch");
  }
  std::vector<std::vector<std::uint64_t>> powers(nvars);
  std::vector<unsigned> top(nvars, 0);
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < nvars; ++i) {
      top[i] = std::max(top[i], t.mono[i]);
    }
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    powers[i].push_back(1);
    for (unsigned e = 1; e <= top[i]; ++e) {
      powers[i].push_back(field.mul(powers[i].back(), point[i] % field.prime()));
    }
  }
  std::uint64_t sum = 0;
  for (const auto& t : terms) {
    std::uint64_t v = coeff_of(t);
    for (std::size_t i = 0; i < nvars && v != 0; ++i) {
      if (t.mono[i] != 0) {
        v = field.mul(v, powers[i][t.mono[i]]);
      }
    }
    sum = field.add(sum, v);
  }
  return sum;
}

}  // namespace

std::uint64_t eval_mod(const ModPoly& p, std::span<const std::uint64_t> point) {
  const ModField field(p.prime());
  return eval_terms(p.terms(), p.nvars(), point, field, [](const ModTerm& t) { return t.coeff; });
}

std::uint64_t eval_mod(const Poly& p, std::span<const std::uint64_t> point, const ModField& field) {
  return eval_terms(p.terms(), p.nvars(), point, field, [&](const Term& t) { return field.reduce(t.coeff); });
}

bool identity_test_prob(const Poly& a, const Poly& b, std::uint64_t prime, unsigned trials,
                        std::mt19937_64& rng) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("identity_test_prob: variable-count mismatch");
  }
  const ModField field(prime);
  const ModPoly ra = reduce_mod(a, prime);
  const ModPoly rb = reduce_mod(b, prime);
  std::vector<std::uint64_t> point(a.nvars());
  for (unsigned t = 0; t < trials; ++t) {
    for (auto& c : point) {
      c = field.uniform(rng);
    }
    if (eval_mod(ra, point) != eval_mod(rb, point)) {
      return false;
    }
  }
  return true;
}

namespace {

void trim(DenseModPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

}  // namespace

DenseModPoly dense_gcd(DenseModPoly a, DenseModPoly b, const ModField& field) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv_lead = field.inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t factor = field.mul(a.back(), inv_lead);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]));
      }
      trim(a);
      if (a.empty()) {
        break;
      }
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv_lead = field.inv(a.back());
    for (auto& c : a) {
      c = field.mul(c, inv_lead);
    }
  }
  return a;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) {
      return n == small;
    }
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<UInt128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1U) {
        r = mulmod(r, b);
      }
      b = mulmod(b, b);
      e >>= 1U;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

}  // namespace foliage
