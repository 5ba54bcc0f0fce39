#include "foliage_app/random.hpp"

namespace foliage::app {

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int n = 0;
  while (n == 0) {
    n = num(rng);
  }
  // One coefficient in four gets a denominator.
  const int d = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? den(rng) : 1;
  return normalized(Rational(n, d));
}

Monomial random_monomial(std::size_t nvars, unsigned degree, std::mt19937_64& rng) {
  Monomial m;
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (unsigned k = 0; k < degree; ++k) {
    const std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

}  // namespace

Poly random_poly(std::size_t nvars, unsigned max_degree, unsigned terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> t;
  for (unsigned i = 0; i < terms; ++i) {
    t.push_back({random_monomial(nvars, deg(rng), rng), random_coefficient(rng)});
  }
  return Poly(nvars, std::move(t));
}

Poly random_homogeneous(std::size_t nvars, unsigned degree, unsigned terms, std::mt19937_64& rng) {
  while (true) {
    std::vector<Term> t;
    for (unsigned i = 0; i < terms; ++i) {
      t.push_back({random_monomial(nvars, degree, rng), random_coefficient(rng)});
    }
    Poly p(nvars, std::move(t));
    if (!p.is_zero()) {
      return p;
    }
  }
}

PVec random_homogeneous_field(std::size_t nvars, unsigned degree, std::mt19937_64& rng) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < nvars; ++i) {
    c.push_back(random_homogeneous(nvars, degree, 3, rng));
  }
  return PVec(std::move(c));
}

PVec random_field(std::size_t nvars, unsigned max_degree, std::mt19937_64& rng) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < nvars; ++i) {
    c.push_back(random_poly(nvars, max_degree, 3, rng));
  }
  return PVec(std::move(c));
}

PForm random_form(std::size_t nvars, std::size_t formdeg, unsigned max_degree, std::mt19937_64& rng) {
  PForm out(nvars, formdeg);
  for (const FormIndex& idx : index_subsets(nvars, formdeg)) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
      out.add_term(idx, random_poly(nvars, max_degree, 3, rng));
    }
  }
  return out;
}

}  // namespace foliage::app
