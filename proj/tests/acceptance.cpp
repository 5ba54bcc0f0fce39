// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "foliage/ratmap.hpp"
#include "foliage/singular.hpp"
#include "foliage/text.hpp"
#include "foliage_app/catalog.hpp"
#include "foliage_app/random.hpp"
#include "foliage_app/suites.hpp"

using namespace foliage;
using namespace foliage::app;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) {
        note << "FAILED: ";
      } else {
        note << "; ";
      }
      note << what;
      pass = false;
    }
  }
};

struct Pair {
  unsigned nu;
  unsigned d;
};
constexpr Pair kPairs[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};

std::vector<std::pair<std::string, PForm>> acceptance_forms() {
  std::vector<std::pair<std::string, PForm>> out;
  for (unsigned d : {2u, 3u}) {
    out.emplace_back("Omega(d=" + std::to_string(d) + ")", omega_from_1d(reference_foliation(d)));
  }
  for (const Pair& p : kPairs) {
    out.emplace_back("eta(nu=" + std::to_string(p.nu) + ",d=" + std::to_string(p.d) + ")",
                     pullback_foliation(binomial_map(p.nu), reference_foliation(p.d)).eta);
  }
  return out;
}

void c1(Verdict& o) {
  const auto start = Clock::now();
  std::vector<std::string> degrees;
  for (const Pair& p : kPairs) {
    const FoliationQ q = pullback_foliation(binomial_map(p.nu), reference_foliation(p.d));
    const long want = static_cast<long>((p.d + 2) * p.nu) - 2;
    o.require(static_cast<long>(q.theta) == want, "theta " + std::to_string(q.theta) + " != " + std::to_string(want));
    o.require(q.removed_degree == 0, "nonzero removed factor");
    degrees.push_back(std::to_string(q.theta));
  }
  const double s = seconds_since(start);
  o.require(s < 10, "took " + std::to_string(s) + " s");
  o.note << "degrees " << degrees[0] << "," << degrees[1] << "," << degrees[2] << "," << degrees[3]
         << " = (d+2)nu-2, removed degree 0, " << s << " s";
}

void c2(Verdict& o) {
  const auto forms = acceptance_forms();
  for (const auto& [name, a] : forms) {
    const unsigned kq = degree_of(a) + 1 + static_cast<unsigned>(a.degree());
    o.require(interior_product(PVec::radial(a.nvars()), a).is_zero(), name + ": i_R eta != 0");
    o.require(interior_product(PVec::radial(a.nvars()), exterior_derivative(a)) == Rational(kq) * a,
              name + ": i_R d eta != (k+q) eta");
    if (a.degree() + 2 == a.nvars()) {
      // (N-2)-forms on C^N: k+q == N+d-1.
      o.require(kq == a.nvars() + degree_of(a) - 1, name + ": k+q != N+d-1");
    }
  }
  o.note << forms.size() << " forms, exact, zero tolerance";
}

void c3(Verdict& o) {
  const auto forms = acceptance_forms();
  for (const auto& [name, a] : forms) {
    o.require(is_integrable(a, CheckMode::exact()), name + " not integrable");
  }
  o.require(!is_decomposable_everywhere(symplectic_form(), CheckMode::exact()),
            "dx0^dx1 + dx2^dx3 passed Plucker");
  o.note << forms.size() << " forms integrable; dx0^dx1 + dx2^dx3 rejected by Plucker";
}

void c4(Verdict& o) {
  const RationalMap f2 = binomial_map(2);
  const auto w = binomial_family_witnesses(f2);
  o.require(w && w->size() == 8, "expected 8 witnesses");
  if (w) {
    for (const Point& p : *w) {
      o.require(is_indeterminacy_point(f2, p) && is_generic_at(f2, p), to_string(p) + " not a generic I(f) point");
      o.require(std::all_of(p.begin(), p.end(), [](const Rational& x) {
                  return abs(x) == 1;
                }),
                to_string(p) + " not of the form [1:+-1:+-1:+-1]");
    }
    for (std::size_t i = 0; i < w->size(); ++i) {
      for (std::size_t j = i + 1; j < w->size(); ++j) {
        o.require(!projectively_equal((*w)[i], (*w)[j]), "repeated witness");
      }
    }
    const WitnessReport r = indeterminacy_witness_check(f2, *w);
    o.require(r.complete, "completeness flag not set");
    o.note << "nu=2: " << r.count << " witnesses, " << r.status << "; ";
  }
  const RationalMap f3 = binomial_map(3);
  const auto w3 = binomial_family_witnesses(f3);
  o.require(w3.has_value(), "no rational witnesses for nu=3");
  if (w3) {
    const WitnessReport r3 = indeterminacy_witness_check(f3, *w3);
    o.require(!r3.complete && r3.all_generic && r3.status.rfind("partial witnesses", 0) == 0,
              "nu=3 status: " + r3.status);
    o.note << "nu=3: " << r3.status;
  }
}

void c5(Verdict& o) {
  const auto start = Clock::now();
  const unsigned n2 = sing_count_p2(hyperbolic_quadratic_foliation());
  const unsigned n1 = sing_count_p2(diagonal_linear_foliation());
  const double s = seconds_since(start);
  o.require(n2 == 7, "degree-2 count " + std::to_string(n2));
  o.require(n1 == 3, "diagonal count " + std::to_string(n1));
  o.require(s < 5, "took " + std::to_string(s) + " s");
  o.note << "degree 2: " << n2 << ", diagonal linear: " << n1 << ", " << s << " s";
}

void c6(Verdict& o) {
  const RationalMap f = binomial_map(2);
  const PForm eta = pullback_foliation(f, hyperbolic_quadratic_foliation()).eta;
  const Point target{0, 0, 1};
  for (const char* t : {"2", "3", "1/2"}) {
    const Point p{1, 1, 1, parse_rational(t)};
    o.require(kupka_at(eta, p), "[1:1:1:" + std::string(t) + "] not Kupka");
  }
  const Point base{1, 1, 1, 1};
  o.require(is_indeterminacy_point(f, base), "[1:1:1:1] not in I(f)");
  bool rejected = false;
  try {
    kupka_on_fiber_check(eta, f, target, {base});
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  o.require(rejected, "[1:1:1:1] accepted by the fiber check");
  o.note << "t = 2, 3, 1/2 Kupka; t = 1 rejected as an indeterminacy point";
}

void c7(Verdict& o) {
  const PForm omega = omega_from_1d(hyperbolic_quadratic_foliation());
  const Point origin{0, 0, 0};
  const ConicCheck c = is_conic_ngk_at(omega, origin, 2);
  o.require(c.record.has_value(), "origin: " + c.failure);
  if (c.record) {
    o.require(c.record->mode == "exact", "origin decided in mode " + c.record->mode);
    o.require(c.record->normal_type == omega, "normal type differs from the form");
  }
  const Point shift{1, 1, 1};
  const ConicCheck t = is_conic_ngk_at(translate_form(omega, shift), shift, 2);
  o.require(t.record.has_value(), "translate: " + t.failure);
  if (t.record) {
    o.require(t.record->normal_type == omega, "translated normal type is not shift-equivariant");
  }
  const LinearPartInfo lp = rotational_linear_part(omega, origin);
  o.require(lp.matrix == Matrix(3, 3) && lp.nilpotent, "rotational linear part not zero");
  o.note << "conic NGK of degree 2 at 0 and (1,1,1), exact; normal type = Omega; rot linear part 0";
}

void c8(Verdict& o) {
  const auto forms = acceptance_forms();
  for (const auto& [name, a] : forms) {
    const unsigned kq = degree_of(a) + 1 + static_cast<unsigned>(a.degree());
    const TangentSymmetry ts = verify_tangent_symmetry(a, Rational(1, static_cast<long>(kq)) * PVec::radial(a.nvars()));
    o.require(ts.lie_identity, name + ": L_Y eta != eta");
  }
  o.note << "L_{R/(k+q)} eta == eta for " << forms.size() << " forms";
}

void c9(Verdict& o) {
  std::mt19937_64 rng(kDefaultSeed);
  int count = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 2);
    const unsigned d = 1 + static_cast<unsigned>((i / 2) % 3);
    const PVec x = random_homogeneous_field(n, d, rng);
    const bool ok = lie_bracket(PVec::radial(n), x) == Rational(static_cast<long>(d) - 1) * x;
    o.require(ok, "[R,X] != (d-1)X for N=" + std::to_string(n) + ", d=" + std::to_string(d));
    count += ok ? 1 : 0;
  }
  o.note << count << "/20 random fields, d in {1,2,3}, N in {3,4}";
}

double median_seconds(const std::function<void()>& body) {
  std::vector<double> runs;
  for (int i = 0; i < 5; ++i) {
    const auto start = Clock::now();
    body();
    runs.push_back(seconds_since(start));
  }
  std::sort(runs.begin(), runs.end());
  return runs[2];
}

void c10(Verdict& o) {
  const CheckMode prob = CheckMode::prob(kPrime62, 2);
  const Report exact_run = run_suite("identities", CheckMode::exact());
  const Report prob_run = run_suite("identities", prob);
  o.require(exact_run.results.size() == prob_run.results.size(), "suites differ in size");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < std::min(exact_run.results.size(), prob_run.results.size()); ++i) {
    const bool same = exact_run.results[i].name == prob_run.results[i].name &&
                      exact_run.results[i].outcome == prob_run.results[i].outcome;
    o.require(same, "disagreement on " + exact_run.results[i].name);
    agree += same ? 1 : 0;
  }
  const PForm eta = pullback_foliation(binomial_map(3), reference_foliation(3)).eta;
  const auto identity_set = [&](const CheckMode& mode) {
    return [&eta, mode] {
      const bool ok = radial_check(eta, mode) && euler_relation_check(eta, mode) && is_integrable(eta, mode);
      if (!ok) {
        throw std::logic_error("identity set failed");
      }
    };
  };
  const double t_exact = median_seconds(identity_set(CheckMode::exact()));
  const double t_prob = median_seconds(identity_set(prob));
  const double speedup = t_exact / t_prob;
  o.require(speedup >= 3, "speedup " + std::to_string(speedup) + " < 3");
  o.note << agree << " outcomes agree; (3,3) identity set median exact " << t_exact * 1e3 << " ms, probabilistic "
         << t_prob * 1e3 << " ms, speedup " << speedup << "x";
}

void c11(Verdict& o) {
  std::mt19937_64 rng(kDefaultSeed);
  int round_trips = 0;
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(4, 4, 6, rng);
    const std::string s = to_string(p);
    const bool ok = to_string(parse_poly(s, 4)) == s;
    o.require(ok, "poly round trip: " + s);
    round_trips += ok ? 1 : 0;
  }
  for (int i = 0; i < 100; ++i) {
    const PForm a = random_form(4, static_cast<std::size_t>(i % 4), 2, rng);
    const std::string s = to_string(a);
    const bool ok = to_string(parse_form(s, 4, a.degree())) == s;
    o.require(ok, "form round trip: " + s);
    round_trips += ok ? 1 : 0;
  }
  const std::vector<std::string> malformed = {
      "x0^",         "x0 +",          "3/",         "x",           "x0*",       "2x0",        "x0^^2",
      "(x0",         "x0 + * x1",     "1/0",        "x0 ** 2",     "dx0^",      "(x0)*dx",    "(x0)*dx0^dx1 + dx2",
      "x0 x1",       "x17",           "+",          "(x0)*d/dx",   "x0^-1",     "@"};
  int positioned = 0;
  for (std::size_t i = 0; i < malformed.size(); ++i) {
    const std::string& s = malformed[i];
    try {
      if (s.find("d/dx") != std::string::npos) {
        parse_vector_field(s, 3);
      } else if (s.find("dx") != std::string::npos) {
        parse_form(s, 3);
      } else {
        parse_poly(s);
      }
      o.require(false, "accepted \"" + s + "\"");
    } catch (const ParseError& e) {
      const bool ok = e.line() >= 1 && e.column() >= 1 && e.column() <= s.size() + 1;
      o.require(ok, "bad position for \"" + s + "\"");
      positioned += ok ? 1 : 0;
    }
  }
  o.require(malformed.size() == 20, "expected 20 malformed inputs");
  o.note << round_trips << "/200 round trips byte-identical; " << positioned << "/" << malformed.size()
         << " malformed inputs with positioned errors";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Verdict&)>> criteria = {
      {"C1 pull-back degree formula", c1},     {"C2 radial and Euler identities", c2},
      {"C3 integrability", c3},                {"C4 Bezout witnesses", c4},
      {"C5 singularity count on P2", c5},      {"C6 Kupka fibers", c6},
      {"C7 conic NGK at a point", c7},         {"C8 radial Lie derivative", c8},
      {"C9 quasi-homogeneity bracket", c9},    {"C10 probabilistic vs exact", c10},
      {"C11 parser round trips and errors", c11}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.note.str() << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all 11 criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
