#include "foliage_app/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "foliage/text.hpp"
#include "foliage/singular.hpp"
#include "foliage_app/catalog.hpp"
#include "foliage_app/hypotheses.hpp"
#include "foliage_app/random.hpp"

namespace foliage::app {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "degrees", "kupka", "counts", "all"};
  return names;
}

namespace {

struct NamedForm {
  std::string name;
  PForm form;
};

std::vector<NamedForm> reference_forms() {
  std::vector<NamedForm> out;
  for (unsigned d : {2u, 3u}) {
    out.push_back({"omega_d" + std::to_string(d), omega_from_1d(reference_foliation(d))});
  }
  for (unsigned nu : {2u, 3u}) {
    for (unsigned d : {2u, 3u}) {
      out.push_back({"pullback_nu" + std::to_string(nu) + "_d" + std::to_string(d),
                     pullback_foliation(binomial_map(nu), reference_foliation(d)).eta});
    }
  }
  return out;
}

AssertionResult verdict(std::string name, std::string check, bool ok, std::string mode, std::string detail) {
  return {std::move(name), std::move(check), ok ? Outcome::kPass : Outcome::kFail, std::move(mode), std::move(detail),
          nullptr, 0};
}

unsigned coefficient_plus_form_degree(const PForm& a) { return degree_of(a) + 1 + static_cast<unsigned>(a.degree()); }

void identities(const CheckMode& mode, std::vector<AssertionResult>& out) {
  for (const NamedForm& f : reference_forms()) {
    out.push_back(verdict("identities/radial/" + f.name, "radial", radial_check(f.form, mode), mode.name(),
                          "i_R eta == 0"));
    out.push_back(verdict("identities/euler/" + f.name, "euler", euler_relation_check(f.form, mode), mode.name(),
                          "i_R d eta == " + std::to_string(coefficient_plus_form_degree(f.form)) + " eta"));
    out.push_back(verdict("identities/integrable/" + f.name, "integrable", is_integrable(f.form, mode), mode.name(),
                          "Plucker and Frobenius relations"));
    const Rational rho(1, static_cast<long>(coefficient_plus_form_degree(f.form)));
    const TangentSymmetry ts = verify_tangent_symmetry(f.form, rho * PVec::radial(f.form.nvars()));
    out.push_back(verdict("identities/lie_radial/" + f.name, "lie", ts.kills_form && ts.lie_identity, "exact",
                          "L_{R/" + std::to_string(coefficient_plus_form_degree(f.form)) + "} eta == eta"));
  }
  const PForm sym = symplectic_form();
  out.push_back(verdict("identities/plucker_non_example", "decomposable", !is_decomposable_everywhere(sym, mode),
                        mode.name(), "dx0^dx1 + dx2^dx3 is rejected by the Plucker relations"));
  for (unsigned d : {2u, 3u}) {
    const Foliation1D g = reference_foliation(d);
    const PVec r = PVec::radial(3);
    out.push_back(verdict("identities/bracket/reference_d" + std::to_string(d), "bracket",
                          lie_bracket(r, g.X) == Rational(static_cast<long>(d) - 1) * g.X, "exact",
                          "[R, X] == (d-1) X"));
  }
  std::mt19937_64 rng(mode.seed);
  bool all = true;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 2);
    const unsigned d = 1 + static_cast<unsigned>(i % 3);
    const PVec x = random_homogeneous_field(n, d, rng);
    all = all && lie_bracket(PVec::radial(n), x) == Rational(static_cast<long>(d) - 1) * x;
  }
  out.push_back(verdict("identities/bracket/random", "bracket", all, "exact",
                        "[R, X] == (d-1) X on 20 random homogeneous fields"));
}

void degrees(std::vector<AssertionResult>& out) {
  for (unsigned nu : {2u, 3u}) {
    for (unsigned d : {2u, 3u}) {
      const std::string tag = "nu" + std::to_string(nu) + "_d" + std::to_string(d);
      const RationalMap f = binomial_map(nu);
      const Foliation1D g = reference_foliation(d);
      const FoliationQ q = pullback_foliation(f, g);
      const long predicted = predicted_pullback_degree(nu, d, 2);
      out.push_back(verdict("degrees/theta/" + tag, "degree",
                            static_cast<long>(q.theta) == predicted && q.removed_degree == 0, "exact",
                            "degree " + std::to_string(q.theta) + ", predicted (d+m)nu-m = " +
                                std::to_string(predicted) + ", removed factor degree " +
                                std::to_string(q.removed_degree)));
      out.push_back(verdict("degrees/expansion/" + tag, "expansion", pullback_form_by_expansion(f, g) == q.eta,
                            "exact", "expanded sum equals the pull-back termwise"));
    }
  }
}

void kupka(std::vector<AssertionResult>& out) {
  const RationalMap f = binomial_map(2);
  const Foliation1D g = hyperbolic_quadratic_foliation();
  const PForm eta = pullback_foliation(f, g).eta;
  const Point target{0, 0, 1};
  std::vector<Point> fibers;
  for (const char* t : {"2", "3", "1/2"}) {
    fibers.push_back(Point{1, 1, 1, parse_rational(t)});
  }
  out.push_back(check_kupka_fibers("kupka/fibers", "P2", f, eta, target, fibers));
  const Point base{1, 1, 1, 1};
  out.push_back(verdict("kupka/indeterminacy_rejected", "P2", is_indeterminacy_point(f, base), "exact",
                        "[1:1:1:1] lies in I(f) and is excluded"));
  const PForm omega = omega_from_1d(g);
  const Point origin{0, 0, 0};
  const ConicCheck c = is_conic_ngk_at(omega, origin, 2);
  out.push_back(verdict("kupka/conic_origin", "conic", c.record && c.record->normal_type == omega,
                        c.record ? c.record->mode : "exact",
                        c.record ? "conic NGK of degree 2, normal type equals the form" : c.failure));
  const Point shift{1, 1, 1};
  const ConicCheck cs = is_conic_ngk_at(translate_form(omega, shift), shift, 2);
  out.push_back(verdict("kupka/conic_translated", "conic", cs.record && cs.record->normal_type == omega,
                        cs.record ? cs.record->mode : "exact",
                        cs.record ? "normal type at (1,1,1) equals the untranslated form" : cs.failure));
  const LinearPartInfo lp = rotational_linear_part(omega, origin);
  out.push_back(verdict("kupka/rotational_nilpotent", "rotational", lp.nilpotent && lp.matrix == Matrix(3, 3),
                        "exact", "rotational linear part at the conic point is zero"));
  out.push_back(check_conic_at_witnesses("kupka/P1_witnesses", f, eta, *binomial_family_witnesses(f), 2, g));
  out.push_back(check_transversal_type("kupka/P3_transversal", "P3", eta, fibers.front()));
}

void counts(std::vector<AssertionResult>& out) {
  const unsigned c2 = sing_count_p2(hyperbolic_quadratic_foliation());
  out.push_back(verdict("counts/p2_degree2", "sing_count", c2 == 7, "exact",
                        std::to_string(c2) + " singularities, expected 7"));
  const unsigned c1 = sing_count_p2(diagonal_linear_foliation());
  out.push_back(verdict("counts/p2_diagonal_linear", "sing_count", c1 == 3, "exact",
                        std::to_string(c1) + " singularities, expected 3"));
  const unsigned c3 = sing_count_p2(cubic_foliation());
  out.push_back(verdict("counts/p2_degree3", "sing_count", c3 == 13, "exact",
                        std::to_string(c3) + " singularities, expected 13"));
  const RationalMap f2 = binomial_map(2);
  const WitnessReport w2 = indeterminacy_witness_check(f2, *binomial_family_witnesses(f2));
  out.push_back(verdict("counts/bezout_nu2", "witnesses", w2.complete && w2.count == 8, "exact", w2.status));
  const RationalMap f3 = binomial_map(3);
  const WitnessReport w3 = indeterminacy_witness_check(f3, *binomial_family_witnesses(f3));
  out.push_back(verdict("counts/bezout_nu3", "witnesses", !w3.complete && w3.all_generic && w3.count == 1, "exact",
                        w3.status));
}

}  // namespace

Report run_suite(const std::string& name, const CheckMode& mode) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown suite \"" + name + "\"");
  }
  Report report;
  report.command = "verify " + name;
  report.seed = mode.seed;
  const auto wants = [&](const char* s) { return name == "all" || name == s; };
  const auto timed = [&](const std::function<void(std::vector<AssertionResult>&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<AssertionResult> batch;
    body(batch);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : batch) {
      r.millis = ms / static_cast<double>(batch.size());
      report.results.push_back(std::move(r));
    }
  };
  if (wants("identities")) {
    timed([&](auto& out) { identities(mode, out); });
  }
  if (wants("degrees")) {
    timed([&](auto& out) { degrees(out); });
  }
  if (wants("kupka")) {
    timed([&](auto& out) { kupka(out); });
  }
  if (wants("counts")) {
    timed([&](auto& out) { counts(out); });
  }
  return report;
}

}  // namespace foliage::app
