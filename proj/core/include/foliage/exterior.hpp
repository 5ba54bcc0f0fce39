#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "foliage/poly.hpp"

namespace foliage {

/// Strictly increasing list of variable indices naming dx_{i1} ^ ... ^ dx_{iq}.
using FormIndex = std::vector<std::size_t>;

/// Polynomial differential q-form on affine N-space.
///
/// Components are keyed by strictly increasing index tuples; zero
/// components are never stored, so the zero form of any degree is the
/// empty map and equality is structural.
class PForm {
 public:
  using Components = std::map<FormIndex, Poly>;

  PForm(std::size_t nvars, std::size_t formdeg);

  /// A 0-form.
  static PForm function(const Poly& f);
  /// coeff * dx_{idx[0]} ^ ... ; `idx` may be unsorted (sign applied) or repeat (zero).
  static PForm term(std::size_t nvars, FormIndex idx, const Poly& coeff);
  /// dx_i as a 1-form.
  static PForm dx(std::size_t nvars, std::size_t var);
  /// dx_0 ^ ... ^ dx_{N-1}.
  static PForm volume(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return formdeg_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  /// Zero Poly when absent. `idx` must be sorted.
  Poly coeff(const FormIndex& idx) const;

  /// Adds coeff * dx_idx, sorting `idx` with the matching sign.
  void add_term(FormIndex idx, const Poly& coeff);

  PForm& operator+=(const PForm& other);
  PForm& operator-=(const PForm& other);
  friend PForm operator+(PForm a, const PForm& b) { return a += b; }
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator-(PForm a);
  friend PForm operator*(const Poly& f, const PForm& a);
  friend PForm operator*(const Rational& c, const PForm& a);
  friend bool operator==(const PForm&, const PForm&) = default;

  /// Applies `f` to every coefficient, dropping components that become zero.
  template <class F>
  PForm map_coefficients(F&& f, std::size_t new_nvars) const {
    PForm out(new_nvars, formdeg_);
    for (const auto& [idx, p] : comps_) {
      Poly q = f(p);
      if (!q.is_zero()) {
        out.comps_.emplace(idx, std::move(q));
      }
    }
    return out;
  }

  /// Common homogeneous degree of all coefficients; absent if they disagree
  /// or one is inhomogeneous; AnyDegree for the zero form.
  std::optional<HomogeneousDegree> coefficient_degree() const;

 private:
  std::size_t nvars_;
  std::size_t formdeg_;
  Components comps_;
};

/// Polynomial vector field sum_i comps[i] d/dx_i.
class PVec {
 public:
  explicit PVec(std::size_t nvars);
  explicit PVec(std::vector<Poly> comps);

  /// Euler field sum x_i d/dx_i.
  static PVec radial(std::size_t nvars);
  /// Constant field d/dx_i.
  static PVec coordinate(std::size_t nvars, std::size_t var);
  static PVec constant(std::span<const Rational> v);

  std::size_t nvars() const { return comps_.size(); }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  std::span<const Poly> comps() const { return comps_; }
  bool is_zero() const;

  PVec& operator+=(const PVec& other);
  PVec& operator-=(const PVec& other);
  friend PVec operator+(PVec a, const PVec& b) { return a += b; }
  friend PVec operator-(PVec a, const PVec& b) { return a -= b; }
  friend PVec operator*(const Poly& f, const PVec& v);
  friend PVec operator*(const Rational& c, const PVec& v);
  friend bool operator==(const PVec&, const PVec&) = default;

 private:
  std::vector<Poly> comps_;
};

/// Taylor truncation of a form at a base point, stored in shifted coordinates.
struct Jet {
  Point base;
  unsigned order = 0;
  PForm body{1, 0};
};

PForm wedge(const PForm& a, const PForm& b);
PForm exterior_derivative(const PForm& a);
/// Contraction in the first slot. Throws std::invalid_argument on a 0-form.
PForm interior_product(const PVec& v, const PForm& a);
/// Cartan: L_v = i_v d + d i_v.
PForm lie_derivative(const PVec& v, const PForm& a);
/// [v, w] = v(w) - w(v).
PVec lie_bracket(const PVec& v, const PVec& w);
/// Directional derivative v(f).
Poly directional_derivative(const PVec& v, const Poly& f);

/// Pull-back by the polynomial map x_i -> map[i]: coefficients are
/// composed and dx_i becomes dF_i.
PForm pullback(std::span<const Poly> map, const PForm& a);

/// The unique Z with d a == i_Z (dx_0 ^ ... ^ dx_{N-1}). Requires degree N-2.
PVec rotational(const PForm& a);

Jet jet_at(const PForm& a, std::span<const Rational> point, unsigned order);
/// Degree-r slice of the jet body. Throws when r exceeds the jet order.
PForm homogeneous_part(const Jet& jet, unsigned degree);

/// Evaluates every coefficient: a constant-coefficient form.
PForm evaluate_at(const PForm& a, std::span<const Rational> point);
PVec evaluate_at(const PVec& v, std::span<const Rational> point);

/// p(x) -> p(x - shift): moves a form given in coordinates centered at `shift` back.
PForm translate_form(const PForm& a, std::span<const Rational> shift);

/// Contraction with the constant multivector e_{j1} ^ ... ^ e_{jk}, applied
/// as i_{e_jk} ... i_{e_j1}.
PForm contract_multivector(const FormIndex& j, const PForm& a);

/// All strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<FormIndex> index_subsets(std::size_t n, std::size_t k);

}  // namespace foliage
