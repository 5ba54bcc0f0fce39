#include "foliage/modform.hpp"

#include <algorithm>
#include <stdexcept>

namespace foliage {

namespace {

int merge_sign(const FormIndex& a, const FormIndex& b, FormIndex& out) {
  out.clear();
  int inversions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      return 0;
    }
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return inversions % 2 == 0 ? 1 : -1;
}

void accumulate(std::map<FormIndex, std::uint64_t>& comps, const FormIndex& key, std::uint64_t value,
                const ModField& field) {
  if (value == 0) {
    return;
  }
  auto [it, inserted] = comps.emplace(key, value);
  if (!inserted) {
    it->second = field.add(it->second, value);
    if (it->second == 0) {
      comps.erase(it);
    }
  }
}

}  // namespace

ModForm evaluate_mod(const PForm& a, std::span<const std::uint64_t> point, const ModField& field) {
  ModForm out{a.nvars(), a.degree(), {}};
  for (const auto& [idx, p] : a.components()) {
    const std::uint64_t v = eval_mod(p, point, field);
    if (v != 0) {
      out.comps.emplace(idx, v);
    }
  }
  return out;
}

ModForm wedge_mod(const ModForm& a, const ModForm& b, const ModField& field) {
  if (a.nvars != b.nvars) {
    throw std::invalid_argument("wedge_mod: variable-count mismatch");
  }
  ModForm out{a.nvars, std::min(a.degree + b.degree, a.nvars), {}};
  if (a.degree + b.degree > a.nvars) {
    return out;
  }
  FormIndex key;
  for (const auto& [ia, va] : a.comps) {
    for (const auto& [ib, vb] : b.comps) {
      const int sign = merge_sign(ia, ib, key);
      if (sign == 0) {
        continue;
      }
      const std::uint64_t prod = field.mul(va, vb);
      accumulate(out.comps, key, sign > 0 ? prod : field.neg(prod), field);
    }
  }
  return out;
}

ModForm interior_mod(std::span<const std::uint64_t> v, const ModForm& a, const ModField& field) {
  if (v.size() != a.nvars) {
    throw std::invalid_argument("interior_mod: vector length mismatch");
  }
  if (a.degree == 0) {
    throw std::invalid_argument("interior product of a 0-form");
  }
  ModForm out{a.nvars, a.degree - 1, {}};
  for (const auto& [idx, value] : a.comps) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (v[idx[s]] == 0) {
        continue;
      }
      FormIndex rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      const std::uint64_t c = field.mul(v[idx[s]], value);
      accumulate(out.comps, rest, s % 2 == 0 ? c : field.neg(c), field);
    }
  }
  return out;
}

ModForm scale_mod(std::uint64_t c, const ModForm& a, const ModField& field) {
  ModForm out{a.nvars, a.degree, {}};
  for (const auto& [idx, value] : a.comps) {
    const std::uint64_t v = field.mul(c, value);
    if (v != 0) {
      out.comps.emplace(idx, v);
    }
  }
  return out;
}

ModForm sub_mod(const ModForm& a, const ModForm& b, const ModField& field) {
  if (a.nvars != b.nvars || a.degree != b.degree) {
    throw std::invalid_argument("sub_mod: shape mismatch");
  }
  ModForm out = a;
  for (const auto& [idx, value] : b.comps) {
    accumulate(out.comps, idx, field.neg(value), field);
  }
  return out;
}

ModForm contract_multivector_mod(const FormIndex& j, const ModForm& a, const ModField& field) {
  ModForm out = a;
  std::vector<std::uint64_t> e(a.nvars, 0);
  for (std::size_t idx : j) {
    e[idx] = 1;
    out = interior_mod(e, out, field);
    e[idx] = 0;
  }
  return out;
}

}  // namespace foliage
