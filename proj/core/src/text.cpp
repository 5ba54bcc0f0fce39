#include "foliage/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace foliage {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += expected[i];
  }
  return out;
}

std::string format_message(std::size_t line, std::size_t column, const std::string& message,
                           const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected " << join_expected(expected) << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_message(line, column, message, expected)),
      line_(line),
      column_(column),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;
};

struct RawPoly {
  std::vector<RawTerm> terms;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  [[noreturn]] void fail(std::size_t at, const std::string& message, std::vector<std::string> expected = {}) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_with(std::string_view word) {
    skip_ws();
    return s_.substr(pos_).starts_with(word);
  }
  std::size_t pos() const { return pos_; }

  void expect_char(char c, std::vector<std::string> expected) {
    if (peek() != c) {
      fail_here(std::move(expected));
    }
    ++pos_;
  }

  [[noreturn]] void fail_here(std::vector<std::string> expected) {
    skip_ws();
    const std::string message = describe_here();
    fail(pos_, message, std::move(expected));
  }

  std::string describe_here() const {
    if (pos_ >= s_.size()) {
      return "unexpected end of input";
    }
    return std::string("unexpected character '") + s_[pos_] + "'";
  }

  void expect_end(std::vector<std::string> expected) {
    if (!at_end()) {
      fail_here(std::move(expected));
    }
  }

  // Digits with no leading whitespace skipping (caller decides).
  std::optional<std::string_view> digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      return std::nullopt;
    }
    return s_.substr(start, pos_ - start);
  }

  unsigned small_integer(std::string_view what, unsigned limit) {
    const std::size_t start = pos_;
    auto d = digits();
    if (!d) {
      fail_here({"integer"});
    }
    if (d->size() > 9) {
      fail(start, std::string(what) + " too large");
    }
    const unsigned long v = std::stoul(std::string(*d));
    if (v > limit) {
      fail(start, std::string(what) + " " + std::string(*d) + " out of range");
    }
    return static_cast<unsigned>(v);
  }

  std::size_t variable_index() {
    const std::size_t start = pos_;
    const unsigned v = small_integer("variable index", std::numeric_limits<unsigned>::max() / 2);
    if (v >= kMaxVars) {
      fail(start, "variable index " + std::to_string(v) + " exceeds the supported maximum " +
                      std::to_string(kMaxVars - 1));
    }
    max_var_ = std::max<std::size_t>(max_var_, v + 1);
    var_positions_.emplace_back(v, start);
    return v;
  }

  Rational number() {
    const std::size_t start = pos_;
    auto num = digits();
    if (!num) {
      fail_here({"number", "variable"});
    }
    std::string text(*num);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t den_at = pos_;
      auto den = digits();
      if (!den) {
        fail_here({"integer"});
      }
      if (std::all_of(den->begin(), den->end(), [](char c) { return c == '0'; })) {
        fail(den_at, "zero denominator");
      }
      text += "/";
      text += *den;
    }
    (void)start;
    return parse_rational(text);
  }

  void factor(RawTerm& term) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      term.coeff *= number();
      return;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t var = variable_index();
      unsigned power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        power = small_integer("exponent", 65535);
      }
      term.powers.emplace_back(var, power);
      return;
    }
    fail_here({"number", "variable"});
  }

  RawTerm term(bool negative) {
    RawTerm t{Rational(negative ? -1 : 1), {}};
    factor(t);
    while (peek() == '*' && !next_is_differential()) {
      ++pos_;
      factor(t);
    }
    return t;
  }

  // True when the upcoming `*` introduces a differential (forms and fields).
  bool next_is_differential() {
    skip_ws();
    std::size_t i = pos_ + 1;
    while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) {
      ++i;
    }
    return s_.substr(i).starts_with("dx") || s_.substr(i).starts_with("d/dx");
  }

  RawPoly poly() {
    RawPoly out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    out.terms.push_back(term(negative));
    while (peek() == '+' || peek() == '-') {
      negative = s_[pos_] == '-';
      ++pos_;
      out.terms.push_back(term(negative));
    }
    return out;
  }

  std::size_t max_var() const { return max_var_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& var_positions() const { return var_positions_; }

  void check_vars(std::size_t nvars) const {
    for (const auto& [v, at] : var_positions_) {
      if (v >= nvars) {
        fail(at > 0 ? at - 1 : at, "unknown variable index " + std::to_string(v) + " for " + std::to_string(nvars) +
                                       " variables");
      }
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> var_positions_;
};

Poly build(const RawPoly& raw, std::size_t nvars) {
  std::vector<Term> terms;
  for (const RawTerm& t : raw.terms) {
    Monomial m;
    for (const auto& [var, power] : t.powers) {
      const unsigned total = m[var] + power;
      if (total > 65535) {
        throw std::invalid_argument("exponent overflow");
      }
      m.set(var, total);
    }
    terms.push_back({m, t.coeff});
  }
  return Poly(nvars, std::move(terms));
}

std::size_t resolve_nvars(const Parser& parser, std::size_t requested) {
  if (requested == 0) {
    return std::max<std::size_t>(parser.max_var(), 1);
  }
  if (requested > kMaxVars) {
    throw std::invalid_argument("variable count exceeds the supported maximum");
  }
  parser.check_vars(requested);
  return requested;
}

bool is_literal_zero(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) {
    --j;
  }
  return text.substr(i, j - i) == "0";
}

struct RawFormTerm {
  bool negative = false;
  std::optional<RawPoly> coeff;
  FormIndex idx;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  Parser parser(text);
  RawPoly raw = parser.poly();
  parser.expect_end({"'+'", "'-'", "'*'", "end of input"});
  return build(raw, resolve_nvars(parser, nvars));
}

PForm parse_form(std::string_view text, std::size_t nvars, std::optional<std::size_t> formdeg) {
  if (is_literal_zero(text)) {
    if (nvars == 0 || !formdeg) {
      throw std::invalid_argument("the zero form needs an explicit variable count and form degree");
    }
    return PForm(nvars, *formdeg);
  }
  Parser parser(text);
  std::vector<RawFormTerm> raw;
  std::optional<std::size_t> degree;
  std::size_t degree_at = 0;
  bool first = true;
  while (true) {
    RawFormTerm t;
    const char sign = parser.peek();
    if (sign == '+' || sign == '-') {
      t.negative = sign == '-';
      parser.expect_char(sign, {});
    } else if (!first) {
      break;
    }
    first = false;
    const std::size_t term_at = parser.pos();
    bool need_diffs = true;
    if (parser.peek() == '(') {
      parser.expect_char('(', {});
      t.coeff = parser.poly();
      parser.expect_char(')', {"')'", "'+'", "'-'", "'*'"});
      need_diffs = false;
      if (parser.peek() == '*') {
        parser.expect_char('*', {});
        need_diffs = true;
      }
    }
    if (need_diffs) {
      while (true) {
        if (!parser.starts_with("dx")) {
          parser.fail_here(t.coeff || !t.idx.empty() ? std::vector<std::string>{"differential dx<i>"}
                                                                           : std::vector<std::string>{"'('", "differential dx<i>"});
        }
        parser.expect_char('d', {});
        parser.expect_char('x', {});
        t.idx.push_back(parser.variable_index());
        if (parser.peek() != '^') {
          break;
        }
        parser.expect_char('^', {});
      }
    }
    if (!degree) {
      degree = t.idx.size();
      degree_at = term_at;
    } else if (*degree != t.idx.size()) {
      parser.fail(term_at, "form degree " + std::to_string(t.idx.size()) + " differs from earlier degree " +
                               std::to_string(*degree));
    }
    raw.push_back(std::move(t));
  }
  parser.expect_end({"'+'", "'-'", "end of input"});
  const std::size_t n = resolve_nvars(parser, nvars);
  if (formdeg && *formdeg != *degree) {
    parser.fail(degree_at, "form degree " + std::to_string(*degree) + " does not match the expected degree " +
                               std::to_string(*formdeg));
  }
  if (*degree > n) {
    parser.fail(degree_at, "form degree exceeds the variable count");
  }
  PForm out(n, *degree);
  for (const RawFormTerm& t : raw) {
    Poly c = t.coeff ? build(*t.coeff, n) : Poly::constant(n, Rational(1));
    out.add_term(t.idx, t.negative ? -c : c);
  }
  return out;
}

PVec parse_vector_field(std::string_view text, std::size_t nvars) {
  if (is_literal_zero(text)) {
    if (nvars == 0) {
      throw std::invalid_argument("the zero vector field needs an explicit variable count");
    }
    return PVec(nvars);
  }
  Parser parser(text);
  std::vector<std::pair<std::size_t, std::optional<RawPoly>>> raw;
  std::vector<bool> negative;
  bool first = true;
  while (true) {
    bool neg = false;
    const char sign = parser.peek();
    if (sign == '+' || sign == '-') {
      neg = sign == '-';
      parser.expect_char(sign, {});
    } else if (!first) {
      break;
    }
    first = false;
    std::optional<RawPoly> coeff;
    if (parser.peek() == '(') {
      parser.expect_char('(', {});
      coeff = parser.poly();
      parser.expect_char(')', {"')'", "'+'", "'-'", "'*'"});
      parser.expect_char('*', {"'*'"});
    }
    if (!parser.starts_with("d/dx")) {
      parser.fail_here({"d/dx<i>"});
    }
    for (char c : std::string_view("d/dx")) {
      parser.expect_char(c, {});
    }
    raw.emplace_back(parser.variable_index(), std::move(coeff));
    negative.push_back(neg);
  }
  parser.expect_end({"'+'", "'-'", "end of input"});
  const std::size_t n = resolve_nvars(parser, nvars);
  std::vector<Poly> comps(n, Poly(n));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Poly c = raw[i].second ? build(*raw[i].second, n) : Poly::constant(n, Rational(1));
    comps[raw[i].first] += negative[i] ? -c : c;
  }
  return PVec(std::move(comps));
}

namespace {

std::string monomial_text(const Monomial& m, std::size_t nvars) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += "x" + std::to_string(i);
    if (m[i] > 1) {
      out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

std::string wrapped(const Poly& p, bool& negative) {
  negative = !p.is_zero() && sgn(p.leading_term().coeff) < 0;
  return "(" + to_string(negative ? -p : p) + ")";
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.degree() == 0) {
      out += foliage::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_text(t.mono, p.nvars());
    } else {
      out += foliage::to_string(magnitude) + "*" + monomial_text(t.mono, p.nvars());
    }
  }
  return out;
}

std::string to_string(const PForm& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [idx, p] : a.components()) {
    bool negative = false;
    std::string body = wrapped(p, negative);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      body += (k == 0 ? "*dx" : "^dx") + std::to_string(idx[k]);
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string to_string(const PVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.nvars(); ++i) {
    if (v[i].is_zero()) {
      continue;
    }
    bool negative = false;
    const std::string body = wrapped(v[i], negative) + "*d/dx" + std::to_string(i);
    if (out.empty()) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i == 0 ? "" : ", ") + foliage::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace foliage
