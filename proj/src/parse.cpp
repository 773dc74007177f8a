#include "symrank/form.hpp"

#include <cctype>

namespace symrank {

namespace {

struct Term {
  Rational coeff;
  MultiIndex exps;  // grows to the largest variable index seen
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  std::vector<Term> terms() {
    if (s_.empty()) throw Error(ErrorKind::parse, "empty polynomial");
    std::vector<Term> out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    const size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Term term() {
    Term t{Rational(1), {}};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      t.coeff = parse_rational(num);
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_var_start()) fail("expected a variable after '*'");
      }
    }
    bool have_var = false;
    while (is_var_start()) {
      const int var = variable();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        const std::string ds = digits();
        if (ds.empty()) fail("missing exponent");
        e = std::stoi(ds);
      }
      if (static_cast<int>(t.exps.size()) <= var) t.exps.resize(var + 1, 0);
      t.exps[var] += e;
      have_var = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_var_start()) fail("expected a variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coeff && !have_var) fail("expected a term");
    return t;
  }

  bool is_var_start() const {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c));
  }

  int variable() {
    const char c = s_[pos_++];
    if (c == 'x') {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const size_t start = pos_ - 1;
        const std::string ds = digits();
        if (ds.size() != 1) {
          pos_ = start;
          fail("unknown variable 'x" + ds + "'");
        }
        return ds[0] - '0';
      }
      return 0;
    }
    if (c == 'y') return 1;
    if (c == 'z') return 2;
    --pos_;
    fail(std::string("unknown variable '") + c + "'");
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

SymmetricForm parse_form(std::string_view text, int min_nvars) {
  auto terms = Parser(text).terms();
  int nvars = std::max(1, min_nvars);
  int degree = -1;
  for (const auto& t : terms) {
    nvars = std::max(nvars, static_cast<int>(t.exps.size()));
    int d = 0;
    for (int e : t.exps) d += e;
    if (degree < 0) degree = d;
    else if (d != degree)
      throw Error(ErrorKind::parse, "non-homogeneous polynomial: terms of degree " + std::to_string(degree) +
                                        " and " + std::to_string(d));
  }
  if (degree < 1) throw Error(ErrorKind::parse, "forms must have degree at least 1");
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (auto& t : terms) {
    t.exps.resize(nvars, 0);
    out.emplace_back(std::move(t.exps), std::move(t.coeff));
  }
  return SymmetricForm::from_terms(nvars, degree, out);
}

std::string to_string(const SymmetricForm& f) {
  std::string out;
  const auto& mons = f.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    Rational c = f.coeff(static_cast<int>(k));
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (int v = 0; v < f.nvars(); ++v) {
      const int e = mons[k][v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace symrank
