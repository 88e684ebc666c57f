#include "vtutte/bivariate_poly.hpp"

#include <algorithm>
#include <cctype>

#include "vtutte/errors.hpp"

namespace vtutte {

BivariatePoly BivariatePoly::monomial(const Integer& coeff, unsigned x_exp, unsigned y_exp) {
  BivariatePoly p;
  p.add_term({x_exp, y_exp}, coeff);
  return p;
}

void BivariatePoly::add_term(const Monomial& mono, const Integer& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Integer BivariatePoly::coefficient(unsigned x_exp, unsigned y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Term> BivariatePoly::term_list() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    out.push_back({coeff, mono});
  }
  return out;
}

unsigned BivariatePoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [mono, coeff] : terms_) {
    d = std::max(d, mono.x_exp);
  }
  return d;
}

unsigned BivariatePoly::y_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.y_exp;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    add_term(mono, coeff);
  }
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    add_term(mono, -coeff);
  }
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, ca * cb);
    }
  }
  return out;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& other) {
  *this = *this * other;
  return *this;
}

BivariatePoly BivariatePoly::scaled(const Integer& factor) const {
  BivariatePoly out;
  if (factor == 0) {
    return out;
  }
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, coeff * factor);
  }
  return out;
}

BivariatePoly BivariatePoly::pow(unsigned exponent) const {
  BivariatePoly result = one();
  BivariatePoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

namespace {

Integer power(const Integer& base, unsigned exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

} // namespace

Integer BivariatePoly::eval(const Integer& x0, const Integer& y0) const {
  Integer sum = 0;
  for (const auto& [mono, coeff] : terms_) {
    sum += coeff * power(x0, mono.x_exp) * power(y0, mono.y_exp);
  }
  return sum;
}

BivariatePoly BivariatePoly::at_y(const Integer& y0) const {
  BivariatePoly out;
  for (const auto& [mono, coeff] : terms_) {
    out.add_term({mono.x_exp, 0}, coeff * power(y0, mono.y_exp));
  }
  return out;
}

BivariatePoly BivariatePoly::at_x(const Integer& x0) const {
  BivariatePoly out;
  for (const auto& [mono, coeff] : terms_) {
    out.add_term({0, mono.y_exp}, coeff * power(x0, mono.x_exp));
  }
  return out;
}

namespace {

void append_variable(std::string& out, char var, unsigned exp, bool& need_star) {
  if (exp == 0) {
    return;
  }
  if (need_star) {
    out += '*';
  }
  out += var;
  if (exp != 1) {
    out += '^';
    out += std::to_string(exp);
  }
  need_star = true;
}

} // namespace

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) {
        out += '-';
      }
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Integer magnitude = abs(coeff);
    const bool is_constant = mono.x_exp == 0 && mono.y_exp == 0;
    bool need_star = false;
    if (magnitude != 1 || is_constant) {
      out += magnitude.get_str();
      need_star = true;
    }
    append_variable(out, 'x', mono.x_exp, need_star);
    append_variable(out, 'y', mono.y_exp, need_star);
  }
  return out;
}

std::string BivariatePoly::to_json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += '[';
    out += coeff.get_str();
    out += ',';
    out += std::to_string(mono.x_exp);
    out += ',';
    out += std::to_string(mono.y_exp);
    out += ']';
  }
  out += ']';
  return out;
}

std::string to_string(const BivariatePoly& p) { return p.to_string(); }

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    BivariatePoly result;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    result += term(negative);
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) {
        break;
      }
      const char op = text_[pos_];
      if (op != '+' && op != '-') {
        fail("expected '+' or '-'");
      }
      ++pos_;
      result += term(op == '-');
    }
    return result;
  }

private:
  BivariatePoly term(bool negative) {
    Integer coeff = 1;
    Monomial mono;
    bool seen_factor = false;
    for (;;) {
      skip_space();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= integer();
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        unsigned exp = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          exp = static_cast<unsigned>(integer().get_ui());
        }
        (c == 'x' ? mono.x_exp : mono.y_exp) += exp;
      } else {
        fail(seen_factor ? "expected factor after '*'" : "expected a term");
      }
      seen_factor = true;
      skip_space();
      if (peek() != '*') {
        break;
      }
      ++pos_;
    }
    return BivariatePoly::monomial(negative ? Integer(-coeff) : coeff, mono.x_exp, mono.y_exp);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg,
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BivariatePoly BivariatePoly::parse(std::string_view text) { return PolyParser(text).parse(); }

} // namespace vtutte
