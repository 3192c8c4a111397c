#include "chern/poly_text.hpp"

#include <cctype>

namespace chern {

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw InputError("expected integer in polynomial '" + std::string(s) + "'");
    long long v = std::stoll(std::string(s.substr(i, j - i)));
    i = j;
    return v;
  }
  std::string name() {
    skip_ws();
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    if (j == i || std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("expected variable name in polynomial '" + std::string(s) + "'");
    std::string n(s.substr(i, j - i));
    i = j;
    return n;
  }
};

}  // namespace

Polynomial parse_poly(const RingPtr& R, std::string_view text) {
  Cursor c{text};
  std::vector<Term> terms;
  bool first = true;
  while (!c.eof()) {
    int64_t sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+')) {
      if (first) throw InputError("polynomial cannot start with '+'");
    } else if (!first) {
      throw InputError("expected '+' or '-' between terms in '" + std::string(text) + "'");
    }
    first = false;

    int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.integer();
      have_coeff = true;
    }
    std::vector<int32_t> exps(R->nvars(), 0);
    bool have_var = false;
    bool pending_star = have_coeff && c.accept('*');
    while (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_') {
      pending_star = false;
      std::string v = c.name();
      int idx = R->var_index(v);
      if (idx < 0) throw InputError("unknown variable '" + v + "'");
      int32_t e = 1;
      if (c.accept('^')) e = static_cast<int32_t>(c.integer());
      exps[idx] += e;
      have_var = true;
      if (!c.accept('*')) break;  // '*' is required between variables
      pending_star = true;
    }
    if (pending_star) throw InputError("dangling '*' in polynomial '" + std::string(text) + "'");
    if (!have_coeff && !have_var)
      throw InputError("empty term in polynomial '" + std::string(text) + "'");
    terms.push_back(Term{R->field().reduce(sign * coeff), Monomial(std::move(exps))});
  }
  return R->normalize(std::move(terms));
}

std::vector<Polynomial> parse_polys(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(R, t));
  return out;
}

Ideal parse_ideal(const RingPtr& R, const std::vector<std::string>& texts) {
  return Ideal(R, parse_polys(R, texts));
}

}  // namespace chern
