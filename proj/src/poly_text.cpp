#include <algorithm>
#include <cctype>
#include <sstream>

#include "clusteraut/coeffpoly.hpp"

namespace clusteraut {

std::string to_string(const LaurentPoly& p, const Params& order) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term* x, const Term* y) {
    int c = weighted_compare(x->mono, y->mono, order);
    if (c != 0) return c > 0;
    return x->tpow < y->tpow;
  });

  std::ostringstream out;
  bool first = true;
  for (const Term* t : terms) {
    const bool negative = t->coeff < 0;
    mpz_class mag = abs(t->coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(mag.get_str());
    if (t->tpow == 1) {
      factors.emplace_back("t");
    } else if (t->tpow > 1) {
      factors.push_back("t^" + std::to_string(t->tpow));
    }
    for (int i = 0; i < kNumVars; ++i) {
      const auto e = t->mono.e[i];
      if (e == 0) continue;
      std::string f = "y" + std::to_string(i + 1);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out << '*';
      out << factors[k];
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view src, CoeffRingId ring) : src_(src), ring_(ring) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      bool had_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        had_sign = true;
        advance();
        skip_ws();
      }
      if (!first && !had_sign) fail("expected '+' or '-' between terms");
      first = false;
      terms.push_back(parse_term(sign));
    }
    return LaurentPoly::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term t;
    t.coeff = sign;
    std::int64_t tpow = 0;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= mpz_class(read_digits());
      } else if (c == 't') {
        if (ring_.is_integers()) fail("'t' is only valid over a surrogate ring");
        advance();
        tpow += read_optional_power();
      } else if (c == 'y') {
        advance();
        if (at_end() || peek() < '1' || peek() > '4') fail("unknown variable");
        int index = peek() - '1';
        advance();
        if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) fail("unknown variable");
        t.mono.e[index] += static_cast<std::int32_t>(read_optional_power());
      } else {
        if (!any) fail(std::string("unexpected character '") + c + "'");
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        advance();
        skip_ws();
        if (at_end()) fail("dangling '*'");
        continue;
      }
      if (at_end() || peek() == '+' || peek() == '-') break;
      // juxtaposition such as "2y1" or "t y2" is accepted
    }
    if (!any) fail("empty term");
    const auto m = static_cast<std::int64_t>(ring_.width());
    t.tpow = static_cast<std::uint32_t>(((tpow % m) + m) % m);
    return t;
  }

  std::int64_t read_optional_power() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    advance();
    skip_ws();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    auto digits = read_digits();
    if (digits.size() > 9) fail("exponent too large");
    return sign * std::stoll(digits);
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      d.push_back(peek());
      advance();
    }
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view src_;
  CoeffRingId ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

LaurentPoly parse_poly(std::string_view src, CoeffRingId ring) { return PolyParser(src, ring).parse(); }

}  // namespace clusteraut
