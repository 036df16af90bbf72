#include <cctype>

#include "clusteraut/surfmap.hpp"

namespace clusteraut {

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Sigma2:
      return "s2";
    case Generator::Kind::Sigma3:
      return "s3";
    case Generator::Kind::Scaling:
      return "m(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    case Generator::Kind::Swap:
      return "h";
  }
  return "?";
}

std::string to_string(const Word& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += ' ';
    s += to_string(g);
  }
  return s;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view src) : src_(src) {}

  Word parse() {
    Word w;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const std::size_t start = pos_;
      if (accept("s2")) {
        w.push_back(Generator::sigma2());
      } else if (accept("s3")) {
        w.push_back(Generator::sigma3());
      } else if (accept("sp(")) {
        const std::int64_t p = integer();
        expect(')');
        const Word expanded = sigma_p_word(p);
        w.insert(w.end(), expanded.begin(), expanded.end());
      } else if (accept("m(")) {
        const std::int64_t i = integer();
        expect(',');
        const std::int64_t j = integer();
        expect(')');
        w.push_back(Generator::scaling(static_cast<int>(i), static_cast<int>(j)));
      } else if (accept("r^")) {
        const std::int64_t k = integer();
        for (std::int64_t n = 0; n < (k < 0 ? -k : k); ++n) {
          w.push_back(k > 0 ? Generator::sigma2() : Generator::sigma3());
          w.push_back(k > 0 ? Generator::sigma3() : Generator::sigma2());
        }
      } else if (accept("h")) {
        w.push_back(Generator::swap());
      } else if (accept("id")) {
      } else {
        pos_ = start;
        fail("unknown token");
      }
      if (!at_end() && !std::isspace(static_cast<unsigned char>(src_[pos_]))) fail("expected whitespace between tokens");
    }
    return w;
  }

 private:
  bool accept(std::string_view tok) {
    if (src_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip_ws();
    int sign = 1;
    if (!at_end() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      if (src_[pos_] == '-') sign = -1;
      ++pos_;
    }
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits.push_back(src_[pos_++]);
    if (digits.empty()) fail("expected integer");
    if (digits.size() > 9) fail("integer too large");
    return sign * std::stoll(digits);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view src) { return WordParser(src).parse(); }

}  // namespace clusteraut
