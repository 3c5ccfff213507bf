#include <cctype>
#include <limits>

#include "contraction/error.hpp"
#include "contraction/series.hpp"

namespace contraction {

namespace {

class SeriesParser {
 public:
  SeriesParser(const Modulus& ring, std::string_view text)
      : ring_(ring), text_(text) {}

  Series parse() {
    skip_ws();
    if (rest() == "0" || (peek() == '0' && trimmed_rest() == "0")) {
      return Series::zero(ring_);
    }
    std::vector<std::int64_t> coeffs;
    int first = 0;
    int next = std::numeric_limits<int>::min();
    bool have_term = false;
    for (;;) {
      skip_ws();
      if (lookahead("O(")) {
        std::size_t at = pos_;
        pos_ += 2;
        expect("t^");
        int p = parse_int();
        expect(")");
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after O-term");
        if (have_term && p < next) {
          pos_ = at;
          fail("O-term precision below the last term");
        }
        if (!have_term) first = p;
        return Series::make(ring_, first, coeffs, Prec::at(p));
      }
      std::size_t at = pos_;
      std::int64_t c = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = parse_coeff();
        expect("*");
      }
      expect("t^");
      int k = parse_int();
      if (have_term && k < next) {
        pos_ = at;
        fail("powers must be strictly ascending");
      }
      if (!have_term) {
        first = k;
        have_term = true;
      } else {
        coeffs.resize(static_cast<std::size_t>(k - first), 0);
      }
      coeffs.push_back(c);
      next = k + 1;
      skip_ws();
      if (pos_ == text_.size()) break;
      expect("+");
    }
    return Series::make(ring_, first, coeffs, Prec::exact());
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::string_view rest() const { return text_.substr(pos_); }
  std::string_view trimmed_rest() const {
    auto r = rest();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) {
      r.remove_suffix(1);
    }
    return r;
  }
  bool lookahead(std::string_view s) const { return rest().substr(0, s.size()) == s; }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("series: " + msg, pos_);
  }
  void expect(std::string_view s) {
    skip_ws();
    if (!lookahead(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
    skip_ws();
  }
  int parse_int() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = at;
      fail("expected an integer exponent");
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000) {
        pos_ = at;
        fail("exponent out of range");
      }
    }
    return static_cast<int>(neg ? -v : v);
  }
  std::int64_t parse_coeff() {
    std::size_t at = pos_;
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v >= ring_.order()) {
        pos_ = at;
        fail("coefficient out of range [0, " + std::to_string(ring_.order()) +
             ")");
      }
    }
    return v;
  }

  const Modulus& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Series parse_series(const Modulus& ring, std::string_view text) {
  return SeriesParser(ring, text).parse();
}

std::string format_series(const Series& x) {
  std::string out;
  for (int i = x.start(); i < x.end(); ++i) {
    Residue c = *x.at(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*t^" + std::to_string(i);
  }
  if (!x.is_exact()) {
    if (!out.empty()) out += " + ";
    out += "O(t^" + std::to_string(x.prec().value()) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace contraction
