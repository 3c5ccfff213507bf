#include "contraction/rational_poly.hpp"

#include <cctype>
#include <map>

#include "contraction/error.hpp"

namespace contraction {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::map<int, Rational> parse() {
    std::map<int, Rational> terms;
    skip_space();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      std::size_t term_at = pos_;
      auto [power, c] = term();
      if (terms.count(power)) {
        throw SyntaxError("poly: repeated power x^" + std::to_string(power),
                          term_at);
      }
      terms[power] = sign * c;
      first = false;
      skip_space();
    }
    if (first) fail("empty polynomial");
    return terms;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("poly: " + what, pos_);
  }

  BigInt integer() {
    std::size_t from = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (from == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(from, pos_ - from)));
  }

  std::pair<int, Rational> term() {
    Rational c = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = integer();
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      has_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x' && peek() != 'X') fail("expected x after '*'");
      }
    }
    if (peek() != 'x' && peek() != 'X') {
      if (!has_coeff) fail("expected a coefficient or x");
      return {0, c};
    }
    ++pos_;
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      BigInt e = integer();
      if (e > 1000) fail("exponent too large");
      power = e.convert_to<int>();
    }
    return {power, c};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string rational_text(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> lower) : lower_(std::move(lower)) {
  if (lower_.empty()) throw DegreeZero("polynomial of degree 0");
}

RationalPoly RationalPoly::parse(std::string_view text) {
  auto terms = PolyParser(text).parse();
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  if (terms.empty() || terms.rbegin()->first == 0) {
    throw DegreeZero("polynomial '" + std::string(text) + "' has degree 0");
  }
  auto [d, lead] = *terms.rbegin();
  if (lead != 1) {
    throw MalformedInput("polynomial '" + std::string(text) +
                         "' is not monic");
  }
  std::vector<Rational> lower(static_cast<std::size_t>(d), Rational(0));
  for (const auto& [k, c] : terms) {
    if (k < d) lower[static_cast<std::size_t>(k)] = c;
  }
  return RationalPoly(std::move(lower));
}

Rational RationalPoly::coeff(int i) const {
  if (i == degree()) return 1;
  return lower_.at(static_cast<std::size_t>(i));
}

std::string RationalPoly::to_string() const {
  auto monomial = [](int k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? "x" : "x^" + std::to_string(k);
  };
  std::string out = monomial(degree());
  for (int k = degree() - 1; k >= 0; --k) {
    const Rational& c = lower_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    out += c < 0 ? " - " : " + ";
    Rational a = c < 0 ? Rational(-c) : c;
    if (k == 0) {
      out += rational_text(a);
    } else if (a == 1) {
      out += monomial(k);
    } else {
      out += rational_text(a) + "*" + monomial(k);
    }
  }
  return out;
}

int p_valuation(const Rational& r, long p) {
  if (r == 0) throw BadParams("p_valuation of zero");
  auto count = [p](BigInt n) {
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  return count(boost::multiprecision::numerator(r)) -
         count(boost::multiprecision::denominator(r));
}

}  // namespace contraction
