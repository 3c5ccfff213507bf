#include "contraction/modulus.hpp"

#include "contraction/error.hpp"

namespace contraction {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::int64_t p, int m) : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) {
    throw BadParams("modulus base " + std::to_string(p) + " is not prime");
  }
  if (m < 1) {
    throw BadParams("modulus exponent must be >= 1, got " + std::to_string(m));
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kLimit) {
      throw BadParams("modulus " + std::to_string(p) + "^" +
                      std::to_string(m) + " exceeds 2^31");
    }
  }
}

int Modulus::valuation(Residue r) const noexcept {
  if (r == 0) return m_;
  int v = 0;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  return v;
}

std::string Modulus::to_string() const {
  return "Z/" + std::to_string(p_) + "^" + std::to_string(m_);
}

void require_same_ring(const Modulus& a, const Modulus& b, const char* op) {
  if (!(a == b)) {
    throw RingMismatch(std::string(op) + ": ring " + a.to_string() +
                       " vs " + b.to_string());
  }
}

}  // namespace contraction
