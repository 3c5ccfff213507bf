#include "contraction/checks.hpp"

namespace contraction {

CocycleFn as_function(const CocycleSpec& spec) {
  return [spec](const Series& x, const Series& y) { return eval(spec, x, y); };
}

void CheckReport::record_failure(Witness w) {
  ++failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(w);
  }
}

CheckReport check_cocycle_identity(const CocycleFn& omega,
                                   const std::vector<Triple>& triples) {
  CheckReport report;
  for (const auto& [x, y, z] : triples) {
    ++report.checked;
    Series lhs = omega(y, z) - omega(x + y, z) + omega(x, y + z) - omega(x, y);
    if (!lhs.is_zero_at_precision()) {
      report.record_failure({{format_series(x), format_series(y),
                              format_series(z)},
                             format_series(lhs),
                             "0"});
    }
  }
  return report;
}

CheckReport check_cocycle_identity(const CocycleSpec& spec,
                                   const std::vector<Triple>& triples) {
  return check_cocycle_identity(as_function(spec), triples);
}

CheckReport check_equivariance(const CocycleFn& omega,
                               const std::vector<Pair>& pairs, int k_lo,
                               int k_hi) {
  CheckReport report;
  for (const auto& [x, y] : pairs) {
    const Series base = omega(x, y);
    for (int k = k_lo; k <= k_hi; ++k) {
      ++report.checked;
      Series lhs = shift(base, k);
      Series rhs = omega(shift(x, k), shift(y, k));
      if (!agree(lhs, rhs)) {
        report.record_failure(
            {{format_series(x), format_series(y), std::to_string(k)},
             format_series(lhs),
             format_series(rhs)});
      }
    }
  }
  return report;
}

CheckReport check_equivariance(const CocycleSpec& spec,
                               const std::vector<Pair>& pairs, int k_lo,
                               int k_hi) {
  return check_equivariance(as_function(spec), pairs, k_lo, k_hi);
}

CheckReport check_biadditivity(const CocycleFn& omega,
                               const std::vector<Triple>& triples) {
  CheckReport report;
  for (const auto& [x, y, z] : triples) {
    std::vector<std::string> inputs{format_series(x), format_series(y),
                                    format_series(z)};
    ++report.checked;
    Series left = omega(x + y, z);
    Series left_sum = omega(x, z) + omega(y, z);
    if (!agree(left, left_sum)) {
      report.record_failure({inputs, format_series(left), format_series(left_sum)});
    }
    ++report.checked;
    Series right = omega(z, x + y);
    Series right_sum = omega(z, x) + omega(z, y);
    if (!agree(right, right_sum)) {
      report.record_failure(
          {inputs, format_series(right), format_series(right_sum)});
    }
  }
  return report;
}

}  // namespace contraction
