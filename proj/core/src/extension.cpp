#include "contraction/extension.hpp"

#include "contraction/error.hpp"

namespace contraction {

namespace {

// g.a for the trivial action of G on A.
const Series& act(const Series& /*g*/, const Series& a) { return a; }

void require_same_spec(const ExtElement& u, const ExtElement& v) {
  if (u.spec() != v.spec() && !(*u.spec() == *v.spec())) {
    throw SpecMismatch("extension elements over different cocycles: " +
                       format_spec(*u.spec()) + " vs " +
                       format_spec(*v.spec()));
  }
}

}  // namespace

ExtElement::ExtElement(Series a, Series g, SpecRef spec)
    : a_(std::move(a)), g_(std::move(g)), spec_(std::move(spec)) {
  if (!spec_) throw MalformedInput("extension element without a cocycle");
  require_same_ring(spec_->ring(), a_.ring(), "ExtElement");
  require_same_ring(spec_->ring(), g_.ring(), "ExtElement");
}

ExtElement ext_identity(const SpecRef& spec) {
  return ExtElement(Series::zero(spec->ring()), Series::zero(spec->ring()), spec);
}

ExtElement ext_iota(const SpecRef& spec, const Series& a) {
  return ExtElement(a, Series::zero(spec->ring()), spec);
}

ExtElement ext_sigma(const SpecRef& spec, const Series& g) {
  return ExtElement(Series::zero(spec->ring()), g, spec);
}

ExtElement ext_mul(const ExtElement& u, const ExtElement& v) {
  require_same_spec(u, v);
  const CocycleSpec& omega = *u.spec();
  Series a = u.a() + act(u.g(), v.a()) + eval(omega, u.g(), v.g());
  return ExtElement(std::move(a), u.g() + v.g(), u.spec());
}

ExtElement ext_inv(const ExtElement& u) {
  const CocycleSpec& omega = *u.spec();
  Series g_inv = negate(u.g());
  Series a = negate(act(g_inv, u.a())) - act(g_inv, eval(omega, u.g(), g_inv));
  return ExtElement(std::move(a), std::move(g_inv), u.spec());
}

ExtElement ext_alpha(const ExtElement& u, int k) {
  return ExtElement(shift(u.a(), k), shift(u.g(), k), u.spec());
}

ExtElement commutator(const ExtElement& u, const ExtElement& v) {
  return ext_mul(ext_mul(ext_mul(u, v), ext_inv(u)), ext_inv(v));
}

bool ext_agree(const ExtElement& u, const ExtElement& v) {
  require_same_spec(u, v);
  return agree(u.a(), v.a()) && agree(u.g(), v.g());
}

CenterVerdict center_test(const ExtElement& u, const std::vector<int>& probes) {
  const CocycleSpec& omega = *u.spec();
  bool undetermined = false;
  for (int j : probes) {
    Series probe = Series::monomial(u.ring(), 1, j);
    Series delta = antisymmetrize(omega, u.g(), probe);
    if (!delta.is_zero_at_precision()) {
      return {false, j, std::move(delta)};
    }
    if (!delta.is_exact()) undetermined = true;
  }
  if (undetermined && !u.g().is_zero_at_precision()) {
    throw WindowTooSmall(
        "center_test: probes are known to vanish only up to finite precision",
        probes.empty() ? 0 : probes.front(), probes.empty() ? 0 : probes.back());
  }
  return {true, std::nullopt, std::nullopt};
}

std::optional<int> center_witness_degree(const ExtElement& u) {
  const CocycleSpec* spec = u.spec().get();
  while (auto* t = std::get_if<CocycleSpec::Transformed>(&spec->variant())) {
    spec = t->base.get();
  }
  auto* eta = std::get_if<CocycleSpec::Eta>(&spec->variant());
  if (!eta) return std::nullopt;
  auto n0 = eta->s.first_set();
  auto v = u.g().valuation();
  if (!n0 || !v) return std::nullopt;
  return 2 * *n0 + *v;
}

SpecRef add_coboundary(const SpecRef& base, const QuadTerms& f_terms) {
  Series one = Series::monomial(base->ring(), 1, 0);
  return share(CocycleSpec::transformed(*base, one, one, f_terms));
}

ExtElement equivalence_map(const QuadTerms& f_terms, const ExtElement& u,
                           const SpecRef& target) {
  if (!(*target == *add_coboundary(u.spec(), f_terms))) {
    throw SpecMismatch("equivalence_map: target is not omega + omega_f");
  }
  return ExtElement(u.a() - eval_quadratic(f_terms, u.g()), u.g(), target);
}

ExtElement equivalence_map_inverse(const QuadTerms& f_terms,
                                   const ExtElement& u, const SpecRef& source) {
  if (!(*u.spec() == *add_coboundary(source, f_terms))) {
    throw SpecMismatch("equivalence_map_inverse: element is not over omega + omega_f");
  }
  return ExtElement(u.a() + eval_quadratic(f_terms, u.g()), u.g(), source);
}

CheckReport nilpotency_probe(const std::vector<ExtTriple>& samples) {
  CheckReport report;
  for (const auto& [u, v, w] : samples) {
    std::vector<std::string> inputs{format_ext_element(u), format_ext_element(v),
                                    format_ext_element(w)};
    ExtElement c = commutator(u, v);
    ++report.checked;
    if (!c.g().is_zero_at_precision()) {
      report.record_failure({inputs, format_ext_element(c), "(a ; 0)"});
      continue;
    }
    ++report.checked;
    ExtElement cc = commutator(c, w);
    if (!ext_agree(cc, ext_identity(u.spec()))) {
      report.record_failure({inputs, format_ext_element(cc), "(0 ; 0)"});
    }
  }
  return report;
}

ExtElement parse_ext_element(const SpecRef& spec, std::string_view text) {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  std::size_t semi = text.find(';');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      semi == std::string_view::npos || !(open < semi && semi < close)) {
    throw SyntaxError("element: expected (<series> ; <series>)",
                      open == std::string_view::npos ? 0 : open);
  }
  auto component = [&](std::size_t from, std::size_t to) {
    try {
      return parse_series(spec->ring(), text.substr(from, to - from));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), from + e.position());
    }
  };
  return ExtElement(component(open + 1, semi), component(semi + 1, close), spec);
}

std::string format_ext_element(const ExtElement& u) {
  return "(" + format_series(u.a()) + " ; " + format_series(u.g()) + ")";
}

}  // namespace contraction
