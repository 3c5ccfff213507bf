#include "contraction/section.hpp"

#include <algorithm>
#include <limits>

#include "contraction/error.hpp"

namespace contraction {

namespace {

constexpr int kAllKnown = std::numeric_limits<int>::max();

// x in t^n R[[t]]: every coefficient below n is known to vanish.
bool in_level(const Series& x, int n) {
  if (x.is_exact_zero()) return true;
  if (x.start() < n) return false;
  if (!x.is_exact() && x.prec().value() < n) {
    throw InsufficientPrecision("coset test needs coefficients below t^" +
                                std::to_string(n) + ", known below t^" +
                                std::to_string(x.prec().value()));
  }
  return true;
}

int known_through_series(const Series& x) {
  return x.is_exact() ? kAllKnown : x.prec().value();
}

std::vector<Series> constant_reps(const Modulus& ring) {
  std::vector<Series> reps;
  for (std::int64_t c = 0; c < ring.order(); ++c) {
    reps.push_back(c == 0 ? Series::zero(ring) : Series::monomial(ring, c, 0));
  }
  return reps;
}

}  // namespace

ModRedContext make_mod_reduction_ctx(std::int64_t p, int m, int k) {
  if (k < 1 || k > m) {
    throw BadParams("modred: need 1 <= k <= m, got m=" + std::to_string(m) +
                    " k=" + std::to_string(k));
  }
  Modulus g_ring(p, m);
  Modulus h_ring(p, k);
  ModRedContext ctx("modred:" + std::to_string(p) + "," + std::to_string(m) +
                        "," + std::to_string(k),
                    h_ring);
  ctx.reps = constant_reps(h_ring);
  for (const auto& h : ctx.reps) ctx.lifts.push_back(lift_to(h, g_ring));

  ctx.q = [h_ring](const Series& g) { return reduce_to(g, h_ring); };
  ctx.identity = [g_ring] { return Series::zero(g_ring); };
  ctx.mul = [](const Series& a, const Series& b) { return a + b; };
  ctx.alpha = [](const Series& g, int k) { return shift(g, k); };
  ctx.certify = [g_ring](const Series& g, int upto) {
    return g + Series::unknown_from(g_ring, upto + 1);
  };
  ctx.equal = [](const Series& a, const Series& b) { return a == b; };
  ctx.agree = [](const Series& a, const Series& b) { return agree(a, b); };
  ctx.in_v = [](const Series& g) { return g.is_exact() && in_level(g, 0); };
  ctx.known_through = known_through_series;
  ctx.format = [](const Series& g) { return format_series(g); };

  if (auto problems = validate(ctx); !problems.empty()) {
    throw BadParams(ctx.name + ": " + problems.front());
  }
  return ctx;
}

ExtProjContext make_ext_projection_ctx(const SpecRef& spec) {
  auto floor = ball_image_floor(*spec);
  if (!floor) {
    throw BadParams("extproj: the cocycle has no known bound on the unit ball");
  }
  const int r = std::min(0, *floor);
  const Modulus ring = spec->ring();
  ExtProjContext ctx("extproj:" + format_spec(*spec), ring);
  ctx.reps = constant_reps(ring);
  for (const auto& h : ctx.reps) ctx.lifts.push_back(ext_sigma(spec, h));

  ctx.q = [](const ExtElement& g) { return g.g(); };
  ctx.identity = [spec] { return ext_identity(spec); };
  ctx.mul = [](const ExtElement& a, const ExtElement& b) { return ext_mul(a, b); };
  ctx.alpha = [](const ExtElement& g, int k) { return ext_alpha(g, k); };
  ctx.certify = [spec, ring, r](const ExtElement& g, int upto) {
    ExtElement tau(Series::unknown_from(ring, upto + 1 + r),
                   Series::unknown_from(ring, upto + 1), spec);
    return ext_mul(g, tau);
  };
  ctx.equal = [](const ExtElement& a, const ExtElement& b) { return a == b; };
  ctx.agree = [](const ExtElement& a, const ExtElement& b) {
    return ext_agree(a, b);
  };
  ctx.in_v = [r](const ExtElement& g) {
    return g.a().is_exact() && g.g().is_exact() && in_level(g.a(), r) &&
           in_level(g.g(), 0);
  };
  ctx.known_through = [](const ExtElement& g) {
    return std::min(known_through_series(g.a()), known_through_series(g.g()));
  };
  ctx.format = [](const ExtElement& g) { return format_ext_element(g); };

  if (auto problems = validate(ctx); !problems.empty()) {
    throw BadParams(ctx.name + ": " + problems.front());
  }
  return ctx;
}

template <class G>
Digits digit_expand(const SectionContext<G>& ctx, const Series& h, int upto) {
  if (!(h.ring() == ctx.h_ring)) {
    throw MalformedInput("section input over " + h.ring().to_string() +
                         ", expected " + ctx.h_ring.to_string());
  }
  if (!h.is_exact() && h.prec().value() <= upto) {
    throw InsufficientPrecision("section input known below t^" +
                                std::to_string(h.prec().value()) +
                                ", digits requested through t^" +
                                std::to_string(upto));
  }
  Digits d;
  d.level = std::min(0, h.start());
  Series z = h;
  for (int k = d.level; k <= upto; ++k) {
    std::optional<std::size_t> found;
    Series next = z;
    for (std::size_t j = 0; j < ctx.reps.size(); ++j) {
      Series r = z - shift(ctx.reps[j], k);
      if (!in_level(r, k + 1)) continue;
      if (found) {
        throw MalformedInput("coset at t^" + std::to_string(k) +
                             " has two representatives");
      }
      found = j;
      next = std::move(r);
    }
    if (!found) {
      throw MalformedInput("coset at t^" + std::to_string(k) +
                           " has no representative");
    }
    d.j.push_back(*found);
    z = std::move(next);
  }
  return d;
}

template <class G>
SectionValue<G> build_section(const SectionContext<G>& ctx, const Series& h,
                              int upto) {
  Digits digits = digit_expand(ctx, h, upto);
  G partial = ctx.identity();
  for (std::size_t i = 0; i < digits.j.size(); ++i) {
    const int k = digits.level + static_cast<int>(i);
    partial = ctx.mul(partial, ctx.alpha(ctx.lifts[digits.j[i]], k));
  }
  G certified = ctx.certify(partial, upto);
  const int through = ctx.known_through(certified);
  return {std::move(digits), std::move(partial), std::move(certified),
          through == kAllKnown ? kAllKnown : through - 1};
}

template <class G>
CheckReport verify_section(const SectionContext<G>& ctx,
                           const std::vector<Series>& samples, int upto) {
  CheckReport report;

  ++report.checked;
  SectionValue<G> at_e = build_section(ctx, Series::zero(ctx.h_ring), upto);
  if (!ctx.equal(at_e.partial, ctx.identity())) {
    report.record_failure({{"sigma(e)"}, ctx.format(at_e.partial),
                           ctx.format(ctx.identity())});
  }

  for (const Series& h : samples) {
    std::vector<std::string> inputs{format_series(h)};
    SectionValue<G> s = build_section(ctx, h, upto);

    ++report.checked;
    Series image = ctx.q(s.certified);
    if (!agree(image, h) || known_through_series(image) <= upto) {
      report.record_failure({inputs, format_series(image), format_series(h)});
    }

    ++report.checked;
    SectionValue<G> sb = build_section(ctx, shift(h, 1), upto + 1);
    G shifted = ctx.alpha(s.partial, 1);
    if (!ctx.equal(sb.partial, shifted) ||
        !ctx.agree(sb.certified, ctx.alpha(s.certified, 1))) {
      report.record_failure({inputs, ctx.format(sb.partial), ctx.format(shifted)});
    }
  }
  return report;
}

template <class G>
std::vector<std::string> validate(const SectionContext<G>& ctx) {
  std::vector<std::string> problems;
  if (ctx.reps.empty() || ctx.reps.size() != ctx.lifts.size()) {
    problems.push_back("representative and lift tables differ in size");
    return problems;
  }
  if (!ctx.reps[0].is_exact_zero()) problems.push_back("h_1 is not e");
  if (!ctx.equal(ctx.lifts[0], ctx.identity())) problems.push_back("g_1 is not e");
  for (std::size_t j = 0; j < ctx.reps.size(); ++j) {
    const std::string tag = "j=" + std::to_string(j + 1);
    if (!(ctx.q(ctx.lifts[j]) == ctx.reps[j])) {
      problems.push_back(tag + ": q(g_j) != h_j");
    }
    if (!ctx.reps[j].is_exact() || !in_level(ctx.reps[j], 0)) {
      problems.push_back(tag + ": h_j is not in U");
    }
    if (!ctx.in_v(ctx.lifts[j])) problems.push_back(tag + ": g_j is not in V");
    for (std::size_t i = 0; i < j; ++i) {
      if (in_level(ctx.reps[j] - ctx.reps[i], 1)) {
        problems.push_back(tag + ": shares a coset of beta(U) with j=" +
                           std::to_string(i + 1));
      }
    }
  }
  // U / beta(U) is the coefficient ring; enumerate it.
  for (std::int64_t c = 0; c < ctx.h_ring.order(); ++c) {
    Series u = Series::monomial(ctx.h_ring, c, 0);
    std::size_t hits = 0;
    for (const auto& h : ctx.reps) hits += in_level(u - h, 1) ? 1 : 0;
    if (hits != 1) {
      problems.push_back("coset of " + std::to_string(c) + "*t^0 has " +
                         std::to_string(hits) + " representatives");
    }
  }
  if (static_cast<std::int64_t>(ctx.reps.size()) != ctx.h_ring.order()) {
    problems.push_back("ell = " + std::to_string(ctx.reps.size()) +
                       " differs from the index " +
                       std::to_string(ctx.h_ring.order()));
  }
  return problems;
}

template <class G>
SectionContext<G> replace_lifts(const SectionContext<G>& ctx,
                                std::vector<G> lifts) {
  SectionContext<G> out = ctx;
  out.lifts = std::move(lifts);
  return out;
}

#define CONTRACTION_INSTANTIATE(G)                                             \
  template Digits digit_expand(const SectionContext<G>&, const Series&, int);  \
  template SectionValue<G> build_section(const SectionContext<G>&,             \
                                         const Series&, int);                  \
  template CheckReport verify_section(const SectionContext<G>&,                \
                                      const std::vector<Series>&, int);        \
  template std::vector<std::string> validate(const SectionContext<G>&);        \
  template SectionContext<G> replace_lifts(const SectionContext<G>&,           \
                                           std::vector<G>);

CONTRACTION_INSTANTIATE(Series)
CONTRACTION_INSTANTIATE(ExtElement)

#undef CONTRACTION_INSTANTIATE

}  // namespace contraction
