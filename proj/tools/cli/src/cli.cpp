#include "contraction/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "contraction/checks.hpp"
#include "contraction/classify.hpp"
#include "contraction/error.hpp"
#include "contraction/extension.hpp"
#include "contraction/fingerprint.hpp"
#include "contraction/report_json.hpp"
#include "contraction/sampling.hpp"
#include "contraction/section.hpp"
#include "contraction/selftest.hpp"

namespace contraction::cli {

namespace {

using nlohmann::json;

const char* const kSeriesGrammar =
    "series := \"0\" | \"O(t^\" INT \")\" | term (\" + \" term)* [\" + O(t^\" INT \")\"]\n"
    "term   := COEFF \"*t^\" INT | \"t^\" INT   (COEFF in [0, p^m), powers ascending)";
const char* const kSpecGrammar =
    "spec := omega:<n> | eta:<bits>[(0)] | param:@<file> | cob:<k>:<series>[,...]\n"
    "      | xform(<spec>;a=<series>;b=<series>[;cob=<k>:<series>[,...]])";
const char* const kElementGrammar = "element := (<series> ; <series>)";
const char* const kPolyGrammar =
    "poly := monic polynomial in x over Q, e.g. \"x^2 - 1/2*x + 1/8\"";
const char* const kPlaceGrammar = "place := inf | p:<prime>";
const char* const kCtxGrammar = "ctx := modred:<p>,<m>,<k> | extproj:<spec>";
const char* const kProbesGrammar = "probes := random:<N>";
const char* const kRangeGrammar = "range := <lo>:<hi>";

struct UsageError {
  std::string message;
  std::string grammar;
};

[[noreturn]] void usage(std::string message, const char* grammar) {
  throw UsageError{std::move(message), grammar};
}

struct Globals {
  std::int64_t p = 2;
  int m = 1;
  std::uint64_t seed = 1;
  bool json = false;
  std::optional<int> prec;
  std::optional<int> window;
  std::optional<int> budget;

  Modulus ring() const { return Modulus(p, m); }
};

std::string syntax_message(const char* what, const std::string& text,
                           const SyntaxError& e) {
  return std::string(what) + " '" + text + "': " + e.what() + " (offset " +
         std::to_string(e.position()) + ")";
}

Series read_series(const Modulus& ring, const std::string& text) {
  try {
    return parse_series(ring, text);
  } catch (const SyntaxError& e) {
    usage(syntax_message("series", text, e), kSeriesGrammar);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpecRef read_spec(const Modulus& ring, const std::string& text) {
  try {
    return share(parse_spec(ring, text, read_file));
  } catch (const SyntaxError& e) {
    usage(syntax_message("spec", text, e), kSpecGrammar);
  }
}

ExtElement read_element(const SpecRef& spec, const std::string& text) {
  try {
    return parse_ext_element(spec, text);
  } catch (const SyntaxError& e) {
    usage(syntax_message("element", text, e), kElementGrammar);
  }
}

std::pair<int, int> read_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    usage("range '" + text + "'", kRangeGrammar);
  }
}

void need_args(const std::vector<std::string>& args, std::size_t n,
               const std::string& what, const char* grammar) {
  if (args.size() != n) {
    usage(what + " takes " + std::to_string(n) + " argument(s), got " +
              std::to_string(args.size()),
          grammar);
  }
}

// Random exact series with a few coefficients near index 0.
std::vector<Series> random_inputs(Rng& rng, const Modulus& ring, int count) {
  std::vector<Series> out;
  for (int i = 0; i < count; ++i) {
    int lo = static_cast<int>(rng.between(-3, 3));
    out.push_back(random_series(rng, ring, lo, lo + static_cast<int>(rng.between(0, 6))));
  }
  return out;
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  std::string show(const Series& x) const {
    return format_series(g_.prec ? truncate(x, *g_.prec) : x);
  }

  int print_series(const Series& x) {
    if (g_.json) {
      out_ << json{{"format", 1}, {"result", show(x)}}.dump(2) << "\n";
    } else {
      out_ << show(x) << "\n";
    }
    return kOk;
  }

  int print_element(const ExtElement& u) {
    std::string text = "(" + show(u.a()) + " ; " + show(u.g()) + ")";
    if (g_.json) {
      out_ << json{{"format", 1}, {"result", text}}.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
    return kOk;
  }

  int print_report(const CheckReport& r) {
    if (g_.json) {
      out_ << check_report_json(r) << "\n";
    } else {
      out_ << (r.passed() ? "PASS" : "FAIL") << " checked=" << r.checked
           << " failed=" << r.failed << "\n";
      for (const auto& w : r.witnesses) {
        out_ << "witness:";
        for (const auto& in : w.inputs) out_ << " [" << in << "]";
        out_ << " lhs=[" << w.lhs << "] rhs=[" << w.rhs << "]\n";
      }
    }
    return r.passed() ? kOk : kVerifyFailed;
  }

  // series <op> <args...>
  int series(const std::string& op, const std::vector<std::string>& args, int k) {
    const Modulus ring = g_.ring();
    const char* g = kSeriesGrammar;
    auto arg = [&](std::size_t i) { return read_series(ring, args[i]); };
    if (op == "canon") {
      need_args(args, 1, op, g);
      return print_series(arg(0));
    }
    if (op == "add" || op == "sub" || op == "mul") {
      need_args(args, 2, op, g);
      Series x = arg(0), y = arg(1);
      return print_series(op == "add" ? x + y : op == "sub" ? x - y : ring_mul(x, y));
    }
    need_args(args, 1, op, g);
    Series x = arg(0);
    if (op == "neg") return print_series(-x);
    if (op == "shift") return print_series(shift(x, k));
    if (op == "scale") return print_series(int_mul(k, x));
    if (op == "abs") {
      std::string a = x.abs().to_string(ring.prime());
      if (g_.json) {
        out_ << json{{"format", 1}, {"result", a}}.dump(2) << "\n";
      } else {
        out_ << a << "\n";
      }
      return kOk;
    }
    usage("unknown series operation '" + op + "'",
          "series canon|add|sub|mul|neg|shift|scale|abs <series>... [--k K]");
  }

  int cocycle(const std::string& op, const std::string& spec_text,
              const std::vector<std::string>& args, int samples,
              std::pair<int, int> range, const std::optional<std::string>& control) {
    const Modulus ring = g_.ring();
    if (control) return cocycle_control(op, *control, samples, range);
    if (spec_text.empty()) usage("cocycle " + op + " needs --spec", kSpecGrammar);
    SpecRef spec = read_spec(ring, spec_text);
    if (op == "eval" || op == "antisym") {
      need_args(args, 2, "cocycle " + op, kSeriesGrammar);
      Series x = read_series(ring, args[0]), y = read_series(ring, args[1]);
      return print_series(op == "eval" ? eval(*spec, x, y) : antisymmetrize(*spec, x, y));
    }
    if (op == "bmap") {
      ParamSeq b = b_map(*spec, range.first, range.second);
      if (g_.json) {
        out_ << json::parse(param_seq_to_json(b)).dump(2) << "\n";
      } else {
        for (int n = b.lo(); n <= b.hi(); ++n) {
          out_ << "b_" << n << " = " << show(*b.entry(n)) << "\n";
        }
      }
      return kOk;
    }
    if (op == "check" || op == "equivariance") {
      return run_checks(op, as_function(*spec), samples, range);
    }
    usage("unknown cocycle operation '" + op + "'",
          "cocycle eval|antisym|bmap|check|equivariance --spec <spec> ...");
  }

  int run_checks(const std::string& op, const CocycleFn& omega, int samples,
                 std::pair<int, int> range) {
    const Modulus ring = g_.ring();
    Rng rng(g_.seed);
    if (op == "check") {
      std::vector<Triple> triples;
      for (int i = 0; i < samples; ++i) {
        auto v = random_inputs(rng, ring, 3);
        triples.push_back({v[0], v[1], v[2]});
      }
      return print_report(check_cocycle_identity(omega, triples));
    }
    std::vector<Pair> pairs;
    for (int i = 0; i < samples; ++i) {
      auto v = random_inputs(rng, ring, 2);
      pairs.push_back({v[0], v[1]});
    }
    return print_report(check_equivariance(omega, pairs, range.first, range.second));
  }

  // Maps that are not equivariant cocycles.
  int cocycle_control(const std::string& op, const std::string& control, int samples,
                      std::pair<int, int> range) {
    if (control != "ring-mul") usage("control '" + control + "'", "control := ring-mul");
    if (op != "check" && op != "equivariance") {
      usage("--control applies to check and equivariance", "cocycle check|equivariance --control ring-mul");
    }
    return run_checks(op, [](const Series& x, const Series& y) { return ring_mul(x, y); },
                      samples, range);
  }

  int ext(const std::string& op, const std::string& spec_text,
          const std::vector<std::string>& args, int k, int samples,
          const std::optional<std::string>& probes) {
    SpecRef spec = read_spec(g_.ring(), spec_text);
    auto element = [&](std::size_t i) { return read_element(spec, args[i]); };
    const char* g = kElementGrammar;
    if (op == "mul" || op == "comm") {
      need_args(args, 2, "ext " + op, g);
      ExtElement u = element(0), v = element(1);
      return print_element(op == "mul" ? ext_mul(u, v) : commutator(u, v));
    }
    if (op == "inv" || op == "alpha") {
      need_args(args, 1, "ext " + op, g);
      return print_element(op == "inv" ? ext_inv(element(0)) : ext_alpha(element(0), k));
    }
    if (op == "center") {
      need_args(args, 1, "ext center", g);
      ExtElement u = element(0);
      auto [lo, hi] = probes ? read_range(*probes) : std::pair{-8, 16};
      std::vector<int> degrees;
      for (int j = lo; j <= hi; ++j) degrees.push_back(j);
      CenterVerdict v = center_test(u, degrees);
      if (g_.json) {
        json doc{{"format", 1}, {"central", v.central}};
        if (v.probe) doc["probe"] = *v.probe;
        if (v.witness) doc["witness"] = show(*v.witness);
        out_ << doc.dump(2) << "\n";
      } else if (v.central) {
        out_ << "central on probes t^" << lo << "..t^" << hi << "\n";
      } else {
        out_ << "not central: probe t^" << *v.probe << " witness " << show(*v.witness)
             << "\n";
      }
      return kOk;
    }
    if (op == "nilpotency") {
      Rng rng(g_.seed);
      std::vector<ExtTriple> triples;
      for (int i = 0; i < samples; ++i) {
        auto v = random_inputs(rng, spec->ring(), 6);
        triples.push_back({ExtElement(v[0], v[1], spec), ExtElement(v[2], v[3], spec),
                           ExtElement(v[4], v[5], spec)});
      }
      return print_report(nilpotency_probe(triples));
    }
    usage("unknown ext operation '" + op + "'",
          "ext mul|inv|alpha|comm|center|nilpotency --spec <spec> <element>...");
  }

  int fingerprint(const std::string& spec_text, const std::optional<std::string>& probes) {
    if (!g_.window) usage("fingerprint needs --window", "fingerprint --spec <spec> --window M");
    SpecRef spec = read_spec(g_.ring(), spec_text);
    DeltaProfile profile = delta_profile(*spec, *g_.window, g_.budget);
    Recovery r = recover_bits(profile);
    std::optional<ProbeCheck> check;
    if (probes) {
      const std::string prefix = "random:";
      int n = 0;
      try {
        if (probes->rfind(prefix, 0) != 0) throw std::invalid_argument(*probes);
        n = std::stoi(probes->substr(prefix.size()));
      } catch (const std::exception&) {
        usage("probes '" + *probes + "'", kProbesGrammar);
      }
      check = random_probe_check(*spec, r, *g_.window, n, g_.seed);
    }
    if (g_.json) {
      out_ << fingerprint_json(profile, r, check) << "\n";
    } else {
      out_ << "status: " << to_string(r.status) << "\n";
      if (r.status == RecoveryStatus::Ok) out_ << "c: " << r.offset << "\n";
      if (r.bits) out_ << "bits: " << r.bits->to_string() << "\n";
      if (r.insufficient_at) out_ << "insufficient-at: " << *r.insufficient_at << "\n";
      for (const auto& e : profile.entries) {
        out_ << "m=" << e.m << (e.v ? " v=" + std::to_string(*e.v)
                                    : " v>=" + std::to_string(*e.bound))
             << "\n";
      }
      if (check) {
        out_ << "probes: checked=" << check->checked
             << " mismatched=" << check->mismatched << "\n";
        for (const auto& w : check->witnesses) out_ << "witness: " << w << "\n";
      }
    }
    return check && check->mismatched > 0 ? kVerifyFailed : kOk;
  }

  template <class G>
  int section(const SectionContext<G>& ctx, const Series& h, int upto, int verify) {
    SectionValue<G> s = build_section(ctx, h, upto);
    std::optional<CheckReport> report;
    if (verify > 0) {
      Rng rng(g_.seed);
      std::vector<Series> samples = random_inputs(rng, ctx.h_ring, verify);
      samples.push_back(h);
      report = verify_section(ctx, samples, upto);
    }
    if (g_.json) {
      json digits = s.digits.j;
      json doc{{"format", 1},
               {"context", ctx.name},
               {"element", ctx.format(s.certified)},
               {"partial", ctx.format(s.partial)},
               {"agrees_through", s.agrees_through},
               {"digits", {{"level", s.digits.level}, {"j", digits}}}};
      if (report) doc["verify"] = json::parse(check_report_json(*report));
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << ctx.format(s.certified) << "\n";
      out_ << "agrees-through=t^" << s.agrees_through << "\n";
      if (report) {
        Globals quiet = g_;
        quiet.json = false;
        Runner(quiet, out_).print_report(*report);
      }
    }
    return report && !report->passed() ? kVerifyFailed : kOk;
  }

  int section(const std::string& ctx_text, const std::string& input, int upto,
              int verify) {
    const std::string modred = "modred:", extproj = "extproj:";
    if (ctx_text.rfind(modred, 0) == 0) {
      std::int64_t p = 0;
      int m = 0, k = 0;
      char c1 = 0, c2 = 0;
      std::istringstream in(ctx_text.substr(modred.size()));
      if (!(in >> p >> c1 >> m >> c2 >> k) || c1 != ',' || c2 != ',' || !in.eof()) {
        usage("context '" + ctx_text + "'", kCtxGrammar);
      }
      ModRedContext ctx = make_mod_reduction_ctx(p, m, k);
      return section(ctx, read_series(ctx.h_ring, input), upto, verify);
    }
    if (ctx_text.rfind(extproj, 0) == 0) {
      SpecRef spec = read_spec(g_.ring(), ctx_text.substr(extproj.size()));
      ExtProjContext ctx = make_ext_projection_ctx(spec);
      // An element input stands for its image under pr2.
      Series h = !input.empty() && input.front() == '('
                     ? read_element(spec, input).g()
                     : read_series(ctx.h_ring, input);
      return section(ctx, h, upto, verify);
    }
    usage("context '" + ctx_text + "'", kCtxGrammar);
  }

  int classify_abelian(const std::string& orders_text) {
    FiniteAbelianType f;
    std::istringstream in(orders_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        f.orders.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        usage("orders '" + orders_text + "'", "orders := <int>[,<int>...], each >= 2");
      }
    }
    NuTable table = primary_decompose(f);
    if (g_.json) {
      out_ << nu_table_json(table) << "\n";
    } else {
      CompositionData d = composition_data(table);
      for (const auto& [key, nu] : table) {
        out_ << "nu(" << key.first << "," << key.second << ")=" << nu << "\n";
      }
      out_ << "length=" << d.length << " delta=" << d.delta.str() << "\n";
    }
    return kOk;
  }

  int classify_poly(const std::string& place_text, const std::string& poly_text) {
    Place place;
    try {
      place = Place::parse(place_text);
    } catch (const SyntaxError& e) {
      usage(syntax_message("place", place_text, e), kPlaceGrammar);
    }
    std::optional<RationalPoly> f;
    try {
      f = RationalPoly::parse(poly_text);
    } catch (const SyntaxError& e) {
      usage(syntax_message("poly", poly_text, e), kPolyGrammar);
    }
    bool contractive = contractive_at(place, *f);
    if (g_.json) {
      out_ << poly_result_json(place, *f, contractive) << "\n";
    } else {
      out_ << "contractive=" << (contractive ? "true" : "false")
           << " test=" << test_name(place) << "\n";
    }
    return kOk;
  }

  int classify_spec(const std::string& path) {
    ContractionSpec spec = contraction_spec_from_json(read_file(path));
    out_ << contraction_spec_json(canonicalize_spec(spec)) << "\n";
    return kOk;
  }

  int selftest(std::optional<int> criterion) {
    std::vector<selftest::CriterionResult> results;
    if (criterion) {
      results.push_back(selftest::run_criterion(*criterion, g_.seed));
    } else {
      results = selftest::run_all(g_.seed);
    }
    bool ok = true;
    json rows = json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      if (g_.json) {
        rows.push_back({{"criterion", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"checked", r.checked},
                        {"detail", r.detail}});
      } else {
        out_ << selftest::format_line(r) << "\n";
      }
    }
    if (g_.json) out_ << json{{"format", 1}, {"criteria", rows}}.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in contraction groups of Laurent series.",
               "contraction"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--p", g.p, "prime p of the coefficient ring Z/p^m")->capture_default_str();
  app.add_option("--m", g.m, "exponent m of the coefficient ring Z/p^m")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for every randomized check")->capture_default_str();
  app.add_flag("--json", g.json, "emit JSON documents");
  app.add_option("--prec", g.prec, "truncate printed series to this precision");
  app.add_option("--window", g.window, "fingerprint window M");
  app.add_option("--budget", g.budget, "fingerprint precision budget");

  std::function<int(Runner&)> action;

  // series
  std::string series_op;
  std::vector<std::string> payload;
  int k = 1;
  auto* series = app.add_subcommand("series", "series arithmetic");
  series->add_option("op", series_op, "canon|add|sub|mul|neg|shift|scale|abs")->required();
  series->add_option("inputs", payload, "series operands");
  series->add_option("--k", k, "shift amount or integer multiplier");
  series->callback([&] {
    action = [&](Runner& r) { return r.series(series_op, payload, k); };
  });

  // cocycle
  std::string spec_text;
  int samples = 200;
  std::string range_text = "-8:8";
  auto* cocycle = app.add_subcommand("cocycle", "cocycle evaluation and checks");
  cocycle->require_subcommand(1);
  std::optional<std::string> control;
  for (const char* op : {"eval", "antisym", "bmap", "check", "equivariance"}) {
    auto* sub = cocycle->add_subcommand(op);
    auto* spec_opt = sub->add_option("--spec", spec_text, "cocycle spec");
    if (std::string(op) == "check" || std::string(op) == "equivariance") {
      sub->add_option("--control", control, "ring-mul: check a known non-example")
          ->excludes(spec_opt);
    } else {
      spec_opt->required();
    }
    sub->add_option("inputs", payload, "series operands");
    sub->add_option("--samples", samples, "random samples for checks")->capture_default_str();
    sub->add_option("--range", range_text,
                    "lo:hi window for bmap, shift range for equivariance")
        ->capture_default_str();
    std::string name = op;
    sub->callback([&, name] {
      action = [&, name](Runner& r) {
        std::string range = range_text;
        if (name == "equivariance" && !cocycle->get_subcommand(name)->count("--range")) {
          range = "-3:3";
        }
        return r.cocycle(name, spec_text, payload, samples, read_range(range), control);
      };
    });
  }

  // ext
  std::optional<std::string> probes;
  auto* ext = app.add_subcommand("ext", "central extension algebra");
  ext->require_subcommand(1);
  for (const char* op : {"mul", "inv", "alpha", "comm", "center", "nilpotency"}) {
    auto* sub = ext->add_subcommand(op);
    sub->add_option("--spec", spec_text, "cocycle spec")->required();
    sub->add_option("elements", payload, "elements (a ; g)");
    if (std::string(op) == "alpha") sub->add_option("--k", k, "power of alpha");
    if (std::string(op) == "center") sub->add_option("--probes", probes, "probe degrees lo:hi");
    if (std::string(op) == "nilpotency") {
      sub->add_option("--samples", samples, "random triples")->capture_default_str();
    }
    std::string name = op;
    sub->callback([&, name] {
      action = [&, name](Runner& r) {
        return r.ext(name, spec_text, payload, k, samples, probes);
      };
    });
  }

  // fingerprint
  std::optional<std::string> fp_probes;
  auto* fingerprint = app.add_subcommand("fingerprint", "bit recovery for transformed eta cocycles");
  fingerprint->add_option("--spec", spec_text, "cocycle spec")->required();
  fingerprint->add_option("--probes", fp_probes, "random:N cross-check probes per m");
  fingerprint->callback([&] {
    action = [&](Runner& r) { return r.fingerprint(spec_text, fp_probes); };
  });

  // section
  std::string ctx_text, input;
  int upto = 0, verify = 0;
  auto* section = app.add_subcommand("section", "equivariant section by digit expansion");
  section->add_option("--ctx", ctx_text, "modred:p,m,k | extproj:<spec>")->required();
  section->add_option("--input", input, "series h, or an element (a ; g) for extproj")
      ->required();
  section->add_option("--upto", upto, "last digit index")->required();
  section->add_option("--verify", verify, "also verify on this many random samples");
  section->callback([&] {
    action = [&](Runner& r) { return r.section(ctx_text, input, upto, verify); };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "classification data");
  classify->require_subcommand(1);
  std::string orders, place, poly, file;
  auto* abelian = classify->add_subcommand("abelian", "nu(p, n) table of a finite abelian group");
  abelian->add_option("--orders", orders, "cyclic factor orders, e.g. 4,2,3")->required();
  abelian->callback([&] { action = [&](Runner& r) { return r.classify_abelian(orders); }; });
  auto* cpoly = classify->add_subcommand("poly", "contractivity of a monic polynomial");
  cpoly->add_option("--place", place, "inf | p:<prime>")->required();
  cpoly->add_option("--poly", poly, "monic polynomial over Q")->required();
  cpoly->callback([&] { action = [&](Runner& r) { return r.classify_poly(place, poly); }; });
  auto* cspec = classify->add_subcommand("spec", "canonical form of a contraction group spec");
  cspec->add_option("--file", file, "JSON spec file")->required();
  cspec->callback([&] { action = [&](Runner& r) { return r.classify_spec(file); }; });

  // selftest
  std::optional<int> criterion;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--criterion", criterion, "run one criterion only");
  selftest->callback([&] { action = [&](Runner& r) { return r.selftest(criterion); }; });

  std::vector<std::string> argv_text{"contraction"};
  argv_text.insert(argv_text.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_text) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    Runner runner(g, out);
    return action(runner);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\ngrammar:\n" << e.grammar << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace contraction::cli
