#include <cctype>
#include <charconv>

#include "contraction/cocycle.hpp"
#include "contraction/error.hpp"
#include "contraction/report_json.hpp"

namespace contraction {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, std::size_t offset, const char* what) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw SyntaxError(std::string("spec: expected an integer ") + what, offset);
  }
  return v;
}

// Splits on `sep` outside (), {} and [] groups.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t from = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(from, i - from));
      from = i + 1;
    }
  }
  parts.push_back(s.substr(from));
  return parts;
}

struct SpecParser {
  const Modulus& ring;
  const std::function<std::string(const std::string&)>& load_file;

  Series series(std::string_view text, std::size_t offset) const {
    try {
      return parse_series(ring, text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), offset + e.position());
    }
  }

  // <k>:<series>[,<k>:<series>...]
  QuadTerms terms(std::string_view text, std::size_t offset) const {
    QuadTerms out;
    std::size_t at = 0;
    for (auto part : split_top(text, ',')) {
      auto colon = part.find(':');
      if (colon == std::string_view::npos) {
        throw SyntaxError("spec: coboundary term must be <k>:<series>",
                          offset + at);
      }
      int k = parse_int(part.substr(0, colon), offset + at, "coboundary degree");
      out.push_back({k, series(part.substr(colon + 1), offset + at + colon + 1)});
      at += part.size() + 1;
    }
    return out;
  }

  CocycleSpec parse(std::string_view text, std::size_t offset) const {
    std::string_view t = text;
    auto starts = [&](std::string_view prefix) {
      return t.substr(0, prefix.size()) == prefix;
    };
    if (starts("omega:")) {
      return CocycleSpec::basis_omega(ring, parse_int(t.substr(6), offset + 6,
                                                      "omega index"));
    }
    if (starts("eta:")) {
      try {
        return CocycleSpec::eta(ring, BitSeq::parse(trim(t.substr(4))));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.what(), offset + 4 + e.position());
      }
    }
    if (starts("param:@")) {
      if (!load_file) {
        throw SyntaxError("spec: param:@file is not available here", offset);
      }
      std::string path(trim(t.substr(7)));
      return CocycleSpec::param_omega(param_seq_from_json(ring, load_file(path)));
    }
    if (starts("param:")) {
      return CocycleSpec::param_omega(param_seq_from_json(ring, t.substr(6)));
    }
    if (starts("cob:")) {
      return CocycleSpec::quad_coboundary(ring, terms(t.substr(4), offset + 4));
    }
    if (starts("xform(")) {
      if (t.back() != ')') {
        throw SyntaxError("spec: xform( is missing ')'", offset + t.size());
      }
      std::string_view body = t.substr(6, t.size() - 7);
      auto parts = split_top(body, ';');
      std::size_t at = offset + 6;
      CocycleSpec base = parse(trim(parts[0]), at);
      at += parts[0].size() + 1;
      std::optional<Series> a, b;
      QuadTerms cob;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string_view part = trim(parts[i]);
        auto eq = part.find('=');
        if (eq == std::string_view::npos) {
          throw SyntaxError("spec: xform arguments are key=value", at);
        }
        std::string_view key = trim(part.substr(0, eq));
        std::string_view value = part.substr(eq + 1);
        if (key == "a") {
          a = series(value, at + eq + 1);
        } else if (key == "b") {
          b = series(value, at + eq + 1);
        } else if (key == "cob") {
          if (!trim(value).empty()) cob = terms(value, at + eq + 1);
        } else {
          throw SyntaxError("spec: unknown xform key '" + std::string(key) + "'",
                            at);
        }
        at += parts[i].size() + 1;
      }
      Series one = Series::monomial(ring, 1, 0);
      return CocycleSpec::transformed(std::move(base), a.value_or(one),
                                      b.value_or(one), std::move(cob));
    }
    throw SyntaxError(
        "spec: expected omega:<n> | eta:<bits>[(0)] | param:@<file> | "
        "cob:<k>:<series>[,...] | xform(<spec>;a=<series>;b=<series>;cob=...)",
        offset);
  }
};

std::string format_terms(const QuadTerms& terms) {
  std::string out;
  for (const auto& [k, u] : terms) {
    if (!out.empty()) out += ",";
    out += std::to_string(k) + ":" + format_series(u);
  }
  return out;
}

}  // namespace

CocycleSpec parse_spec(
    const Modulus& ring, std::string_view text,
    const std::function<std::string(const std::string&)>& load_file) {
  return SpecParser{ring, load_file}.parse(trim(text), 0);
}

std::string format_spec(const CocycleSpec& spec) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CocycleSpec::BasisOmega>) {
          return "omega:" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, CocycleSpec::ParamOmega>) {
          return "param:" + param_seq_to_json(v.a);
        } else if constexpr (std::is_same_v<T, CocycleSpec::Eta>) {
          return "eta:" + v.s.to_string();
        } else if constexpr (std::is_same_v<T, CocycleSpec::QuadCoboundary>) {
          return "cob:" + format_terms(v.terms);
        } else {
          std::string out = "xform(" + format_spec(*v.base) +
                            ";a=" + format_series(v.a_unit) +
                            ";b=" + format_series(v.b_unit);
          if (!v.cob.empty()) out += ";cob=" + format_terms(v.cob);
          return out + ")";
        }
      },
      spec.variant());
}

}  // namespace contraction
