#include "contraction/report_json.hpp"

#include <json.hpp>

#include "contraction/error.hpp"

namespace contraction {

using nlohmann::json;

namespace {

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string(what) + ": " + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
}

void require_format(const json& doc, const char* what) {
  if (!doc.is_object()) throw SyntaxError(std::string(what) + ": expected an object", 0);
  if (doc.contains("format") && doc["format"] != 1) {
    throw SyntaxError(std::string(what) + ": unsupported format", 0);
  }
}

json tail_json(const TailBound& t) {
  switch (t.kind) {
    case TailBound::Kind::Zero:
      return "zero";
    case TailBound::Kind::Unknown:
      return "unknown";
    case TailBound::Kind::Floor:
      return json{{"floor", t.floor}};
  }
  return nullptr;
}

TailBound tail_from_json(const json& j) {
  if (j == "zero") return TailBound::zero();
  if (j == "unknown") return TailBound::unknown();
  if (j.is_object() && j.contains("floor") && j["floor"].is_number_integer()) {
    return TailBound::at_least(j["floor"].get<int>());
  }
  throw SyntaxError("param: tail must be \"zero\", \"unknown\" or {\"floor\": v}", 0);
}

json table_json(const NuTable& table) {
  json rows = json::array();
  for (const auto& [key, nu] : table) {
    rows.push_back({{"p", key.first}, {"n", key.second}, {"nu", nu}});
  }
  return rows;
}

}  // namespace

std::string param_seq_to_json(const ParamSeq& a) {
  json entries = json::object();
  for (const auto& [n, s] : a.entries()) entries[std::to_string(n)] = format_series(s);
  json doc{{"format", 1},
           {"p", a.ring().prime()},
           {"m", a.ring().exponent()},
           {"lo", a.lo()},
           {"hi", a.hi()},
           {"entries", entries},
           {"pos_tail", tail_json(a.pos_tail())},
           {"neg_tail", tail_json(a.neg_tail())}};
  return doc.dump();
}

ParamSeq param_seq_from_json(const Modulus& ring, std::string_view text) {
  json doc = parse_document(text, "param");
  require_format(doc, "param");
  try {
    if (doc.contains("p") && doc["p"].get<std::int64_t>() != ring.prime()) {
      throw RingMismatch("param: file is over p=" + doc["p"].dump() +
                         ", expected " + ring.to_string());
    }
    if (doc.contains("m") && doc["m"].get<int>() != ring.exponent()) {
      throw RingMismatch("param: file is over m=" + doc["m"].dump() +
                         ", expected " + ring.to_string());
    }
    std::map<int, Series> entries;
    if (doc.contains("entries")) {
      for (const auto& [key, value] : doc["entries"].items()) {
        int n = std::stoi(key);
        entries.emplace(n, parse_series(ring, value.get<std::string>()));
      }
    }
    return ParamSeq(ring, doc.at("lo").get<int>(), doc.at("hi").get<int>(),
                    std::move(entries),
                    doc.contains("pos_tail") ? tail_from_json(doc["pos_tail"])
                                             : TailBound::zero(),
                    doc.contains("neg_tail") ? tail_from_json(doc["neg_tail"])
                                             : TailBound::zero());
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("param: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("param: entry keys must be integers", 0);
  }
}

std::string check_report_json(const CheckReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  }
  json doc{{"format", 1},
           {"checked", report.checked},
           {"failed", report.failed},
           {"witnesses", witnesses}};
  return doc.dump(2);
}

std::string fingerprint_json(const DeltaProfile& profile, const Recovery& recovery,
                             const std::optional<ProbeCheck>& probes) {
  json rows = json::array();
  for (const auto& e : profile.entries) {
    if (e.v) {
      rows.push_back({{"m", e.m}, {"v", *e.v}});
    } else {
      rows.push_back({{"m", e.m}, {"bound", *e.bound}});
    }
  }
  json doc{{"format", 1},
           {"window", profile.window},
           {"status", to_string(recovery.status)},
           {"profile", rows}};
  if (recovery.status == RecoveryStatus::Ok) doc["c"] = recovery.offset;
  if (recovery.bits) doc["bits"] = recovery.bits->to_string();
  if (recovery.insufficient_at) doc["insufficient_at"] = *recovery.insufficient_at;
  if (probes) {
    doc["probe_check"] = {{"checked", probes->checked},
                          {"mismatched", probes->mismatched},
                          {"witnesses", probes->witnesses}};
  }
  return doc.dump(2);
}

std::string nu_table_json(const NuTable& table) {
  CompositionData data = composition_data(table);
  json doc{{"format", 1},
           {"table", table_json(table)},
           {"length", data.length},
           {"delta", data.delta.str()}};
  return doc.dump(2);
}

std::string poly_result_json(const Place& place, const RationalPoly& f,
                             bool contractive) {
  json doc{{"format", 1},
           {"contractive", contractive},
           {"test", test_name(place)},
           {"place", place.to_string()},
           {"poly", f.to_string()}};
  return doc.dump(2);
}

std::string contraction_spec_json(const ContractionSpec& spec) {
  json blocks = json::array();
  for (const auto& b : spec.blocks) {
    blocks.push_back({{"place", b.place.to_string()},
                      {"poly", b.f.to_string()},
                      {"n", b.n},
                      {"mult", b.mult}});
  }
  json doc{{"format", 1}, {"blocks", blocks}, {"torsion", table_json(spec.torsion)}};
  return doc.dump(2);
}

ContractionSpec contraction_spec_from_json(std::string_view text) {
  json doc = parse_document(text, "spec");
  require_format(doc, "spec");
  ContractionSpec spec;
  try {
    if (doc.contains("blocks")) {
      for (const auto& b : doc["blocks"]) {
        spec.blocks.push_back({Place::parse(b.at("place").get<std::string>()),
                               RationalPoly::parse(b.at("poly").get<std::string>()),
                               b.value("n", 1), b.value("mult", std::int64_t{1})});
      }
    }
    if (doc.contains("torsion")) {
      for (const auto& t : doc["torsion"]) {
        spec.torsion[{t.at("p").get<std::int64_t>(), t.at("n").get<int>()}] +=
            t.at("nu").get<std::int64_t>();
      }
    }
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("spec: ") + e.what(), 0);
  }
  return spec;
}

}  // namespace contraction
