#include "eltrans/io.hpp"

#include <charconv>
#include <sstream>

#include "eltrans/errors.hpp"

namespace eltrans {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos
                                                               : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int parse_int(std::string_view raw, std::string_view context) {
  const auto s = trim(raw);
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
    throw ParseError("expected an integer, got \"" + std::string(raw) + "\" in \"" +
                     std::string(context) + "\"");
  return value;
}

std::vector<std::vector<int>> parse_groups(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty sequence text");
  std::vector<std::vector<int>> out;
  for (auto group : split(trim(text), ';')) {
    std::vector<int> values;
    for (auto entry : split(group, ',')) values.push_back(parse_int(entry, text));
    out.push_back(std::move(values));
  }
  return out;
}

std::string csv_optional(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

PairList parse_pairs(std::string_view text) {
  PairList out;
  for (const auto& g : parse_groups(text)) {
    if (g.size() != 2)
      throw ParseError("each pair needs exactly two integers \"a,b\": \"" + std::string(text) +
                       "\"");
    out.push_back({g[0], g[1]});
  }
  return out;
}

std::string format_pairs(std::span<const SplittingPair> pairs) {
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(pairs[k].a) + "," + std::to_string(pairs[k].b);
  }
  return out;
}

std::vector<SplittingTuple> parse_tuples(std::string_view text) { return parse_groups(text); }

std::vector<ExtensionCoefficient> parse_extension_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("p-coefficients: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("p-coefficients must be a JSON array");
  std::vector<ExtensionCoefficient> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("i") || !item.contains("l") || !item.contains("c") ||
        !item["i"].is_number_integer() || !item["l"].is_number_integer())
      throw ParseError("p-coefficient entries look like {\"i\":1,\"l\":1,\"c\":\"1/2\"}");
    const auto& c = item["c"];
    Rational value;
    if (c.is_string()) value = Rational::parse(c.get<std::string>());
    else if (c.is_number_integer()) value = Rational(c.get<int>());
    else throw ParseError("p-coefficient \"c\" must be a rational string or an integer");
    out.push_back({item["i"].get<int>(), item["l"].get<int>(), value});
  }
  return out;
}

Json pairs_to_json(std::span<const SplittingPair> pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.a, p.b});
  return out;
}

Json to_json(const InvariantReport& r) {
  const auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  Json out;
  out["sequence"] = pairs_to_json(r.sequence);
  out["t"] = r.length();
  out["w"] = r.w;
  out["c2_defect"] = r.c2_defect;
  out["z"] = opt(r.z);
  out["j"] = opt(r.j);
  out["epsilon"] = opt(r.epsilon);
  out["split"] = r.split;
  return out;
}

Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZwPair>) return Json::array({v.z, v.w});
        else if constexpr (std::is_same_v<T, int>) return Json(v);
        else return pairs_to_json(v);
      },
      w);
}

Json to_json(const AuditReport& r) {
  const auto list = [](const std::vector<Witness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back(to_json(w));
    return out;
  };
  Json out;
  out["claim"] = r.claim;
  out["j"] = r.j;
  out["epsilon"] = r.epsilon;
  Json claimed = Json::object();
  for (const auto& range : r.claimed) claimed[range.name] = {range.lo, range.hi};
  if (!r.claimed_sequences.empty()) {
    Json seqs = Json::array();
    for (const auto& s : r.claimed_sequences) seqs.push_back(pairs_to_json(s));
    claimed["sequences"] = seqs;
  }
  out["claimed"] = claimed;
  out["attained"] = list(r.attained);
  out["missing"] = list(r.missing);
  out["extra"] = list(r.extra);
  if (!r.metrics.empty()) {
    Json metrics = Json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = v;
    out["metrics"] = metrics;
  }
  out["holds"] = r.holds;
  return out;
}

template <int Rank>
Json matrix_dump(const Transition<Rank>& t) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < Rank; ++r)
    for (Eigen::Index c = 0; c < Rank; ++c) {
      Json terms = Json::array();
      for (const auto& [e, coeff] : t(static_cast<int>(r), static_cast<int>(c)).terms())
        terms.push_back({e.z, e.u, coeff.str()});
      entries.push_back(terms);
    }
  Json out;
  out["rank"] = Rank;
  out["truncation"] = t.truncation();
  out["det_exponent"] = t.det_exponent();
  out["entries"] = entries;
  return out;
}

template Json matrix_dump<1>(const Transition<1>&);
template Json matrix_dump<2>(const Transition<2>&);

std::string invariant_csv_header() { return "index,sequence,t,w,c2_defect,z,j,epsilon,split"; }

std::string invariant_csv_row(std::size_t index, const InvariantReport& r) {
  std::ostringstream os;
  os << index << ',' << '"' << format_pairs(r.sequence) << '"' << ',' << r.length() << ','
     << r.w << ',' << r.c2_defect << ',' << csv_optional(r.z) << ',' << csv_optional(r.j) << ','
     << csv_optional(r.epsilon) << ',' << (r.split ? "true" : "false");
  return os.str();
}

std::string audit_csv(const AuditReport& r) {
  std::ostringstream os;
  os << "claim,j,epsilon,status,witness\n";
  const auto emit = [&](const std::vector<Witness>& ws, const char* status) {
    for (const auto& w : ws) os << r.claim << ',' << r.j << ',' << r.epsilon << ',' << status
                                << ",\"" << to_json(w).dump() << "\"\n";
  };
  emit(r.attained, "attained");
  emit(r.missing, "missing");
  emit(r.extra, "extra");
  return os.str();
}

}  // namespace eltrans
