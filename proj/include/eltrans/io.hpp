#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "eltrans/enumerate.hpp"
#include "eltrans/formal_bundle.hpp"
#include "eltrans/higher_rank.hpp"
#include "eltrans/seqcore.hpp"

namespace eltrans {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// "3,-3;3,-2;1,1" -> pairs. Whitespace around numbers is ignored.
PairList parse_pairs(std::string_view text);
std::string format_pairs(std::span<const SplittingPair> pairs);

/// "0,0,-2;0,0,-1" -> tuples of arbitrary (equal or not) length.
std::vector<SplittingTuple> parse_tuples(std::string_view text);

/// [{"i":1,"l":1,"c":"1/2"}, ...]; "c" may also be a JSON integer.
std::vector<ExtensionCoefficient> parse_extension_json(std::string_view text);

Json pairs_to_json(std::span<const SplittingPair> pairs);
Json to_json(const InvariantReport& r);
Json to_json(const AuditReport& r);
Json to_json(const Witness& w);

/// Sparse (l, i, "c") triples per entry, row-major:
/// {"rank":2,"truncation":N,"det_exponent":c,"entries":[[[l,i,"c"],...], ...]}
template <int Rank>
Json matrix_dump(const Transition<Rank>& t);

/// CSV header and row for one invariant report; z/j/epsilon empty when absent.
std::string invariant_csv_header();
std::string invariant_csv_row(std::size_t index, const InvariantReport& r);

/// CSV rows of an audit: one line per attained witness.
std::string audit_csv(const AuditReport& r);

}  // namespace eltrans
