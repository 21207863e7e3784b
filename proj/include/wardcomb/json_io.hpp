#pragma once

// JSON encodings of every family, series and report.
//
//   Schroeder tree:   {"blocks": [[subtree, ...], ...], "label": int}
//   enriched tree:    the same plus "star": [int, ...] parallel to "blocks"
//   total partition:  {"leaf": int} | {"children": [tree, ...]}
//   set/ordered partition: [[int, ...], ...]
//   meadow:           [{"leaves": [int, ...], "root": int}, ...]
//   series:           {"order": N, "coefficients": [["num", "den"], ...]}
//
// Keys are emitted in sorted order, so dump() is byte-deterministic.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wardcomb/bijections.hpp"
#include "wardcomb/exactmath.hpp"
#include "wardcomb/series.hpp"
#include "wardcomb/structures.hpp"
#include "wardcomb/ward.hpp"
#include "wardcomb/ward_egf.hpp"

namespace wardcomb {

using Json = nlohmann::json;

/// Malformed or non-canonical JSON input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Json rat_to_json(const ExactRat& r) { return Json::array({numerator_of(r).str(), denominator_of(r).str()}); }

inline ExactRat rat_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return ExactRat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
      auto part = [](const Json& p) { return p.is_string() ? ExactInt(p.get<std::string>()) : ExactInt(p.get<long long>()); };
      return make_rat(part(j[0]), part(j[1]));
    }
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
  throw InputError("bad rational: " + j.dump());
}

// --- partitions -------------------------------------------------------------

inline Json to_json(const std::vector<Block>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back(b);
  return j;
}
inline Json to_json(const SetPartition& p) { return to_json(p.blocks); }
inline Json to_json(const OrderedPartition& op) { return to_json(op.blocks); }

namespace detail {

inline std::vector<Block> blocks_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("partition must be a list of lists");
  std::vector<Block> blocks;
  for (const auto& b : j) {
    if (!b.is_array() || b.empty()) throw InputError("partition blocks must be nonempty lists");
    Block blk;
    for (const auto& v : b) {
      if (!v.is_number_integer()) throw InputError("partition entries must be integers");
      blk.push_back(v.get<int>());
    }
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

inline int element_count(const std::vector<Block>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return static_cast<int>(n);
}

}  // namespace detail

inline OrderedPartition ordered_partition_from_json(const Json& j) {
  auto blocks = detail::blocks_from_json(j);
  OrderedPartition op{detail::element_count(blocks), blocks};
  if (!is_valid(op)) throw InputError("not an ordered partition of [n] with ascending blocks");
  return op;
}

inline SetPartition set_partition_from_json(const Json& j) {
  auto blocks = detail::blocks_from_json(j);
  SetPartition p{detail::element_count(blocks), blocks};
  if (!is_canonical(p)) throw InputError("not a canonical set partition of [n]");
  return p;
}

// --- Schroeder trees --------------------------------------------------------

inline Json to_json(const SchroederTree& t) {
  Json blocks = Json::array();
  for (const auto& b : t.blocks) {
    Json block = Json::array();
    for (const auto& c : b) block.push_back(to_json(c));
    blocks.push_back(std::move(block));
  }
  return Json{{"blocks", std::move(blocks)}, {"label", t.label}};
}

inline SchroederTree schroeder_from_json(const Json& j) {
  auto parse = [](auto& self, const Json& node) -> SchroederTree {
    if (!node.is_object() || !node.contains("label") || !node["label"].is_number_integer())
      throw InputError("Schroeder tree node needs an integer \"label\"");
    SchroederTree t{node["label"].get<int>(), {}};
    if (node.contains("blocks")) {
      if (!node["blocks"].is_array()) throw InputError("\"blocks\" must be a list");
      for (const auto& b : node["blocks"]) {
        if (!b.is_array() || b.empty()) throw InputError("each block must be a nonempty list");
        std::vector<SchroederTree> block;
        for (const auto& c : b) block.push_back(self(self, c));
        t.blocks.push_back(std::move(block));
      }
    }
    return t;
  };
  auto t = parse(parse, j);
  if (!is_canonical(t)) throw InputError("Schroeder tree is not canonical (distinct labels, ascending blocks)");
  return t;
}

inline Json to_json(const EnrichedSchroederTree& e) {
  std::size_t cursor = 0;
  auto encode = [&](auto& self, const SchroederTree& v) -> Json {
    Json stars = Json::array();
    for (std::size_t i = 0; i < v.blocks.size(); ++i) stars.push_back(e.stars.at(cursor++));
    Json blocks = Json::array();
    for (const auto& b : v.blocks) {
      Json block = Json::array();
      for (const auto& c : b) block.push_back(self(self, c));
      blocks.push_back(std::move(block));
    }
    return Json{{"blocks", std::move(blocks)}, {"label", v.label}, {"star", std::move(stars)}};
  };
  return encode(encode, e.tree);
}

inline EnrichedSchroederTree enriched_from_json(const Json& j) {
  EnrichedSchroederTree e{schroeder_from_json(j), {}};
  auto collect = [&](auto& self, const Json& node) -> void {
    const std::size_t nb = node.contains("blocks") ? node["blocks"].size() : 0;
    if (nb > 0 && (!node.contains("star") || !node["star"].is_array() || node["star"].size() != nb))
      throw InputError("\"star\" must list one position per block");
    for (std::size_t i = 0; i < nb; ++i) {
      if (!node["star"][i].is_number_integer()) throw InputError("star positions must be integers");
      e.stars.push_back(node["star"][i].get<int>());
    }
    for (std::size_t i = 0; i < nb; ++i)
      for (const auto& c : node["blocks"][i]) self(self, c);
  };
  collect(collect, j);
  if (!is_valid(e)) throw InputError("not an enriched increasing Schroeder tree");
  return e;
}

// --- total partition / semi-labeled trees -----------------------------------

inline Json to_json(const TotalPartitionTree& t) {
  if (t.is_leaf()) return Json{{"leaf", t.leaf}};
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  return Json{{"children", std::move(kids)}};
}

inline TotalPartitionTree total_from_json(const Json& j) {
  auto parse = [](auto& self, const Json& node) -> TotalPartitionTree {
    if (!node.is_object()) throw InputError("tree node must be an object");
    if (node.contains("leaf")) {
      if (!node["leaf"].is_number_integer() || node.contains("children")) throw InputError("leaf node needs only an integer \"leaf\"");
      return make_leaf(node["leaf"].get<int>());
    }
    if (!node.contains("children") || !node["children"].is_array() || node["children"].empty())
      throw InputError("internal node needs a nonempty \"children\" list");
    std::vector<TotalPartitionTree> kids;
    for (const auto& c : node["children"]) kids.push_back(self(self, c));
    return make_internal(std::move(kids));
  };
  auto t = parse(parse, j);
  if (!is_canonical(t)) throw InputError("tree is not canonical (distinct leaves, children sorted by minimum leaf)");
  return t;
}

// --- meadows ----------------------------------------------------------------

inline Json to_json(const Meadow& m) {
  Json j = Json::array();
  for (const auto& s : m.trees) j.push_back(Json{{"leaves", s.leaves}, {"root", s.root}});
  return j;
}

// --- series -----------------------------------------------------------------

inline Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(rat_to_json(c));
  return Json{{"coefficients", std::move(coeffs)}, {"order", s.order()}};
}

/// Accepts {"coefficients": [...]} or {"egf": [...]}; "order" is optional
/// and must match the coefficient count when given.
inline TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("series must be an object");
  const bool egf = j.contains("egf");
  const auto& arr = egf ? j["egf"] : (j.contains("coefficients") ? j["coefficients"] : Json());
  if (!arr.is_array() || arr.empty()) throw InputError("series needs a nonempty \"coefficients\" or \"egf\" list");
  std::vector<ExactRat> c;
  for (const auto& v : arr) c.push_back(rat_from_json(v));
  if (j.contains("order") && (!j["order"].is_number_integer() || j["order"].get<long long>() + 1 != static_cast<long long>(c.size())))
    throw InputError("\"order\" does not match the number of coefficients");
  return egf ? TruncatedSeries::from_egf(c) : TruncatedSeries(c);
}

inline Json egf_to_json(const TruncatedSeries& s) {
  Json j = Json::array();
  for (const auto& a : s.egf_coefficients()) j.push_back(to_string(a));
  return j;
}

// --- reports ----------------------------------------------------------------

inline Json to_json(const InvolutionReport& r) {
  return Json{{"family", r.family},
              {"ground_size", r.ground_size},
              {"objects", r.objects},
              {"pairs_checked", r.pairs_checked},
              {"fixed_points", r.fixed_points},
              {"expected_fixed_points", r.expected_fixed_points.str()},
              {"signed_sum", r.signed_sum},
              {"expected_signed_sum", r.expected_signed_sum.str()},
              {"violations", r.violations},
              {"first_violation", r.first_violation},
              {"ok", r.ok()}};
}

inline Json to_json(const EqualityReport& r) {
  Json per_type = Json::object();
  for (const auto& [key, lr] : r.per_type) per_type[key] = Json::array({to_string(lr.first), to_string(lr.second)});
  return Json{{"name", r.name},     {"params", r.params}, {"left_total", to_string(r.left_total)}, {"right_total", to_string(r.right_total)},
              {"per_type", per_type}, {"ok", r.ok()}};
}

inline Json to_json(const AlternatingIdentityReport& r) {
  return Json{{"n", r.n},
              {"closed_form", r.closed_form.str()},
              {"paired", r.paired.str()},
              {"expected", r.expected.str()},
              {"cancelled_pairs", r.cancelled_pairs},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

inline Json to_json(const SpecializationCheck& c) {
  return Json{{"row", c.row}, {"quantity", c.quantity}, {"n", c.n}, {"expected", to_string(c.expected)}, {"got", to_string(c.got)}, {"ok", c.ok()}};
}

inline Json to_json(const SpecializationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"max_n", r.max_n}, {"checks", std::move(checks)}, {"ok", r.ok()}};
  if (auto* f = r.first_failure()) j["first_failure"] = to_json(*f);
  return j;
}

inline Json to_json(const FunctionalCheckReport& r) {
  Json j{{"weights", r.weights}, {"order", r.order}, {"ok", r.ok()}};
  j["first_bad_inverse"] = r.first_bad_inverse ? Json(*r.first_bad_inverse) : Json(nullptr);
  j["first_bad_derivative"] = r.first_bad_derivative ? Json(*r.first_bad_derivative) : Json(nullptr);
  j["inverse_residual"] = to_json(r.inverse_residual);
  j["derivative_residual"] = to_json(r.derivative_residual);
  return j;
}

inline Json to_json(const WardTable& t) {
  Json rows = Json::array();
  Json sums = Json::array();
  Json alts = Json::array();
  for (std::size_t n = 0; n <= t.max_n; ++n) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= n; ++k) row.push_back(to_string(t.at(n, k)));
    rows.push_back(std::move(row));
    sums.push_back(to_string(t.row_sum(n)));
    alts.push_back(to_string(t.alternating_sum(n)));
  }
  return Json{{"weights", t.weights}, {"max_n", t.max_n}, {"rows", rows}, {"row_sums", sums}, {"alternating_sums", alts}};
}

}  // namespace wardcomb
