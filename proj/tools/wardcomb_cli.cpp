// wardcomb: Ward number tables, enumeration, bijections, involutions, series
// inversion and verification suites from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "verify_suites.hpp"
#include "wardcomb/bijections.hpp"
#include "wardcomb/json_io.hpp"
#include "wardcomb/series.hpp"
#include "wardcomb/ward.hpp"
#include "wardcomb/ward_egf.hpp"

using namespace wardcomb;

namespace {

constexpr int kEnumerateMax = 7;
constexpr int kTableMax = 64;
constexpr int kSeriesMax = 64;

enum Exit { ok = 0, verification_failed = 1, usage_error = 2, precondition_error = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  std::string out;
  std::string input = "-";
  std::optional<int> n, k, min_block, order;
  std::optional<std::string> weights;
  std::string family;
  std::string map;
  std::string direction = "total-to-increasing";
  std::string suite = "all";
  std::string action;
  std::string preset;
  bool alternating = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string braces(const std::vector<Block>& blocks) {
  std::string s = "[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    s += b ? ",{" : "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) s += (i ? "," : "") + std::to_string(blocks[b][i]);
    s += "}";
  }
  return s + "]";
}

std::string signed_text(int sign) { return sign > 0 ? "+1" : "-1"; }

int require_n(const RunConfig& c, int lo, int hi, const char* what) {
  if (!c.n) throw UsageError(std::string(what) + " needs --n");
  if (*c.n < lo || *c.n > hi) throw UsageError(std::string(what) + ": --n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return *c.n;
}

WeightSystem weights_of(const RunConfig& c) {
  if (!c.weights) return WeightSystem::ones();
  try {
    return parse_weights(*c.weights);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad weight spec: ") + e.what());
  }
}

Json read_input(const RunConfig& c) {
  std::string text;
  if (c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(c.input);
    if (!in) throw UsageError("cannot read " + c.input);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// --- ward -------------------------------------------------------------------

int cmd_ward(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c, 0, kTableMax, "ward");
  const auto t = c.weights ? weighted_ward_table(static_cast<std::size_t>(n), weights_of(c)) : ward_recurrence_table(static_cast<std::size_t>(n));
  if (c.format == "json") {
    if (c.alternating) {
      Json alts = Json::array();
      for (std::size_t r = 0; r <= t.max_n; ++r) alts.push_back(to_string(t.alternating_sum(r)));
      out << Json{{"weights", t.weights}, {"max_n", t.max_n}, {"alternating_sums", alts}}.dump() << "\n";
    } else {
      out << to_json(t).dump() << "\n";
    }
    return ok;
  }
  if (c.format == "csv") out << (c.alternating ? "n,alternating_sum\n" : "n,k,value\n");
  for (std::size_t r = 0; r <= t.max_n; ++r) {
    if (c.alternating) {
      out << r << (c.format == "csv" ? "," : ": ") << to_string(t.alternating_sum(r)) << "\n";
      continue;
    }
    if (c.format == "csv") {
      for (std::size_t k = 0; k <= r; ++k) out << r << "," << k << "," << to_string(t.at(r, k)) << "\n";
    } else {
      out << r << ":";
      for (std::size_t k = 0; k <= r; ++k) out << " " << to_string(t.at(r, k));
      out << "\n";
    }
  }
  return ok;
}

// --- enumerate --------------------------------------------------------------

struct Emitter {
  const RunConfig& c;
  std::ostream& out;
  long long count = 0;

  void header() {
    if (c.format == "csv") out << "index,k,type,object\n";
  }
  void emit(const Json& j, const std::string& plain, long long k, const TypeVector& type) {
    ++count;
    if (c.format == "json")
      out << j.dump() << "\n";
    else if (c.format == "csv")
      out << count << "," << k << "," << csv_field(type.str()) << "," << csv_field(j.dump()) << "\n";
    else
      out << plain << "  k=" << k << " type=" << (type.empty() ? "-" : type.str()) << "\n";
  }
  void trailer() {
    if (c.format == "json")
      out << Json{{"count", count}}.dump() << "\n";
    else if (c.format == "plain")
      out << "count: " << count << "\n";
  }
};

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  static const std::vector<std::string> families{"setpart", "oppart", "schroeder", "inc-schroeder", "enriched",
                                                 "total", "meadow", "inc-meadow", "semilabeled"};
  if (std::find(families.begin(), families.end(), c.family) == families.end())
    throw UsageError("enumerate: --family must be one of setpart, oppart, schroeder, inc-schroeder, enriched, total, meadow, inc-meadow, semilabeled");
  if (c.min_block && c.family != "setpart") throw UsageError("enumerate: --min-block applies to --family setpart only");
  if (c.k && (*c.k < 0 || *c.k > kEnumerateMax)) throw UsageError("enumerate: --k must lie in [0, " + std::to_string(kEnumerateMax) + "]");
  const bool positive_n = c.family != "setpart" && c.family != "meadow" && c.family != "inc-meadow";
  const int n = require_n(c, positive_n ? 1 : 0, kEnumerateMax, "enumerate");
  const auto want = [&](long long k) { return !c.k || *c.k == k; };

  Emitter e{c, out};
  e.header();
  if (c.family == "setpart") {
    const int min_block = c.min_block.value_or(1);
    if (min_block < 1) throw UsageError("enumerate: --min-block must be positive");
    for (int k = 0; k <= n; ++k) {
      if (!want(k)) continue;
      enumerate_set_partitions(n, k, min_block, [&](const SetPartition& p) { e.emit(to_json(p), braces(p.blocks), k, block_size_profile(p)); });
    }
  } else if (c.family == "oppart") {
    enumerate_ordered_partitions(n, [&](const OrderedPartition& p) {
      const auto k = static_cast<long long>(p.blocks.size());
      if (want(k)) e.emit(to_json(p), braces(p.blocks), k, block_size_profile(SetPartition{p.n, p.blocks}));
    });
  } else if (c.family == "schroeder" || c.family == "inc-schroeder") {
    auto visit = [&](const SchroederTree& t) {
      const auto k = static_cast<long long>(block_count(t));
      if (want(k)) e.emit(to_json(t), to_json(t).dump(), k, type_of(t));
    };
    if (c.family == "schroeder")
      enumerate_schroeder_trees(n, visit);
    else
      enumerate_increasing_schroeder_trees(n, visit);
  } else if (c.family == "enriched") {
    enumerate_enriched_trees(n, [&](const EnrichedSchroederTree& t) {
      const auto k = static_cast<long long>(block_count(t.tree));
      if (want(k)) e.emit(to_json(t), to_json(t).dump(), k, type_of(t));
    });
  } else if (c.family == "total") {
    enumerate_total_partition_trees(n, [&](const TotalPartitionTree& t) {
      const auto k = static_cast<long long>(internal_count(t));
      if (want(k)) e.emit(to_json(t), to_json(t).dump(), k, type_of(t));
    });
  } else if (c.family == "meadow" || c.family == "inc-meadow") {
    for (int k = 0; 2 * k <= n; ++k) {
      if (!want(k)) continue;
      enumerate_meadows(n, k, c.family == "inc-meadow", [&](const Meadow& m) { e.emit(to_json(m), to_json(m).dump(), k, type_of(m)); });
    }
  } else {
    if (!c.k || *c.k < 1) throw UsageError("enumerate: --family semilabeled needs --k >= 1 (number of internal vertices)");
    enumerate_semilabeled_trees(n, *c.k, [&](const TotalPartitionTree& t) { e.emit(to_json(t), to_json(t).dump(), *c.k, child_count_profile(t)); });
  }
  e.trailer();
  return ok;
}

// --- biject / involute ------------------------------------------------------

int cmd_biject(const RunConfig& c, std::ostream& out) {
  const Json in = read_input(c);
  Json image;
  TypeVector type;
  if (c.direction == "total-to-increasing") {
    if (!c.family.empty() && c.family != "total") throw UsageError("biject: total-to-increasing reads --family total");
    const auto t = total_from_json(in);
    if (!is_total_partition_tree(t)) throw InputError("internal vertex with fewer than two children");
    image = to_json(total_to_increasing(t));
    type = type_of(t);
  } else if (c.direction == "increasing-to-total") {
    if (!c.family.empty() && c.family != "inc-schroeder") throw UsageError("biject: increasing-to-total reads --family inc-schroeder");
    const auto s = schroeder_from_json(in);
    if (!is_increasing(s)) throw InputError("tree is not increasing");
    image = to_json(increasing_to_total(s));
    type = type_of(s);
  } else {
    throw UsageError("biject: --direction must be total-to-increasing or increasing-to-total");
  }
  if (c.format == "json")
    out << image.dump() << "\n";
  else if (c.format == "csv")
    out << "input,image,type\n" << csv_field(in.dump()) << "," << csv_field(image.dump()) << "," << csv_field(type.str()) << "\n";
  else
    out << "image: " << image.dump() << "\ntype: " << type.str() << "\n";
  return ok;
}

struct InvolutionStep {
  Json input, image;
  std::string input_text, image_text;
  int input_sign = 0, image_sign = 0;
  bool fixed = false;
};

int cmd_involute(const RunConfig& c, std::ostream& out) {
  const Json in = read_input(c);
  InvolutionStep s;
  s.input = in;
  if (c.map == "psi-prime") {
    if (!c.family.empty() && c.family != "oppart") throw UsageError("involute: psi-prime acts on --family oppart");
    const auto op = ordered_partition_from_json(in);
    s.input_text = braces(op.blocks);
    s.input_sign = sign_of(op);
    s.fixed = is_psi_prime_fixed_point(op);
    if (!s.fixed) {
      const auto img = psi_prime(op);
      s.image = to_json(img);
      s.image_text = braces(img.blocks);
      s.image_sign = sign_of(img);
    }
  } else if (c.map == "psi-n") {
    if (!c.family.empty() && c.family != "schroeder" && c.family != "inc-schroeder") throw UsageError("involute: psi-n acts on Schroeder trees");
    const auto t = schroeder_from_json(in);
    if (c.family == "inc-schroeder" && !is_increasing(t)) throw InputError("tree is not increasing");
    s.input_text = in.dump();
    s.input_sign = sign_of(t);
    s.fixed = is_psi_fixed_point(t);
    if (!s.fixed) {
      const auto img = psi_n(t);
      s.image = to_json(img);
      s.image_text = s.image.dump();
      s.image_sign = sign_of(img);
    }
  } else {
    throw UsageError("involute: --map must be psi-prime or psi-n");
  }
  if (c.format == "json") {
    Json j{{"map", c.map}, {"input", s.input}, {"input_sign", s.input_sign}, {"fixed", s.fixed}};
    if (!s.fixed) {
      j["image"] = s.image;
      j["image_sign"] = s.image_sign;
    }
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "input,input_sign,image,image_sign\n" << csv_field(s.input.dump()) << "," << s.input_sign << ",";
    if (s.fixed)
      out << "fixed,\n";
    else
      out << csv_field(s.image.dump()) << "," << s.image_sign << "\n";
  } else if (s.fixed) {
    out << "fixed: " << s.input_text << " (" << signed_text(s.input_sign) << ")\n";
  } else {
    out << s.input_text << " (" << signed_text(s.input_sign) << ") -> " << s.image_text << " (" << signed_text(s.image_sign) << ")\n";
  }
  return ok;
}

// --- series -----------------------------------------------------------------

std::size_t series_order(const RunConfig& c, std::size_t fallback) {
  const int order = c.order.value_or(static_cast<int>(fallback));
  if (order < 1 || order > kSeriesMax) throw UsageError("series: --order must lie in [1, " + std::to_string(kSeriesMax) + "]");
  return static_cast<std::size_t>(order);
}

TruncatedSeries series_input(const RunConfig& c) {
  if (!c.preset.empty() && c.input != "-") throw UsageError("series: give either --preset or --input, not both");
  if (c.preset.empty()) {
    auto s = series_from_json(read_input(c));
    if (s.order() > static_cast<std::size_t>(kSeriesMax)) throw UsageError("series: input order exceeds " + std::to_string(kSeriesMax));
    return c.order ? s.truncate(series_order(c, s.order())) : s;
  }
  const auto order = series_order(c, 8);
  if (c.preset == "ward-egf") return ward_h(weights_of(c), order);
  if (c.weights) throw UsageError("series: --weights applies to --preset ward-egf only");
  if (c.preset == "identity") return TruncatedSeries::identity(order);
  if (c.preset == "exp-minus-one") return TruncatedSeries::exp_minus_one(order);
  throw UsageError("series: --preset must be ward-egf, identity or exp-minus-one");
}

void print_series(const RunConfig& c, std::ostream& out, const std::string& label, const TruncatedSeries& s, Json extra) {
  if (c.format == "json") {
    extra["action"] = c.action;
    extra[label] = to_json(s);
    extra["egf"] = egf_to_json(s);
    out << extra.dump() << "\n";
  } else if (c.format == "csv") {
    out << "n,coefficient,egf\n";
    for (std::size_t i = 0; i <= s.order(); ++i) out << i << "," << to_string(s.coeff(i)) << "," << to_string(s.egf(i)) << "\n";
  } else {
    out << "egf:";
    for (std::size_t i = 0; i <= s.order(); ++i) out << " " << to_string(s.egf(i));
    out << "\n";
    for (const auto& [key, v] : extra.items()) out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

int cmd_series(const RunConfig& c, std::ostream& out) {
  if (c.action == "check") {
    if (!c.preset.empty() || c.input != "-") throw UsageError("series check reads --weights and --order only");
    const auto rep = ward_functional_check(weights_of(c), series_order(c, 8));
    if (c.format == "json") {
      out << to_json(rep).dump() << "\n";
    } else if (c.format == "csv") {
      out << "weights,order,ok,first_bad_inverse,first_bad_derivative\n"
          << csv_field(rep.weights) << "," << rep.order << "," << (rep.ok() ? "true" : "false") << ","
          << (rep.first_bad_inverse ? std::to_string(*rep.first_bad_inverse) : "") << ","
          << (rep.first_bad_derivative ? std::to_string(*rep.first_bad_derivative) : "") << "\n";
    } else if (rep.ok()) {
      out << "residual: 0 (W - f(W) - x and W'(1 - f'(W)) - 1 vanish through x^" << rep.order << ")\n";
    } else {
      out << "residual: nonzero at x^" << (rep.first_bad_inverse ? *rep.first_bad_inverse : *rep.first_bad_derivative) << "\n";
    }
    return rep.ok() ? ok : verification_failed;
  }

  const auto h = series_input(c);
  if (c.action == "invert-newton") {
    print_series(c, out, "inverse", invert_newton(h), Json::object());
    return ok;
  }
  if (c.action == "invert-variant") {
    const auto v = invert_variant(h);
    const bool agrees = v == invert_newton(h);
    print_series(c, out, "inverse", v, Json{{"agrees_with_newton", agrees}});
    return agrees ? ok : verification_failed;
  }
  // lagrange: b_n for n = 1..order
  std::vector<ExactRat> b;
  for (std::size_t i = 1; i <= h.order(); ++i) b.push_back(lagrange_classical(h, i));
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& v : b) arr.push_back(to_string(v));
    out << Json{{"action", c.action}, {"b", arr}}.dump() << "\n";
  } else if (c.format == "csv") {
    out << "n,b\n";
    for (std::size_t i = 0; i < b.size(); ++i) out << i + 1 << "," << to_string(b[i]) << "\n";
  } else {
    out << "b:";
    for (const auto& v : b) out << " " << to_string(v);
    out << "\n";
  }
  return ok;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto& names = verify::suite_names();
  if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end())
    throw UsageError("verify: --suite must be one of recurrences, bijections, involutions, chen-counts, table2, series, all");
  const Json rep = verify::run_suite(c.suite);
  const bool passed = rep["ok"].get<bool>();
  if (c.format == "json") {
    out << rep.dump() << "\n";
  } else if (c.format == "csv") {
    out << "suite,check,ok,seconds\n";
    for (const auto& ch : rep["checks"])
      out << ch["suite"].get<std::string>() << "," << ch["name"].get<std::string>() << "," << (ch["ok"].get<bool>() ? "true" : "false") << ","
          << ch["seconds"].get<double>() << "\n";
  } else {
    for (const auto& ch : rep["checks"]) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.3fs", ch["seconds"].get<double>());
      out << (ch["ok"].get<bool>() ? "PASS " : "FAIL ") << ch["suite"].get<std::string>() << "/" << ch["name"].get<std::string>() << " " << secs << "\n";
    }
    out << (passed ? "all checks passed" : "first counterexample: " + rep["first_counterexample"].dump()) << "\n";
  }
  return passed ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ward numbers, their tree and partition families, and series inversion"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", cfg.out, "write output to this file instead of stdout");
  app.add_option("--input", cfg.input, "input JSON file, - for stdin");
  app.add_option("--order", cfg.order, "truncation order");
  app.add_option("--weights", cfg.weights, "weight spec: ones | i_plus_1 | factorial_i | factorial_i_plus_1 | factorial_i_minus_1 | delta:<j>:<scale> | list:<g1>,...");
  app.add_option("--n", cfg.n, "size bound");
  app.add_option("--k", cfg.k, "block / internal vertex count");
  app.add_option("--min-block", cfg.min_block, "minimum block size (setpart)");
  app.add_option("--family", cfg.family, "object family");
  app.add_option("--map", cfg.map, "involution: psi-prime | psi-n");
  app.add_option("--direction", cfg.direction, "total-to-increasing | increasing-to-total");
  app.add_option("--suite", cfg.suite, "recurrences | bijections | involutions | chen-counts | table2 | series | all");

  auto* ward = app.add_subcommand("ward", "Ward number table W(n,k), weighted with --weights");
  ward->add_flag("--alternating", cfg.alternating, "print sum_k (-1)^(n+k) W(n,k) per row");
  auto* enumerate = app.add_subcommand("enumerate", "list every object of a family in canonical JSON");
  auto* biject = app.add_subcommand("biject", "total partition tree <-> increasing Schroeder tree");
  auto* involute = app.add_subcommand("involute", "apply a sign-reversing involution");
  auto* series = app.add_subcommand("series", "compositional inversion of truncated series");
  series->add_option("action", cfg.action, "invert-newton | invert-variant | lagrange | check")
      ->required()
      ->check(CLI::IsMember({"invert-newton", "invert-variant", "lagrange", "check"}));
  series->add_option("--preset", cfg.preset, "ward-egf | identity | exp-minus-one");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  std::ostringstream out;
  int code = ok;
  try {
    if (cfg.alternating && !ward->parsed()) throw UsageError("--alternating applies to ward only");
    if (ward->parsed())
      code = cmd_ward(cfg, out);
    else if (enumerate->parsed())
      code = cmd_enumerate(cfg, out);
    else if (biject->parsed())
      code = cmd_biject(cfg, out);
    else if (involute->parsed())
      code = cmd_involute(cfg, out);
    else if (series->parsed())
      code = cmd_series(cfg, out);
    else if (verify_cmd->parsed())
      code = cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return usage_error;
  } catch (const SeriesPreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return precondition_error;
  } catch (const IncompleteWeightSystem& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return precondition_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return precondition_error;
  }

  if (cfg.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return usage_error;
    }
    file << out.str();
  }
  return code;
}
