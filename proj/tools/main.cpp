// Command line front end: finiteness classification for products of flag
// ind-varieties, balanced truncations, exact double-flag orbit counts,
// growth sequences, brute-force orbit enumeration over small prime fields,
// and the built-in verification suites.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagorbits/classifier.hpp"
#include "flagorbits/finite_field.hpp"
#include "flagorbits/json_io.hpp"
#include "flagorbits/orbit_combinatorics.hpp"
#include "flagorbits/signature.hpp"
#include "flagorbits/truncation.hpp"
#include "flagorbits/verify.hpp"

namespace {

using namespace flagorbits;
using nlohmann::json;

constexpr int kExitFinite = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfinite = 3;

std::size_t budget_from_env() {
  if (const char* raw = std::getenv("FLAGORBITS_BUDGET")) {
    try {
      const long long v = std::stoll(raw);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed FLAGORBITS_BUDGET\n";
  }
  return 2'000'000;
}

// "O" is accepted as a synonym for the orthogonal family; even-dimensional
// truncations are the default there.
std::optional<LieType> parse_type_arg(std::string s) {
  if (s == "O") return LieType::D;
  return parse_lie_type(s);
}

// A factor is either a block signature ("1,inf") or an infinite chain
// ("chain:omega", "chain:omega*", "chain:two-sided", "chain:dense").
std::optional<GeneralizedFlagDescriptor> parse_factor(LieType t, const std::string& s) {
  if (s.rfind("chain:", 0) == 0) {
    const std::string kind = s.substr(6);
    ChainOrder order;
    if (kind == "omega")
      order = ChainOrder::IncreasingOmega;
    else if (kind == "omega*")
      order = ChainOrder::DecreasingOmega;
    else if (kind == "two-sided")
      order = ChainOrder::TwoSided;
    else if (kind == "dense")
      order = ChainOrder::Dense;
    else
      return std::nullopt;
    return GeneralizedFlagDescriptor::infinite_chain(order, t);
  }
  auto sig = parse_signature(lie_type_name(t) + ":" + s);
  if (!sig) return std::nullopt;
  return GeneralizedFlagDescriptor::finite_chain(std::move(*sig));
}

std::optional<std::vector<std::int64_t>> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) return std::nullopt;
      out.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int run_classify(const std::string& type_arg, const std::vector<std::string>& factors,
                 bool as_json) {
  const auto t = parse_type_arg(type_arg);
  if (!t) {
    std::cerr << "error: unknown type '" << type_arg << "'\n";
    return kExitInvalid;
  }
  std::vector<GeneralizedFlagDescriptor> fs;
  for (const auto& f : factors) {
    auto d = parse_factor(*t, f);
    if (!d) {
      std::cerr << "error: cannot parse factor '" << f << "'\n";
      return kExitInvalid;
    }
    fs.push_back(std::move(*d));
  }
  Verdict v;
  try {
    v = classify(*t, fs);
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  if (as_json) {
    std::cout << verdict_to_json(v).dump(2) << "\n";
  } else if (v.finite) {
    std::cout << "Finite (" << v.witness->label << ")\n";
  } else {
    std::cout << "Infinite (" << reason_name(*v.reason) << ")\n";
  }
  return v.finite ? kExitFinite : kExitInfinite;
}

int run_truncate(const std::string& type_arg, const std::string& sig_text,
                 std::int64_t total, bool as_json) {
  const auto t = parse_type_arg(type_arg);
  if (!t) {
    std::cerr << "error: unknown type '" << type_arg << "'\n";
    return kExitInvalid;
  }
  const auto sig = parse_signature(lie_type_name(*t) + ":" + sig_text);
  if (!sig) {
    std::cerr << "error: cannot parse signature '" << sig_text << "'\n";
    return kExitInvalid;
  }
  try {
    const auto shape = truncate(*sig, total);
    if (as_json) {
      std::cout << shape_to_json(shape).dump(2) << "\n";
    } else {
      std::cout << "dims";
      for (auto d : shape.dims) std::cout << " " << d;
      std::cout << " (N = " << shape.total << ")\n";
    }
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}

int run_count_double(const std::string& rows_text, const std::string& cols_text,
                     std::size_t bound_p0, bool as_json) {
  const auto rows = parse_int_list(rows_text);
  const auto cols = parse_int_list(cols_text);
  if (!rows || !cols) {
    std::cerr << "error: margins must be comma lists of positive integers\n";
    return kExitInvalid;
  }
  try {
    const auto mp = make_margin_pair(*rows, *cols);
    const mpz_class count = count_double_orbits(mp);
    json out{{"rows", *rows}, {"cols", *cols}, {"count", count.get_str()}};
    if (bound_p0 > 0) out["bound"] = qc_bound(mp, bound_p0).get_str();
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << count.get_str() << "\n";
      if (bound_p0 > 0)
        std::cout << "bound (p0 = " << bound_p0 << "): " << qc_bound(mp, bound_p0).get_str()
                  << "\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}

int run_growth(const std::string& a, const std::string& b, std::int64_t from,
               std::int64_t to, bool as_json) {
  const auto s1 = parse_signature("A:" + a);
  const auto s2 = parse_signature("A:" + b);
  if (!s1 || !s2) {
    std::cerr << "error: growth expects two type-A signatures\n";
    return kExitInvalid;
  }
  if (from > to) {
    std::cerr << "error: empty range\n";
    return kExitInvalid;
  }
  std::vector<std::int64_t> totals;
  for (std::int64_t n = from; n <= to; ++n) totals.push_back(n);
  try {
    const auto seq = orbit_growth_sequence(*s1, *s2, totals);
    const bool growing = detects_growth(seq);
    if (as_json) {
      json counts = json::array();
      for (const auto& c : seq) counts.push_back(c.get_str());
      std::cout << json{{"totals", totals}, {"counts", counts}, {"growth", growing}}.dump(2)
                << "\n";
    } else {
      for (std::size_t i = 0; i < totals.size(); ++i)
        std::cout << "N=" << totals[i] << " s=" << seq[i].get_str() << "\n";
      std::cout << (growing ? "growth detected" : "no growth detected") << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}

int run_enumerate(const std::string& type_arg, int p, std::int64_t total,
                  const std::vector<std::string>& sig_texts, bool as_json) {
  const auto t = parse_type_arg(type_arg);
  if (!t) {
    std::cerr << "error: unknown type '" << type_arg << "'\n";
    return kExitInvalid;
  }
  if (p != 2 && p != 3 && p != 5) {
    std::cerr << "error: p must be 2, 3, or 5\n";
    return kExitInvalid;
  }
  std::vector<TruncatedFlagShape> shapes;
  try {
    for (const auto& s : sig_texts) {
      const auto sig = parse_signature(lie_type_name(*t) + ":" + s);
      if (!sig) {
        std::cerr << "error: cannot parse signature '" << s << "'\n";
        return kExitInvalid;
      }
      shapes.push_back(truncate(*sig, total));
    }
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  try {
    const auto form = standard_form(*t, static_cast<int>(total), p);
    const auto res = enumerate_orbits(shapes, form, p, budget_from_env());
    if (as_json) {
      std::cout << json{{"orbits", res.orbit_count}, {"points", res.point_count}}.dump(2)
                << "\n";
    } else {
      std::cout << res.orbit_count << " orbits on " << res.point_count << " points\n";
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << " (raise FLAGORBITS_BUDGET to override)\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}

void print_report(const verify::SuiteReport& rep) {
  for (const auto& c : rep.cases) {
    std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << rep.suite << ": " << c.id;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
  }
}

int run_verify(const std::string& suite) {
  const std::size_t budget = budget_from_env();
  std::vector<verify::SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "table1") {
    reports.push_back(verify::table1_positive());
    reports.push_back(verify::table1_negative());
  }
  if (all || suite == "crosscheck") reports.push_back(verify::crosscheck());
  if (all || suite == "oracle") reports.push_back(verify::oracle(budget));
  if (all || suite == "bound") reports.push_back(verify::bound());
  if (all || suite == "growth") reports.push_back(verify::growth());
  if (all || suite == "lemma-key") reports.push_back(verify::lemma_key(budget));
  if (all || suite == "sanity") reports.push_back(verify::sanity());
  if (all || suite == "field-independence")
    reports.push_back(verify::field_independence(std::max<std::size_t>(budget, 200'000)));
  if (reports.empty()) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitInvalid;
  }
  bool ok = true;
  for (const auto& r : reports) {
    print_report(r);
    ok = ok && r.all_pass();
  }
  std::cout << (ok ? "all suites passed" : "FAILURES present") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finiteness of orbit counts for products of flag ind-varieties"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string type_arg = "A";
  std::vector<std::string> factors;
  auto* classify_cmd =
      app.add_subcommand("classify", "decide finiteness for a product of flags");
  classify_cmd->add_option("--type", type_arg, "A, B, C, D, or O")->required();
  classify_cmd->add_option("factors", factors, "signatures like 1,inf or chain:omega")
      ->required();

  std::string sig_text;
  std::int64_t total = 0;
  auto* truncate_cmd = app.add_subcommand("truncate", "balanced finite truncation");
  truncate_cmd->add_option("--type", type_arg, "A, B, C, D, or O")->required();
  truncate_cmd->add_option("--total", total, "ambient dimension N")->required();
  truncate_cmd->add_option("signature", sig_text, "block signature")->required();

  std::string rows_text, cols_text;
  std::size_t bound_p0 = 0;
  auto* count_cmd =
      app.add_subcommand("count-double", "exact double-flag orbit count from margins");
  count_cmd->add_option("rows", rows_text, "row margins, e.g. 1,2")->required();
  count_cmd->add_option("cols", cols_text, "column margins, e.g. 1,1,1")->required();
  count_cmd->add_option("--bound", bound_p0, "also print q^C for this 1-based block");

  std::string sig_a, sig_b;
  std::int64_t from = 0, to = 0;
  auto* growth_cmd = app.add_subcommand("growth", "orbit counts across truncation levels");
  growth_cmd->add_option("first", sig_a, "type-A signature")->required();
  growth_cmd->add_option("second", sig_b, "type-A signature")->required();
  growth_cmd->add_option("--from", from, "smallest total")->required();
  growth_cmd->add_option("--to", to, "largest total")->required();

  int p = 2;
  std::vector<std::string> enum_sigs;
  auto* enum_cmd = app.add_subcommand("enumerate", "brute-force orbits over GF(p)");
  enum_cmd->add_option("--type", type_arg, "A, B, C, D, or O")->required();
  enum_cmd->add_option("-p,--prime", p, "field size (2, 3, or 5)")->required();
  enum_cmd->add_option("--total", total, "ambient dimension N")->required();
  enum_cmd->add_option("signatures", enum_sigs, "one signature per factor")->required();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("suite", suite,
                         "all, table1, crosscheck, oracle, bound, growth, lemma-key, "
                         "sanity, or field-independence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (classify_cmd->parsed()) return run_classify(type_arg, factors, as_json);
  if (truncate_cmd->parsed()) return run_truncate(type_arg, sig_text, total, as_json);
  if (count_cmd->parsed()) return run_count_double(rows_text, cols_text, bound_p0, as_json);
  if (growth_cmd->parsed()) return run_growth(sig_a, sig_b, from, to, as_json);
  if (enum_cmd->parsed()) return run_enumerate(type_arg, p, total, enum_sigs, as_json);
  if (verify_cmd->parsed()) return run_verify(suite);
  return kExitInvalid;
}
