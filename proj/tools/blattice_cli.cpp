// blattice — exact counting for the lattice of signed set partitions.
//
// Subcommands: enumerate, count, series, verify, identities. All output is
// deterministic. Exit codes: 0 success, 1 verification failure, 2 usage
// error, 3 resource bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blattice/analytic_counts.hpp"
#include "blattice/enumeration.hpp"
#include "blattice/exact_counts.hpp"
#include "blattice/identities.hpp"
#include "blattice/interval.hpp"
#include "blattice/numbers.hpp"
#include "blattice/oracle.hpp"
#include "blattice/signed_partition.hpp"

namespace {

using namespace blattice;

struct Config {
  int max_n = kDefaultEnumerationBound;
  long long oracle_budget = 50'000'000;
  long series_max_terms = 2'000'000;
  BigRat series_width = BigRat(1, 4);
};

BigRat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const auto dot = text.find('.');
      if (dot == std::string::npos) return BigRat(BigInt(text));
      const std::string frac = text.substr(dot + 1);
      BigInt den = 1;
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      return BigRat(BigInt(text.substr(0, dot) + frac), den);
    }
    return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("could not parse rational '" + text + "'");
  }
}

void load_config(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "max_n")
      cfg.max_n = std::stoi(value);
    else if (key == "oracle_budget")
      cfg.oracle_budget = std::stoll(value);
    else if (key == "series_max_terms")
      cfg.series_max_terms = std::stol(value);
    else if (key == "series_width")
      cfg.series_width = parse_rational(value);
    else if (!key.empty())
      throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

PartitionShape parse_shape(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("shape must look like 'i0:s1,s2,...' (sizes may be empty)");
  const int i0 = std::stoi(text.substr(0, colon));
  std::vector<int> sizes;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ','))
    if (!item.empty()) sizes.push_back(std::stoi(item));
  int n = i0;
  for (int s : sizes) n += s;
  PartitionShape shape(n, i0, sizes);
  if (!shape.consistent()) throw std::invalid_argument("inconsistent shape '" + text + "'");
  return shape;
}

std::string table_line(const SignedPartition& p) {
  std::string out = "zero={";
  for (size_t i = 0; i < p.zero_block().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.zero_block()[i]);
  }
  out += "} pairs=[";
  for (size_t b = 0; b < p.pair_blocks().size(); ++b) {
    if (b) out += ',';
    out += '{';
    const auto& block = p.pair_blocks()[b];
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  out += ']';
  return out;
}

int run_enumerate(int n, const std::string& universe, bool count_only,
                  const std::string& format, const std::optional<std::string>& shape_text,
                  const Config& cfg) {
  std::vector<SignedPartition> parts;
  if (shape_text) {
    parts = enumerate_by_shape(parse_shape(*shape_text), cfg.max_n);
  } else if (universe == "B") {
    parts = enumerate_b(n, cfg.max_n);
  } else if (universe == "no-zero") {
    parts = enumerate_b_no_zero(n, cfg.max_n);
  } else if (universe == "A") {
    parts = enumerate_a(n, cfg.max_n);
  } else {
    throw std::invalid_argument("universe must be B, no-zero, or A");
  }
  if (count_only) {
    std::cout << parts.size() << "\n";
    return 0;
  }
  for (const SignedPartition& p : parts)
    std::cout << (format == "json" ? p.serialize() : table_line(p)) << "\n";
  return 0;
}

void emit_value(const std::string& op, const BigInt& value, bool json) {
  if (json)
    std::cout << "{\"op\":\"" << op << "\",\"value\":\"" << value.str() << "\"}\n";
  else
    std::cout << value.str() << "\n";
}

int run_count(const std::string& what, int n, int r, int k, int i0, int l,
              const std::optional<std::string>& shape_text, bool json) {
  std::optional<PartitionShape> shape;
  if (shape_text) shape = parse_shape(*shape_text);
  auto need_shape = [&]() -> const PartitionShape& {
    if (!shape) throw std::invalid_argument("count " + what + " needs --shape");
    return *shape;
  };
  BigInt value;
  if (what == "dowling")
    value = dowling_number(n);
  else if (what == "bell")
    value = bell_number(n);
  else if (what == "no-zero")
    value = k >= 0 ? n_no_zero_by_pairs(n, k) : n_no_zero(n);
  else if (what == "shape")
    value = count_of_shape(need_shape());
  else if (what == "nb-pi")
    value = nb_pi(need_shape());
  else if (what == "nb-pi-l")
    value = nb_pi_l(need_shape(), l);
  else if (what == "nd-pi")
    value = nd_pi(need_shape());
  else if (what == "nd-pi-l")
    value = nd_pi_l(need_shape(), l);
  else if (what == "nbr-pairs")
    value = n2b_exact(n);
  else if (what == "nbr-pairs-by")
    value = n2b_exact_by(i0 < 0 ? 0 : i0, k < 0 ? 0 : k, n);
  else if (what == "ndr")
    value = nd_r_exact(n, r);
  else if (what == "nar")
    value = na_r_exact(n, r);
  else if (what == "na-pi")
    value = na_pi(need_shape().pair_sizes);
  else if (what == "stirling2")
    value = stirling2(n, k);
  else if (what == "stirling1")
    value = stirling1_signed(n, k);
  else
    throw std::invalid_argument("unknown count kind '" + what + "'");
  emit_value(what, value, json);
  return 0;
}

int run_series(const std::string& what, int n, int r, int k, int i0,
               const std::optional<std::string>& shape_text, bool json, const Config& cfg) {
  SeriesOptions opt;
  opt.max_terms = cfg.series_max_terms;
  opt.target_width = cfg.series_width;
  SeriesResult res;
  if (what == "dobinski")
    res = dobinski(n, opt);
  else if (what == "benoumhani")
    res = benoumhani_dowling(n, opt);
  else if (what == "nb-pi") {
    if (!shape_text) throw std::invalid_argument("series nb-pi needs --shape");
    res = nb_pi_series(parse_shape(*shape_text), opt);
  } else if (what == "n2b")
    res = n2b_series(n, opt);
  else if (what == "n2b-by")
    res = n2b_series_by(i0 < 0 ? 0 : i0, k < 0 ? 0 : k, n, opt);
  else if (what == "nbr")
    res = nbr_series(n, r, opt);
  else if (what == "nn")
    res = nn_series(n, opt);
  else if (what == "n2d")
    res = n2d_series(n, opt);
  else if (what == "n2d-by")
    res = n2d_series_by(k < 0 ? 0 : k, n, opt);
  else if (what == "ndr")
    res = ndr_series(n, r, opt);
  else if (what == "pittel")
    res = pittel_nar_series(n, r, opt);
  else
    throw std::invalid_argument("unknown series kind '" + what + "'");

  const std::string recovered =
      res.recovered_integer ? res.recovered_integer->str() : "UNRESOLVED";
  if (json) {
    std::cout << "{\"op\":\"" << what << "\",\"lo\":\"" << decimal_string(res.value.lo, 15)
              << "\",\"hi\":\"" << decimal_string(res.value.hi, 15) << "\",\"terms\":"
              << res.terms_used << ",\"recovered\":\"" << recovered << "\"}\n";
  } else {
    std::cout << "[" << decimal_string(res.value.lo, 15) << ", "
              << decimal_string(res.value.hi, 15) << "]  terms=" << res.terms_used
              << "  recovered=" << recovered << "\n";
  }
  return 0;
}

struct VerifyRunner {
  int failures = 0;
  void row(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

int run_verify(const std::string& grid, const Config& cfg) {
  const bool tiny = grid == "tiny";
  const int seq_n = tiny ? 3 : 4;
  const int pi_n = tiny ? 2 : 3;
  const int tuple_n = tiny ? 2 : 3;
  const int egf_order = tiny ? 4 : 8;
  OracleOptions oracle_opt;
  oracle_opt.max_work = cfg.oracle_budget;
  VerifyRunner v;

  for (int n = 0; n <= seq_n; ++n) {
    v.row("enumeration |Pi_" + std::to_string(n) + "^B| = formula",
          BigInt(enumerate_b(n, cfg.max_n).size()) == dowling_number(n));
    v.row("enumeration zero-free count n=" + std::to_string(n),
          BigInt(enumerate_b_no_zero(n, cfg.max_n).size()) == n_no_zero(n));
    bool shapes_ok = true;
    for (const PartitionShape& s : all_shapes(n))
      if (BigInt(enumerate_by_shape(s, cfg.max_n).size()) != count_of_shape(s))
        shapes_ok = false;
    v.row("shape counts n=" + std::to_string(n), shapes_ok);
  }

  for (int n = 0; n <= pi_n; ++n) {
    bool per_pi_ok = true;
    std::string detail;
    for (const SignedPartition& pi : enumerate_b(n, cfg.max_n)) {
      const PartitionShape s = pi.shape();
      if (nb_pi(s) != oracle_count_partners(pi, PartnerFilter::Any, -1, oracle_opt))
        per_pi_ok = false;
      for (int l = 0; l <= n; ++l)
        if (nb_pi_l(s, l) !=
            oracle_count_partners(pi, PartnerFilter::PairCount, l, oracle_opt))
          per_pi_ok = false;
      if (!pi.has_zero_block()) {
        if (nd_pi(s) != oracle_count_partners(pi, PartnerFilter::NoZero, -1, oracle_opt))
          per_pi_ok = false;
        for (int l = 0; l <= n; ++l)
          if (nd_pi_l(s, l) !=
              oracle_count_partners(pi, PartnerFilter::NoZeroPairCount, l, oracle_opt))
            per_pi_ok = false;
      }
    }
    v.row("per-partition formulas vs oracle n=" + std::to_string(n), per_pi_ok, detail);
  }

  SeriesOptions sopt;
  sopt.max_terms = cfg.series_max_terms;
  sopt.target_width = cfg.series_width;
  for (int n = 0; n <= tuple_n; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const BigInt ob = oracle_count_tuples(n, r, Universe::B, oracle_opt);
      const BigInt od = oracle_count_tuples(n, r, Universe::NoZero, oracle_opt);
      const BigInt oa = oracle_count_tuples(n, r, Universe::TypeA, oracle_opt);
      const std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r);
      if (r == 2) v.row("pair count vs oracle" + tag, n2b_exact(n) == ob);
      const auto snb = nbr_series(n, r, sopt);
      v.row("signed tuple series vs oracle" + tag,
            snb.recovered_integer && *snb.recovered_integer == ob);
      v.row("zero-free tuples vs oracle" + tag, nd_r_exact(n, r) == od);
      v.row("ordinary tuples vs oracle" + tag, na_r_exact(n, r) == oa);
      const auto spd = ndr_series(n, r, sopt);
      v.row("zero-free tuple series" + tag,
            spd.recovered_integer && *spd.recovered_integer == od);
      const auto spa = pittel_nar_series(n, r, sopt);
      v.row("ordinary tuple series" + tag,
            spa.recovered_integer && *spa.recovered_integer == oa);
    }
  }

  for (int n = 0; n <= seq_n; ++n) {
    const auto dob = dobinski(n, sopt);
    const auto ben = benoumhani_dowling(n, sopt);
    const auto nns = nn_series(n, sopt);
    v.row("bell series n=" + std::to_string(n),
          dob.recovered_integer && *dob.recovered_integer == bell_number(n));
    v.row("dowling series n=" + std::to_string(n),
          ben.recovered_integer && *ben.recovered_integer == dowling_number(n));
    v.row("zero-free series n=" + std::to_string(n),
          nns.recovered_integer && *nns.recovered_integer == n_no_zero(n));
    bool per_shape = true;
    for (const PartitionShape& s : all_shapes(n)) {
      const auto r = nb_pi_series(s, sopt);
      if (!r.recovered_integer || *r.recovered_integer != nb_pi(s)) per_shape = false;
    }
    v.row("partner series per shape n=" + std::to_string(n), per_shape);
  }

  for (int r = 2; r <= 3; ++r) {
    v.row("egf compose ordinary r=" + std::to_string(r),
          check_canfield_a(r, egf_order).passed);
    v.row("egf compose zero-free r=" + std::to_string(r),
          check_canfield_d(r, egf_order).passed);
  }
  const BigRat eps = BigRat(1, 100000000);
  for (int l = 0; l <= 5; ++l)
    v.row("half-e identity l=" + std::to_string(l), check_half_e_identity(l, eps).passed);
  for (int n = 0; n <= (tiny ? 4 : 8); ++n) {
    bool ok = true;
    for (const BigRat& x : {BigRat(1, 2), BigRat(1), BigRat(2)})
      ok = ok && check_bell_polynomial_identity(n, x, eps).passed;
    v.row("bell polynomial n=" + std::to_string(n), ok);
  }

  for (int n = 0; n <= (tiny ? 2 : 3); ++n) {
    const auto rep = oracle_meet_closure_check(n, oracle_opt);
    v.row("lattice axioms n=" + std::to_string(n), rep.passed(),
          rep.violations.empty() ? "" : rep.violations.front());
  }

  std::cout << (v.failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << " (" << v.failures
            << " failing checks)\n";
  return v.failures == 0 ? 0 : 1;
}

int run_identities(int order, int wilf_n, const BigRat& eps) {
  VerifyRunner v;
  for (int r = 2; r <= 3; ++r) {
    const auto a = check_canfield_a(r, order);
    v.row(a.name, a.passed, a.details.empty() ? "" : a.details.front());
    const auto d = check_canfield_d(r, order);
    v.row(d.name, d.passed, d.details.empty() ? "" : d.details.front());
  }
  const auto w = check_wilf_consistency(wilf_n);
  v.row(w.name, w.passed, w.details.empty() ? "" : w.details.front());
  for (int l = 0; l <= 5; ++l) {
    const auto h = check_half_e_identity(l, eps);
    v.row(h.name, h.passed);
  }
  for (int n = 0; n <= 8; ++n)
    for (const BigRat& x : {BigRat(1, 2), BigRat(1), BigRat(2)}) {
      const auto b = check_bell_polynomial_identity(n, x, eps);
      v.row(b.name + " x=" + decimal_string(x, 2), b.passed);
    }
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting toolkit for the lattice of signed set partitions"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  int n = 0, r = 2, k = -1, i0 = -1, l = 0;
  std::string universe = "B", format = "table", what, grid = "default";
  bool count_only = false, json = false;
  std::optional<std::string> shape_text;
  std::string width_text;
  long max_terms = -1;
  int order = 8, wilf_n = 4;
  std::string eps_text = "1/100000000";
  int max_n_flag = -1;
  long long budget_flag = -1;

  auto* enumerate = app.add_subcommand("enumerate", "list partitions");
  enumerate->add_option("-n", n, "ground-set size")->required();
  enumerate->add_option("-u,--universe", universe, "B | no-zero | A");
  enumerate->add_option("--shape", shape_text, "restrict to one shape 'i0:s1,s2,...'");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--format", format, "table | json");
  enumerate->add_option("--max-n", max_n_flag, "enumeration bound override");

  auto* count = app.add_subcommand("count", "exact counting formulas");
  count->add_option("what", what, "dowling|bell|no-zero|shape|nb-pi|nb-pi-l|nd-pi|nd-pi-l|"
                                  "nbr-pairs|nbr-pairs-by|ndr|nar|na-pi|stirling2|stirling1")
      ->required();
  count->add_option("-n", n, "ground-set size");
  count->add_option("-r", r, "tuple length");
  count->add_option("-k", k, "pair count / second index");
  count->add_option("--i0", i0, "zero-block half-size");
  count->add_option("-l", l, "partner pair count");
  count->add_option("--shape", shape_text, "shape 'i0:s1,s2,...'");
  count->add_flag("--json", json, "JSON envelope");

  auto* series = app.add_subcommand("series", "rigorous series evaluation");
  series->add_option("what", what, "dobinski|benoumhani|nb-pi|n2b|n2b-by|nbr|nn|n2d|n2d-by|"
                                   "ndr|pittel")
      ->required();
  series->add_option("-n", n, "ground-set size");
  series->add_option("-r", r, "tuple length");
  series->add_option("-k", k, "pair count");
  series->add_option("--i0", i0, "zero-block half-size");
  series->add_option("--shape", shape_text, "shape 'i0:s1,s2,...'");
  series->add_option("--max-terms", max_terms, "term budget");
  series->add_option("--width", width_text, "target enclosure width, e.g. 1/4");
  series->add_flag("--json", json, "JSON envelope");

  auto* verify = app.add_subcommand("verify", "formula-vs-oracle grid plus identities");
  verify->add_option("--grid", grid, "default | tiny");
  verify->add_option("--budget", budget_flag, "oracle work budget");
  verify->add_option("--max-n", max_n_flag, "enumeration bound override");

  auto* identities = app.add_subcommand("identities", "generating-function identity checks");
  identities->add_option("--order", order, "series truncation order");
  identities->add_option("--wilf-n", wilf_n, "cross-check bound");
  identities->add_option("--eps", eps_text, "tolerance for analytic identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (const char* env = std::getenv("BLATTICE_MAX_N")) cfg.max_n = std::atoi(env);
    if (max_n_flag >= 0) cfg.max_n = max_n_flag;
    if (budget_flag >= 0) cfg.oracle_budget = budget_flag;
    if (max_terms >= 0) cfg.series_max_terms = max_terms;
    if (!width_text.empty()) cfg.series_width = parse_rational(width_text);

    if (enumerate->parsed())
      return run_enumerate(n, universe, count_only, format, shape_text, cfg);
    if (count->parsed()) return run_count(what, n, r, k, i0, l, shape_text, json);
    if (series->parsed()) return run_series(what, n, r, k, i0, shape_text, json, cfg);
    if (verify->parsed()) return run_verify(grid, cfg);
    if (identities->parsed())
      return run_identities(order, wilf_n, parse_rational(eps_text));
  } catch (const BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
