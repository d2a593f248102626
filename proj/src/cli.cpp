#include "milnor/cli.hpp"

#include "milnor/arrangement.hpp"
#include "milnor/decompose.hpp"
#include "milnor/error.hpp"
#include "milnor/ffcount.hpp"
#include "milnor/hodge.hpp"
#include "milnor/katz.hpp"
#include "milnor/lattice.hpp"
#include "milnor/spectrum2d.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

namespace milnor::cli {

namespace {

const char* kBudgetEnv = "MILNOR_BUDGET";

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

// [0..3] for a contiguous run, [0,2..4] otherwise.
std::string block_text(const std::vector<Index>& block) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < block.size();) {
    std::size_t j = i;
    while (j + 1 < block.size() && block[j + 1] == block[j] + 1) ++j;
    if (i) os << ',';
    os << block[i];
    if (j > i) os << ".." << block[j];
    i = j + 1;
  }
  os << ']';
  return os.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string(kBudgetEnv) + " is not an integer: '" + env + "'");
    }
  }
  return CountOptions{}.budget;
}

struct Settings {
  std::string input;
  unsigned prime = 0;
  std::string primes;
  std::string method = "fast";
  std::uint64_t budget = 0;
  unsigned threads = 1;
  bool expect_polynomial_count = false;
  std::string what;
};

void add_count_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--budget", s.budget, "maximum field evaluations per count (env " + std::string(kBudgetEnv) + ")");
  cmd->add_option("--threads", s.threads, "worker threads for the counting kernels")->check(CLI::Range(1u, 256u));
}

CountOptions options_of(const Settings& s) {
  CountOptions o;
  o.budget = s.budget ? s.budget : default_budget();
  o.threads = s.threads;
  return o;
}

CountResult count_with(const CentralArrangement& a, const PrimeField& field, CountMethod method,
                       const CountOptions& opts) {
  switch (method) {
    case CountMethod::brute: return count_milnor_fiber_bruteforce(a, field, opts);
    case CountMethod::factored:
      return count_milnor_fiber_factored(irreducible_decomposition(a), field, FiberBackend::brute, opts);
    case CountMethod::fast:
      return count_milnor_fiber_factored(irreducible_decomposition(a), field, FiberBackend::automatic, opts);
  }
  throw PreconditionError("unknown method");
}

void cmd_decompose(const Settings& s, std::ostream& out) {
  const CentralArrangement a = resolve_arrangement(s.input);
  const Decomposition dec = irreducible_decomposition(a);
  const TrivialityWitness w = is_monodromy_trivial(a);
  out << "q=" << dec.q() << " blocks=";
  for (const auto& b : dec.blocks) out << block_text(b);
  out << " d=" << tuple_text(dec.factor_sizes) << " d0=" << dec.gcd << " trivial=" << bool_text(w.trivial) << '\n';
  out << "chi(M)=" << w.euler_characteristic << " stv_reducible=" << bool_text(w.stv_reducible) << '\n';
}

void cmd_monodromy(const Settings& s, std::ostream& out) {
  const TrivialityWitness w = is_monodromy_trivial(resolve_arrangement(s.input));
  out << "order=" << w.d0 << " trivial=" << bool_text(w.trivial) << '\n';
  out << "q=" << w.q << " d=" << tuple_text(w.factor_sizes) << " d0=" << w.d0 << '\n';
  out << "chi(M)=" << w.euler_characteristic << " stv_reducible=" << bool_text(w.stv_reducible) << '\n';
}

void cmd_charpoly(const Settings& s, std::ostream& out) {
  const IntersectionLattice lattice = build_lattice(resolve_arrangement(s.input));
  out << "chi_A(t): " << characteristic_polynomial(lattice) << '\n';
  out << "P_M(t): " << projective_count_polynomial(lattice) << '\n';
  out << "chi(M): " << projective_euler_characteristic(lattice) << '\n';
}

void cmd_spectrum(const Settings& s, std::ostream& out) {
  const CentralArrangement a = resolve_arrangement(s.input);
  const SpectrumTable table = spectrum_unit_interval(a);
  for (Index j = 1; j < table.degree; ++j) out << j << '/' << table.degree << ' ' << table.at(j) << '\n';
  const LineArrangementReport r = line_arrangement_report(a);
  out << "T1 hodge_trivial=" << bool_text(r.trivial_monodromy_hodge) << " reducible=" << bool_text(r.reducible)
      << " trivial_monodromy=" << bool_text(r.trivial_monodromy)
      << " spectrum_vanishes=" << bool_text(r.spectrum_vanishes) << " agree=" << bool_text(r.all_agree()) << '\n';
}

void cmd_hodge(const Settings& s, std::ostream& out) {
  const CentralArrangement a = resolve_arrangement(s.input);
  const CohomologyTable table = milnor_fiber_table(a);
  const BigInt chi = projective_euler_characteristic(build_lattice(a));
  out << "dim=" << table.dimension() << " d0=" << table.modulus() << '\n';
  out << table.to_string();
  const bool tate = tate_check(table);
  out << "tate=" << bool_text(tate) << '\n';
  if (tate) {
    out << "HD(t): " << e_polynomial(table) << '\n';
    out << "katz_candidate: " << katz_candidate(table) << '\n';
  } else {
    out << "HD(t): undefined (untyped classes)\n";
  }
  out << "zeta_check=" << bool_text(zeta_check(table, chi)) << " chi=" << chi << '\n';
}

void cmd_count(const Settings& s, std::ostream& out, std::ostream& err) {
  const CentralArrangement a = resolve_arrangement(s.input);
  const CountMethod method = parse_count_method(s.method);
  const CountOptions opts = options_of(s);
  if ((s.prime != 0) == !s.primes.empty()) throw CLI::ValidationError("count", "give exactly one of --prime, --primes");
  if (s.prime) {
    const PrimeField field(s.prime);
    out << "p=" << s.prime << " method=" << to_string(method) << " count=" << count_with(a, field, method, opts).value
        << '\n';
    return;
  }
  const auto bad = bad_primes(a);
  for (unsigned p : parse_prime_list(s.primes)) {
    if (bad.count(BigInt(p))) {
      err << "skipping p=" << p << ": bad prime\n";
      continue;
    }
    const PrimeField field(p);
    out << "p=" << p << " method=" << to_string(method) << " count=" << count_with(a, field, method, opts).value
        << '\n';
  }
}

int cmd_katz(const Settings& s, std::ostream& out, std::ostream& err) {
  const CentralArrangement a = resolve_arrangement(s.input);
  const CohomologyTable table = milnor_fiber_table(a);
  if (!tate_check(table)) throw PreconditionError("Milnor fiber is not known to be Tate; no Katz candidate");
  const IntPolynomial candidate = katz_candidate(table);
  const CountMethod method = parse_count_method(s.method);
  const CountOptions opts = options_of(s);
  const auto bad = bad_primes(a);
  std::vector<CountResult> counts;
  for (unsigned p : parse_prime_list(s.primes)) {
    if (bad.count(BigInt(p))) {
      err << "skipping p=" << p << ": bad prime\n";
      continue;
    }
    counts.push_back(count_with(a, PrimeField(p), method, opts));
  }
  const Report report = polynomial_count_check(counts, candidate, bad);
  out << "candidate: " << candidate << '\n';
  out << format_verdicts(report);
  out << "conclusion: " << report.conclusion() << '\n';
  return s.expect_polynomial_count && report.falsified() ? kFalsified : kOk;
}

void cmd_reproduce(const Settings& s, std::ostream& out) {
  if (s.what != "rk2") throw CLI::ValidationError("reproduce", "unknown table '" + s.what + "' (expected rk2)");
  std::vector<std::uint32_t> primes = rk2_primes();
  if (!s.primes.empty()) {
    primes.clear();
    for (unsigned p : parse_prime_list(s.primes)) primes.push_back(p);
  }
  out << "p count predicted match count_mod8 predicted_mod8\n";
  for (const auto& row : reproduce_rk2(primes, options_of(s))) {
    out << row.p << ' ' << row.count << ' ' << row.predicted << ' ' << bool_text(row.match) << ' '
        << BigInt(row.count % 8) << ' ' << BigInt(row.predicted % 8) << '\n';
  }
}

}  // namespace

std::vector<unsigned> parse_prime_list(const std::string& text) {
  static const std::regex range_re(R"(\s*([0-9]+)\s*\.\.\s*([0-9]+)\s*)");
  static const std::regex single_re(R"(\s*([0-9]+)\s*)");
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (std::regex_match(item, m, range_re)) {
      const unsigned long lo = std::stoul(m[1]), hi = std::stoul(m[2]);
      if (hi >= (1ul << 24)) throw PreconditionError("prime range too large: " + item);
      for (unsigned long p = lo; p <= hi; ++p) {
        if (is_prime(p)) out.push_back(static_cast<unsigned>(p));
      }
    } else if (std::regex_match(item, m, single_re)) {
      const unsigned long p = std::stoul(m[1]);
      if (p >= (1ul << 24) || !is_prime(p)) throw PreconditionError("'" + item + "' is not a supported prime");
      out.push_back(static_cast<unsigned>(p));
    } else {
      throw PreconditionError("cannot parse prime list item '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw PreconditionError("prime list '" + text + "' is empty");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy, Hodge data and finite-field point counts of central hyperplane arrangements"};
  app.name("milnor");
  app.require_subcommand(1, 1);
  Settings s;
  const std::string input_help = "arrangement file, or @g2 @g4 @a11 @boolean:n @g:n @auv:u,v";

  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition and monodromy order");
  auto* monodromy = app.add_subcommand("monodromy", "monodromy order and triviality witness");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic and projective count polynomials");
  auto* spectrum = app.add_subcommand("spectrum", "spectrum on (0,1) of a line arrangement");
  auto* hodge = app.add_subcommand("hodge", "Milnor fiber eigenspace cohomology and E-polynomial");
  for (auto* cmd : {decompose, monodromy, charpoly, spectrum, hodge}) {
    cmd->add_option("input", s.input, input_help)->required();
  }

  auto* count = app.add_subcommand("count", "points of the Milnor fiber Q = 1 over F_p");
  count->add_option("input", s.input, input_help)->required();
  count->add_option("--prime", s.prime, "single prime");
  count->add_option("--primes", s.primes, "batch: list or range a..b; bad primes are skipped");
  count->add_option("--method", s.method, "brute | factored | fast")
      ->check(CLI::IsMember({"brute", "factored", "fast"}));
  add_count_flags(count, s);

  auto* katz = app.add_subcommand("katz", "compare point counts with the Katz candidate polynomial");
  katz->add_option("input", s.input, input_help)->required();
  katz->add_option("--primes", s.primes, "list or range a..b")->required();
  katz->add_option("--method", s.method, "brute | factored | fast")
      ->check(CLI::IsMember({"brute", "factored", "fast"}));
  katz->add_flag("--expect-polynomial-count", s.expect_polynomial_count, "exit 1 when some prime falsifies");
  add_count_flags(katz, s);

  auto* reproduce = app.add_subcommand("reproduce", "regenerate a published table");
  reproduce->add_option("table", s.what, "rk2")->required();
  reproduce->add_option("--primes", s.primes, "restrict to these primes");
  add_count_flags(reproduce, s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (decompose->parsed()) cmd_decompose(s, out);
    if (monodromy->parsed()) cmd_monodromy(s, out);
    if (charpoly->parsed()) cmd_charpoly(s, out);
    if (spectrum->parsed()) cmd_spectrum(s, out);
    if (hodge->parsed()) cmd_hodge(s, out);
    if (count->parsed()) cmd_count(s, out, err);
    if (reproduce->parsed()) cmd_reproduce(s, out);
    if (katz->parsed()) return cmd_katz(s, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

}  // namespace milnor::cli
