#include "milnor/katz.hpp"

#include "milnor/decompose.hpp"
#include "milnor/hodge.hpp"

#include <sstream>

namespace milnor {

namespace {

unsigned mod8(const BigInt& v) {
  BigInt r = v % 8;
  if (r < 0) r += 8;
  return r.convert_to<unsigned>();
}

}  // namespace

bool Report::falsified() const { return !falsifying_primes().empty(); }

std::vector<std::uint32_t> Report::falsifying_primes() const {
  std::vector<std::uint32_t> out;
  for (const auto& v : verdicts) {
    if (!v.match) out.push_back(v.p);
  }
  return out;
}

std::string Report::conclusion() const {
  const auto bad = falsifying_primes();
  if (bad.empty()) return "consistent-so-far";
  std::ostringstream os;
  os << "falsified at {";
  for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? "," : "") << bad[i];
  os << '}';
  return os.str();
}

Report polynomial_count_check(const std::vector<CountResult>& counts, const IntPolynomial& candidate,
                              const std::set<BigInt>& bad) {
  Report r;
  r.candidate = candidate;
  for (const auto& c : counts) {
    if (bad.count(BigInt(c.p))) {
      throw PreconditionError("count at bad prime " + std::to_string(c.p) + " cannot test polynomial count");
    }
    Verdict v;
    v.p = c.p;
    v.counted = c.value;
    v.predicted = candidate(BigInt(c.p));
    v.match = v.counted == v.predicted;
    v.counted_mod8 = mod8(v.counted);
    v.predicted_mod8 = mod8(v.predicted);
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

IntPolynomial a11_candidate() { return katz_candidate(milnor_fiber_table(product_of_generic(1, 1))); }

bool mod8_identity_holds() {
  const IntPolynomial lhs = a11_candidate().compose(IntPolynomial{3, 4});
  const IntPolynomial rhs = IntPolynomial{8} * IntPolynomial{1, 2} * IntPolynomial{15, 129, 584, 1632, 2752, 2560, 1024};
  if (lhs != rhs) return false;
  // Divisibility by 8 of every coefficient makes P_F(4k+3) = 0 mod 8 for all k.
  for (const BigInt& c : lhs.coefficients()) {
    if (c % 8 != 0) return false;
  }
  return true;
}

Mod8Obstruction mod8_obstruction(std::uint32_t p, const CountOptions& opts) {
  if (p % 12 != 11) throw PreconditionError("mod 8 obstruction needs p = 11 mod 12, got " + std::to_string(p));
  const PrimeField field(p);
  Mod8Obstruction o;
  o.p = p;
  o.k = BigInt((p - 3) / 4);
  o.counts = symmetric_fiber_count(field, opts);
  o.predicted = a11_candidate()(BigInt(p));
  const IntPolynomial closed_form =
      IntPolynomial{8} * IntPolynomial{1, 2} * IntPolynomial{15, 129, 584, 1632, 2752, 2560, 1024};
  o.predicted_divisible_by_8 = mod8_identity_holds() && closed_form(o.k) == o.predicted && mod8(o.predicted) == 0;
  o.fibers_divisible_by_4 = o.counts.n1p % 4 == 0 && o.counts.n2p % 4 == 0;
  // A(p) = 2(2k+1)(2 + n1'n2' - 3n1' - 3n2') mod 8; the bracket is 2 mod 4
  // when both fiber counts vanish mod 4.
  const BigInt n1(o.counts.n1p), n2(o.counts.n2p);
  const BigInt reduced = BigInt(2) * (2 * o.k + 1) * (2 + n1 * n2 - 3 * n1 - 3 * n2);
  o.count_not_divisible_by_8 = mod8(o.counts.total) != 0 && mod8(reduced) == mod8(o.counts.total);
  return o;
}

std::vector<std::uint32_t> rk2_primes() { return {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}; }

std::vector<Rk2Row> reproduce_rk2(const std::vector<std::uint32_t>& primes, const CountOptions& opts) {
  const CentralArrangement a = product_of_generic(1, 1);
  const Decomposition dec = irreducible_decomposition(a);
  const IntPolynomial candidate = a11_candidate();
  std::vector<Rk2Row> rows;
  for (std::uint32_t p : primes) {
    const PrimeField field(p);
    Rk2Row row;
    row.p = p;
    row.count = count_milnor_fiber_factored(dec, field, FiberBackend::automatic, opts).value;
    row.predicted = candidate(BigInt(p));
    row.match = row.count == row.predicted;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_verdicts(const Report& report) {
  std::ostringstream os;
  os << "p count predicted match count_mod8 predicted_mod8\n";
  for (const auto& v : report.verdicts) {
    os << v.p << ' ' << v.counted << ' ' << v.predicted << ' ' << (v.match ? "true" : "false") << ' '
       << v.counted_mod8 << ' ' << v.predicted_mod8 << '\n';
  }
  return os.str();
}

}  // namespace milnor
