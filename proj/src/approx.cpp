#include "mfass/approx.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace mfass {

namespace {

using Int128 = __int128;

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(Int128 num, Int128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr Int128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw std::overflow_error("rational does not fit 64 bits");
  Rational r;
  r.num = static_cast<std::int64_t>(num);
  r.den = static_cast<std::int64_t>(den);
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make_rational(n, d); }

Rational Rational::from_decimal_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("two decimal points in '" + std::string(text) + "'");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    seen_digit = true;
    if (num > (std::numeric_limits<std::int64_t>::max() - 9) / 10 ||
        (seen_dot && den > std::numeric_limits<std::int64_t>::max() / 10))
      throw std::overflow_error("decimal '" + std::string(text) + "' has too many digits");
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

ScalingParams compute_scaling(const Instance& inst, const Rational& epsilon) {
  if (epsilon.num <= 0 || epsilon.num >= epsilon.den)
    throw PreconditionError("epsilon must lie strictly between 0 and 1");
  auto errs = validate_instance(inst);
  if (!errs.empty()) {
    if (static_cast<long long>(inst.jobs.size()) > inst.limit_sum())
      throw InfeasibleError(errs.back());
    throw PreconditionError("invalid instance: " + errs.front());
  }

  ScalingParams params;
  params.epsilon = epsilon;
  long long limit_sum = inst.limit_sum();
  int limit_min = *std::min_element(inst.limits.begin(), inst.limits.end());
  long long forced = static_cast<long long>(inst.jobs.size()) - limit_sum + limit_min;
  params.rho = static_cast<int>(std::max<long long>(0, forced));

  if (params.rho == 0) {
    params.flow_with_rho = max_flow(inst.network);
  } else {
    auto m = max_flow_with_outages(inst, params.rho);
    if (!m) throw std::logic_error("rho <= |J| outages must always be placeable");
    params.flow_with_rho = *m;
  }

  Cap bound = 0;
  for (const Arc& a : inst.network.arcs)
    bound = std::max(bound, std::min(a.capacity, params.flow_with_rho));
  params.cap_bound = bound;

  // L = max{1, eps * B / (m T)}
  Int128 num = static_cast<Int128>(epsilon.num) * bound;
  Int128 den = static_cast<Int128>(epsilon.den) * inst.network.arc_count() * inst.horizon;
  if (den <= 0) throw PreconditionError("scaling requires at least one arc");
  params.scale = num <= den ? Rational{1, 1} : make_rational(num, den);
  return params;
}

Cap scaled_capacity(Cap u, const ScalingParams& params) {
  Cap clamped = std::min(u, params.flow_with_rho);
  if (params.is_identity()) return clamped;
  Int128 v = static_cast<Int128>(clamped) * params.scale.den / params.scale.num;
  return static_cast<Cap>(v);
}

bool FptasCertificate::lower_chain_holds() const {
  // F(y~) >= L * F'(y~), cross-multiplied exactly
  return static_cast<Int128>(actual_total) * scale.den >=
         static_cast<Int128>(scale.num) * scaled_total;
}

std::string FptasCertificate::to_text() const {
  std::ostringstream os;
  os << "certificate (L = " << scale.to_string() << ", eps = " << epsilon.to_string() << ")\n";
  os << "  (1) F(schedule) >= L * F'(schedule): " << actual_total << " >= " << scale.to_string()
     << " * " << scaled_total << (lower_chain_holds() ? "   [holds]" : "   [VIOLATED]") << "\n";
  os << "  (2) F'(schedule) >= F'(optimum): schedule is optimal for the scaled instance\n";
  os << "  (3) L * F'(optimum) >= (1 - eps) * OPT: rounding loses at most eps * B per period\n";
  os << "  => F(schedule) >= (1 - " << epsilon.to_string() << ") * OPT\n";
  return os.str();
}

FptasResult solve_fptas(const Instance& inst, const Rational& epsilon, const SpDpOptions& opts) {
  FptasResult result;
  result.params = compute_scaling(inst, epsilon);

  if (result.params.is_identity()) {
    SolveResult exact = solve_sp_dp(inst, opts);
    result.schedule = std::move(exact.schedule);
    result.report = std::move(exact.report);
    result.certificate = {result.params.scale, result.report.total, result.report.total, epsilon};
    return result;
  }

  Instance scaled = inst;
  for (Arc& a : scaled.network.arcs) a.capacity = scaled_capacity(a.capacity, result.params);
  SolveResult scaled_solution = solve_sp_dp(scaled, opts);

  result.schedule = std::move(scaled_solution.schedule);
  result.report = evaluate(inst, result.schedule);  // re-scored on original capacities
  result.certificate = {result.params.scale, scaled_solution.report.total, result.report.total,
                        epsilon};
  return result;
}

SolveResult solve_ptas_kall(const Instance& inst, const Rational& epsilon,
                            const SpDpOptions& opts) {
  for (int k : inst.limits)
    if (k < static_cast<int>(inst.jobs.size()))
      throw PreconditionError("PTAS requires every per-period limit to cover all jobs");
  if (epsilon.num <= 0 || epsilon.num >= epsilon.den)
    throw PreconditionError("epsilon must lie strictly between 0 and 1");

  // 1/T <= eps: shutting everything at once already achieves (1 - 1/T).
  if (static_cast<Int128>(epsilon.num) * inst.horizon >= epsilon.den) {
    SolveResult result;
    for (ArcId j : inst.jobs) result.schedule.assignment[j] = 1;
    result.report = evaluate(inst, result.schedule);
    return result;
  }
  FptasResult approx = solve_fptas(inst, epsilon, opts);
  return {std::move(approx.schedule), std::move(approx.report)};
}

}  // namespace mfass
