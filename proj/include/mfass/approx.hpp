#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mfass/model.hpp"
#include "mfass/oracle.hpp"
#include "mfass/spdp.hpp"

namespace mfass {

// Exact nonnegative rational; keeps the scaling arithmetic free of floating
// point so the floor operations in the guarantee proofs are exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  static Rational from_decimal_string(std::string_view text);  // "0.25" -> 1/4

  bool operator==(const Rational&) const = default;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

struct ScalingParams {
  int rho = 0;           // outages forced into the fullest period
  Cap flow_with_rho = 0; // M: max flow with rho outages
  Cap cap_bound = 0;     // B: max capacity after clamping to M
  Rational scale{1, 1};  // L = max{1, eps*B/(mT)}
  Rational epsilon{0, 1};

  bool is_identity() const { return scale.num == scale.den; }
};

// rho = max{0, |J| - sum K_i + min K_i}; M via the rho-outage DP; capacities
// clamped to min(u_a, M) before B and L are derived.
ScalingParams compute_scaling(const Instance& inst, const Rational& epsilon);

Cap scaled_capacity(Cap u, const ScalingParams& params);  // floor(min(u, M) / L)

struct FptasCertificate {
  Rational scale;
  Cap scaled_total = 0;  // F'(y~), optimum of the scaled instance
  Cap actual_total = 0;  // F(y~), schedule re-scored on original capacities
  Rational epsilon;

  bool lower_chain_holds() const;  // F(y~) >= L * F'(y~), exact
  std::string to_text() const;     // three labeled inequalities with values
};

struct FptasResult {
  Schedule schedule;
  ThroughputReport report;  // on original capacities
  FptasCertificate certificate;
  ScalingParams params;
};

// Scaling FPTAS for series-parallel instances: guarantee
// F(y~) >= (1-eps) * OPT. With L = 1 this is exactly solve_sp_dp.
FptasResult solve_fptas(const Instance& inst, const Rational& epsilon,
                        const SpDpOptions& opts = {});

// PTAS for K_i >= |J|: if 1/T <= eps schedule everything in period 1,
// otherwise delegate to the FPTAS.
SolveResult solve_ptas_kall(const Instance& inst, const Rational& epsilon,
                            const SpDpOptions& opts = {});

}  // namespace mfass
