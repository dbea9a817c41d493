#pragma once

#include <optional>
#include <vector>

#include "chahn/asymptotics.hpp"
#include "chahn/params.hpp"
#include "chahn/scaled_value.hpp"

namespace chahn::harness {

using asymptotics::Side;

enum class RowKind { Convergence, Consistency, Orthogonality, ZeroAccuracy };

struct ReportRow {
  RowKind kind = RowKind::Convergence;
  int n = 0;
  /// t, s, or x depending on the table; for orthogonality rows the second
  /// degree m is stored in index.
  double point = 0.0;
  ScaledValue exact;
  ScaledValue approx;
  double rel_error = 0.0;
  std::optional<double> empirical_order;
  int index = 0;
  Side side = Side::Plus;
  /// Zero tables only: |refined - estimate| nu^{2/3}.
  std::optional<double> scaled_deviation;
};

struct QuadratureConfig {
  double initial_step = 0.25;
  /// Stop once one halving moves every normalized entry by less than this.
  double target = 1e-10;
  /// Give up (QuadratureNotConverged) if the last change is still above this.
  double failure = 1e-8;
  int max_halvings = 8;
  /// Half-length of the integration interval; 0 means max(50, 4 max_n).
  double half_length = 0.0;
};

/// (1/2pi) int pi_m pi_n w dx for 0 <= m, n <= max_n by the trapezoid rule.
std::vector<std::vector<double>> gram_matrix(int max_n, const Params& p, const QuadratureConfig& quad = {});

/// |G_mn - delta_mn h_n| / sqrt(h_m h_n) from a Gram matrix.
double normalized_defect(const std::vector<std::vector<double>>& gram, int m, int n, const Params& p);

double orthogonality_defect(int m, int n, const Params& p, const QuadratureConfig& quad = {});

/// One Orthogonality row per (m, n), m <= n <= max_n.
std::vector<ReportRow> orthogonality_report(int max_n, const Params& p, const QuadratureConfig& quad = {});

enum class Regime { Outer, Osc, Uniform, Plancherel };

/// Exact against asymptotic per n. Osc errors are normalized by the envelope
/// and maximized over one local period around t.
std::vector<ReportRow> convergence_table(Regime regime, double point, const std::vector<int>& ns,
                                         const Params& p, Side side = Side::Plus,
                                         const asymptotics::Thresholds& th = {});

/// Uniform expansion against the outer formula multiplied by w^{1/2}/K_n at
/// x = nu t.
std::vector<ReportRow> consistency_report(int n, const std::vector<double>& ts, const Params& p,
                                          const asymptotics::Thresholds& th = {});

/// Refined zeros against the Airy estimates for k = 1..k_max.
std::vector<ReportRow> zero_accuracy_report(const std::vector<int>& ns, int k_max, const Params& p,
                                            Side side = Side::Plus);

/// Envelope-normalized oscillatory error at t, maximized over one local period.
double osc_window_error(int n, double t, Side side, const Params& p, const asymptotics::Thresholds& th = {});

}  // namespace chahn::harness
