#include "chahn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chahn/error.hpp"
#include "chahn/polynomial.hpp"
#include "chahn/zeros.hpp"

namespace chahn::harness {

namespace {

using std::numbers::pi;

void require_real(const Params& p, const char* where) {
  if (!p.real_orthogonal()) {
    throw Error(ErrorCode::WrongClass, std::string(where) + ": needs real-orthogonal parameters");
  }
}

// Adds f(x) pi_m(x) pi_n(x) w(x) / (2 pi) into acc for every node of the grid
// x = offset + j h, |x| <= L.
void accumulate(std::vector<std::vector<double>>& acc, int max_n, double offset, double h, double L,
                const Params& p) {
  const long long jmax = static_cast<long long>(std::floor((L - offset) / h));
  const long long jmin = -static_cast<long long>(std::floor((L + offset) / h));
  for (long long j = jmin; j <= jmax; ++j) {
    const double x = offset + static_cast<double>(j) * h;
    const ScaledValue w = weight(x, p);
    const std::vector<ScaledValue> seq = monic_sequence(max_n, x, p);
    for (int m = 0; m <= max_n; ++m) {
      const ScaledValue wm = w * seq[m];
      for (int n = m; n <= max_n; ++n) acc[m][n] += (wm * seq[n]).real() * h / (2.0 * pi);
    }
  }
}

double order_between(double err_prev, double err, int n_prev, int n) {
  return std::log(err_prev / err) / std::log(static_cast<double>(n) / n_prev);
}

void attach_orders(std::vector<ReportRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n == 2 * rows[i - 1].n && rows[i].rel_error > 0.0 && rows[i - 1].rel_error > 0.0) {
      rows[i].empirical_order = order_between(rows[i - 1].rel_error, rows[i].rel_error, rows[i - 1].n, rows[i].n);
    }
  }
}

ScaledValue exact_normalized(int n, Complex x, const Params& p) { return normalized_monic(n, x, p); }

}  // namespace

std::vector<std::vector<double>> gram_matrix(int max_n, const Params& p, const QuadratureConfig& quad) {
  require_real(p, "gram_matrix");
  if (max_n < 0) throw Error(ErrorCode::DomainError, "gram_matrix: negative degree");
  const double L = quad.half_length > 0.0 ? quad.half_length : std::max(50.0, 4.0 * max_n);

  using Matrix = std::vector<std::vector<double>>;
  auto sym = [max_n](const Matrix& sums, double scale) {
    Matrix g(max_n + 1, std::vector<double>(max_n + 1, 0.0));
    for (int m = 0; m <= max_n; ++m)
      for (int n = m; n <= max_n; ++n) g[m][n] = g[n][m] = sums[m][n] * scale;
    return g;
  };
  // Sums are accumulated with step h0 and rescaled by h / h0 as nodes are added.
  double h = quad.initial_step;
  Matrix sums(max_n + 1, std::vector<double>(max_n + 1, 0.0));
  accumulate(sums, max_n, 0.0, h, L, p);
  Matrix current = sym(sums, 1.0);

  std::vector<double> scale(max_n + 1);
  for (int n = 0; n <= max_n; ++n) scale[n] = std::sqrt(magnitude(monic_norm(n, p)));

  double change = 0.0;
  for (int halving = 0; halving < quad.max_halvings; ++halving) {
    // Midpoints of the current grid; the sum over all nodes times h/2 is the
    // refined trapezoid value.
    Matrix mid(max_n + 1, std::vector<double>(max_n + 1, 0.0));
    accumulate(mid, max_n, h / 2.0, h, L, p);
    for (int m = 0; m <= max_n; ++m)
      for (int n = m; n <= max_n; ++n) sums[m][n] = 0.5 * (sums[m][n] + mid[m][n]);
    h /= 2.0;
    Matrix next = sym(sums, 1.0);
    change = 0.0;
    for (int m = 0; m <= max_n; ++m)
      for (int n = 0; n <= max_n; ++n)
        change = std::max(change, std::abs(next[m][n] - current[m][n]) / (scale[m] * scale[n]));
    current = std::move(next);
    if (change <= quad.target) return current;
  }
  if (change > quad.failure) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "gram_matrix: last refinement changed entries by " + std::to_string(change));
  }
  return current;
}

double normalized_defect(const std::vector<std::vector<double>>& gram, int m, int n, const Params& p) {
  const double hm = magnitude(monic_norm(m, p));
  const double hn = magnitude(monic_norm(n, p));
  const double expected = m == n ? hn : 0.0;
  return std::abs(gram[m][n] - expected) / std::sqrt(hm * hn);
}

double orthogonality_defect(int m, int n, const Params& p, const QuadratureConfig& quad) {
  if (m < 0 || n < 0 || m > 20 || n > 20) throw Error(ErrorCode::DomainError, "orthogonality_defect: degrees in 0..20");
  const auto g = gram_matrix(std::max(m, n), p, quad);
  return normalized_defect(g, m, n, p);
}

std::vector<ReportRow> orthogonality_report(int max_n, const Params& p, const QuadratureConfig& quad) {
  if (max_n < 0 || max_n > 20) throw Error(ErrorCode::DomainError, "orthogonality_report: max_n in 0..20");
  const auto g = gram_matrix(max_n, p, quad);
  std::vector<ReportRow> rows;
  for (int m = 0; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n) {
      ReportRow r;
      r.kind = RowKind::Orthogonality;
      r.n = n;
      r.index = m;
      r.point = 0.0;
      r.exact = m == n ? monic_norm(n, p) : ScaledValue();
      r.approx = g[m][n];
      r.rel_error = normalized_defect(g, m, n, p);
      rows.push_back(r);
    }
  }
  return rows;
}

double osc_window_error(int n, double t, Side side, const Params& p, const asymptotics::Thresholds& th) {
  const double at = std::abs(t);
  const double freq = 2.0 * n * std::log((1.0 + std::sqrt(1.0 - 4.0 * at * at)) / (2.0 * at));
  const double period = 2.0 * pi / freq;
  constexpr int kSamples = 24;
  double worst = 0.0;
  for (int j = 0; j < kSamples; ++j) {
    const double tj = t + period * (static_cast<double>(j) / kSamples - 0.5);
    const ScaledValue exact = monic_eval(n, n * tj, p).value;
    const ScaledValue approx = asymptotics::osc_approx(n, tj, side, p, th);
    const ScaledValue env = asymptotics::osc_envelope(n, tj, side, p);
    worst = std::max(worst, magnitude((exact - approx) / env));
  }
  return worst;
}

std::vector<ReportRow> convergence_table(Regime regime, double point, const std::vector<int>& ns,
                                         const Params& p, Side side, const asymptotics::Thresholds& th) {
  if (!std::is_sorted(ns.begin(), ns.end())) throw Error(ErrorCode::DomainError, "convergence_table: ns must ascend");
  std::vector<ReportRow> rows;
  for (int n : ns) {
    ReportRow r;
    r.kind = RowKind::Convergence;
    r.n = n;
    r.point = point;
    r.side = side;
    switch (regime) {
      case Regime::Outer: {
        r.exact = monic_eval(n, n * point, p).value;
        r.approx = asymptotics::outer_approx(n, point, p);
        r.rel_error = relative_difference(r.exact, r.approx);
        break;
      }
      case Regime::Osc: {
        r.exact = monic_eval(n, n * point, p).value;
        r.approx = asymptotics::osc_approx(n, point, side, p, th);
        r.rel_error = osc_window_error(n, point, side, p, th);
        break;
      }
      case Regime::Uniform: {
        r.exact = exact_normalized(n, asymptotics::uniform_x(n, point, side, p), p);
        r.approx = asymptotics::uniform_approx(n, point, side, p, th);
        r.rel_error = relative_difference(r.exact, r.approx);
        break;
      }
      case Regime::Plancherel: {
        r.exact = exact_normalized(n, asymptotics::plancherel_x(n, point, side, p), p);
        r.approx = asymptotics::plancherel(n, point, side, p, th);
        r.rel_error = relative_difference(r.exact, r.approx);
        break;
      }
    }
    rows.push_back(r);
  }
  attach_orders(rows);
  return rows;
}

std::vector<ReportRow> consistency_report(int n, const std::vector<double>& ts, const Params& p,
                                          const asymptotics::Thresholds& th) {
  std::vector<ReportRow> rows;
  for (double t : ts) {
    ReportRow r;
    r.kind = RowKind::Consistency;
    r.n = n;
    r.point = t;
    const Complex x = asymptotics::uniform_x(n, t, Side::Plus, p);
    r.exact = asymptotics::uniform_approx(n, t, Side::Plus, p, th);
    r.approx = asymptotics::outer_approx(n, x / static_cast<double>(n), p) *
               ScaledValue::from_log(0.5 * log_weight(x, p)) / kn_scale(n, p);
    r.rel_error = relative_difference(r.exact, r.approx);
    rows.push_back(r);
  }
  return rows;
}

std::vector<ReportRow> zero_accuracy_report(const std::vector<int>& ns, int k_max, const Params& p, Side side) {
  require_real(p, "zero_accuracy_report");
  std::vector<ReportRow> rows;
  for (int n : ns) {
    const zeros::ZeroSet set = zeros::all_zeros(n, p);
    const double shift = asymptotics::turning_shift(n, side, p).real();
    for (int k = 1; k <= std::min(k_max, n); ++k) {
      const double estimate = zeros::edge_estimate(n, k, side, p);
      const double refined = side == Side::Plus ? set.zeros[n - k] : set.zeros[k - 1];
      ReportRow r;
      r.kind = RowKind::ZeroAccuracy;
      r.n = n;
      r.index = k;
      r.side = side;
      r.point = estimate;
      r.exact = refined;
      r.approx = estimate;
      r.rel_error = refined != 0.0 ? std::abs(refined - estimate) / std::abs(refined) : std::abs(estimate);
      r.scaled_deviation = std::abs(refined - estimate) * std::pow(shift, 2.0 / 3.0);
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace chahn::harness
