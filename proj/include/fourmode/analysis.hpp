#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fourmode/detection.hpp"
#include "fourmode/interferometer.hpp"
#include "fourmode/modes.hpp"

namespace fourmode {

/// <n+ n-> / (<n+><n->) over shots; nullopt when a mean count vanishes.
std::optional<double> g2_cross(const Dataset& dataset, const IntegrationVolume& vol_plus,
                               const IntegrationVolume& vol_minus);

/// g2 on a (vz+, vz-) grid; values are NaN where undefined.
struct G2Result {
  std::vector<double> v_plus;   // bin centers, mm/s
  std::vector<double> v_minus;  // bin centers, mm/s (negative side)
  std::vector<double> values;   // row-major [i_plus * n_minus + j_minus]
  int window = 1;               // sliding-average box width actually applied

  double at(std::size_t i, std::size_t j) const { return values[i * v_minus.size() + j]; }
};

struct G2GridSpec {
  double v_plus_min = 15.0, v_plus_max = 35.0;
  double v_minus_min = -35.0, v_minus_max = -15.0;
  double step = 1.0;
  int sliding_window = 3;  // boxcar width in bins; 1 disables
};

G2Result g2_map(const Dataset& dataset, const IntegrationVolume& geometry,
                const G2GridSpec& grid);

struct ProfilePoint {
  double x;      // coordinate along the profile, mm/s
  double value;  // g2
  double sigma;  // bootstrap error
};

/// g2(v, -v) along the pair stripe, parametrized by v. Uses independent
/// per-point volumes (no sliding average).
std::vector<ProfilePoint> g2_long_axis_profile(const Dataset& dataset,
                                               const IntegrationVolume& geometry, double v_min,
                                               double v_max, double step, int n_resamples,
                                               std::uint64_t seed);

/// g2 across the stripe along vz+ - vz- = 50 mm/s, parametrized by the pair
/// sum s = vz+ + vz-.
std::vector<ProfilePoint> g2_short_axis_profile(const Dataset& dataset,
                                                const IntegrationVolume& geometry, double s_min,
                                                double s_max, double step, int n_resamples,
                                                std::uint64_t seed);

/// Counting volumes of the four output ports of one mode set:
/// A+ at v_p, A- at -v_p', B+ at v_p', B- at -v_p.
struct ModeQuartet {
  IntegrationVolume a_plus, a_minus, b_plus, b_minus;

  void validate() const;  // volumes must be pairwise disjoint
};

ModeQuartet quartet_for(const ModeSet& set, const IntegrationVolume& geometry);

/// Cross-set reference quartet {A+(i), A-(j), B+(k), B-(l)}.
ModeQuartet reference_quartet(const std::vector<ModeQuartet>& quartets, int i, int j, int k,
                              int l);

/// Correlator-normalized joint detection probabilities:
///   P(A+,B+) = <n(A+) n(B+)> / Lambda  etc.,
/// Lambda = sum of the four cross correlators. Throws StatisticsError when
/// Lambda vanishes.
JointProbabilities joint_probability_estimates(const Dataset& dataset, const ModeQuartet& quartet);

/// P(C+,C-) = 2 <n+ n-> / Lambda with
/// Lambda = <n+(n+-1)> + <n-(n--1)> + 2 <n+ n->. Throws StatisticsError when
/// Lambda vanishes.
double hom_probability_estimate(const Dataset& dataset, const IntegrationVolume& vol_plus,
                                const IntegrationVolume& vol_minus);

/// All ordered index combinations (i, j, k, l) over n_sets sets with
/// i != k, i != l, j != k, j != l; 18 combinations for n_sets = 3.
std::vector<std::array<int, 4>> reference_sets(int n_sets = 3);

struct EstimateWithError {
  double value = 0.0;
  double sigma = 0.0;
  int n_resamples = 0;
};

/// Shot-level bootstrap: value on the full dataset, sigma over resamples
/// drawn with replacement. Throws StatisticsError when the statistic is
/// undefined on the full dataset or on more than 10% of the resamples.
EstimateWithError bootstrap(const std::function<std::optional<double>(const Dataset&)>& statistic,
                            const Dataset& dataset, int n_resamples, std::uint64_t seed);

struct FitPoint {
  double x;
  double y;
  double sigma = 1.0;  // y error; weights are 1/sigma^2
};

struct GaussianFit {
  double amplitude = 0.0;
  double center = 0.0;
  double sigma = 0.0;
  double offset = 0.0;
  bool offset_fixed = false;
  int iterations = 0;
  std::array<double, 4> parameter_errors{};  // sqrt of covariance diagonal
};

/// Damped least squares (Levenberg-Marquardt) on
/// y = offset + A exp(-(x-c)^2 / 2 sigma^2) with analytic Jacobian, at most
/// 200 iterations. Throws FitError on non-convergence or fewer than 4 points.
GaussianFit gaussian_fit(const std::vector<FitPoint>& points,
                         std::optional<double> fixed_offset = std::nullopt);

struct HomScanResult {
  GaussianFit fit;         // dip: negative amplitude over the offset level
  double closing_time;     // fitted dip center
  double visibility;       // -amplitude / offset
};

/// Gaussian dip fit to P(C+,C-) versus splitter time.
HomScanResult hom_scan(const std::vector<FitPoint>& points);

}  // namespace fourmode
