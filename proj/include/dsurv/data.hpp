#ifndef DSURV_DATA_HPP
#define DSURV_DATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace dsurv {

/// Right-censored survival data. Covariates are either one row per
/// individual (static) or one row per (individual, interval) pair
/// (long format, activated by an interval column in the schema).
struct SurvivalDataset {
  Eigen::VectorXd time;     // observed time y_i > 0
  std::vector<int> status;  // 1 = failure, 0 = censored
  Eigen::MatrixXd covariates;  // N x K, static format

  bool long_format = false;
  std::vector<Eigen::MatrixXd> covariate_paths;  // long format: J_i x K per id

  std::vector<int> group;  // 1..G, empty when no grouping
  int num_groups = 0;
  std::vector<std::string> covariate_names;

  int size() const { return static_cast<int>(time.size()); }
  int num_covariates() const {
    return static_cast<int>(long_format && !covariate_paths.empty()
                                ? covariate_paths.front().cols()
                                : covariates.cols());
  }
  bool has_groups() const { return !group.empty(); }

  /// Covariate row of individual i in interval j (1-based j).
  Eigen::RowVectorXd covariate_row(int i, int j) const;
};

/// Division points s_0 = 0 < s_1 < ... < s_J plus everything derived from
/// them for a concrete dataset: exposures, exit intervals, risk sets and the
/// descending-time ordering under which risk sets are nested prefixes.
struct IntervalGrid {
  Eigen::VectorXd points;   // J+1 values, points(0) == 0
  Eigen::VectorXd lengths;  // J interval lengths

  std::vector<int> order;         // sorted rank -> original index, y descending
  std::vector<int> exit_interval;  // l_i per original index, 1-based
  Eigen::VectorXd exit_exposure;   // u_{i, l_i} per original index
  std::vector<int> risk_count;     // n_j, entry j-1 for interval j

  int num_intervals() const { return static_cast<int>(lengths.size()); }

  /// u_ij for original index i and 1-based interval j.
  double exposure(int i, int j) const {
    if (j > exit_interval[i]) return 0.0;
    return j < exit_interval[i] ? lengths(j - 1) : exit_exposure(i);
  }
};

/// Unique failure times thinned to every k-th value, prepended with zero and
/// extended to cover the largest observation. Throws if no failures exist.
std::vector<double> division_points(const std::vector<double>& times,
                                    const std::vector<int>& status, int every);

/// Exposures, exit intervals and risk sets for the given points. Intervals
/// are right-closed; observations beyond the last point are rejected.
IntervalGrid compute_exposures(const SurvivalDataset& data,
                               const std::vector<double>& points);

/// Piecewise exponential log likelihood. hazards[j-1] holds the positive
/// rates for the n_j at-risk individuals of interval j in grid order.
double piecewise_loglik(const SurvivalDataset& data, const IntervalGrid& grid,
                        const std::vector<Eigen::VectorXd>& hazards);

/// Same likelihood evaluated from log hazards; safe under extreme rates.
double piecewise_loglik_log(const SurvivalDataset& data,
                            const IntervalGrid& grid,
                            const std::vector<Eigen::VectorXd>& log_hazards);

/// Column mapping for delimited input files.
struct DataSchema {
  std::string time;
  std::string status;
  std::vector<std::string> covariates;
  std::string group;     // optional
  std::string id;        // long format
  std::string interval;  // presence marks long format
};

/// Reads a comma- or tab-delimited file (auto-detected from the header) and
/// validates it against the schema. Errors name the offending line.
SurvivalDataset load_dataset(const std::string& path, const DataSchema& schema);

}  // namespace dsurv

#endif
