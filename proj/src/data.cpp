#include "dsurv/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsurv {

Eigen::RowVectorXd SurvivalDataset::covariate_row(int i, int j) const {
  if (!long_format) return covariates.row(i);
  const Eigen::MatrixXd& path = covariate_paths[i];
  if (j < 1 || j > path.rows())
    throw std::out_of_range("covariate_row: individual " + std::to_string(i) +
                            " has no row for interval " + std::to_string(j));
  return path.row(j - 1);
}

std::vector<double> division_points(const std::vector<double>& times,
                                    const std::vector<int>& status, int every) {
  if (times.size() != status.size())
    throw std::invalid_argument("division_points: length mismatch");
  if (every < 1) throw std::invalid_argument("division_points: every must be >= 1");

  std::vector<double> deaths;
  double max_time = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    max_time = std::max(max_time, times[i]);
    if (status[i] == 1) deaths.push_back(times[i]);
  }
  if (deaths.empty())
    throw std::invalid_argument("division_points: no observed failures, grid undefined");

  std::sort(deaths.begin(), deaths.end());
  deaths.erase(std::unique(deaths.begin(), deaths.end()), deaths.end());

  std::vector<double> points{0.0};
  for (std::size_t i = every - 1; i < deaths.size(); i += every)
    points.push_back(deaths[i]);
  if (max_time > points.back()) points.push_back(max_time);
  return points;
}

IntervalGrid compute_exposures(const SurvivalDataset& data,
                               const std::vector<double>& points) {
  const int n = data.size();
  if (points.size() < 2 || points.front() != 0.0)
    throw std::invalid_argument("compute_exposures: points must start at 0");
  for (std::size_t j = 1; j < points.size(); ++j)
    if (!(points[j] > points[j - 1]))
      throw std::invalid_argument("compute_exposures: points must be strictly increasing");

  IntervalGrid grid;
  const int J = static_cast<int>(points.size()) - 1;
  grid.points = Eigen::Map<const Eigen::VectorXd>(points.data(), J + 1);
  grid.lengths = grid.points.tail(J) - grid.points.head(J);

  grid.exit_interval.resize(n);
  grid.exit_exposure.resize(n);
  for (int i = 0; i < n; ++i) {
    const double y = data.time(i);
    if (y == 0.0)
      throw std::domain_error("compute_exposures: observed time 0 for row " +
                              std::to_string(i));
    if (y > points.back())
      throw std::domain_error("compute_exposures: observation " + std::to_string(i) +
                              " exceeds the last division point");
    // exit interval: smallest j with y <= s_j (right-closed intervals)
    const int l = static_cast<int>(
        std::lower_bound(points.begin() + 1, points.end(), y) - points.begin());
    grid.exit_interval[i] = l;
    grid.exit_exposure(i) = y - points[l - 1];
    if (data.long_format &&
        data.covariate_paths[i].rows() < l)
      throw std::invalid_argument(
          "compute_exposures: individual " + std::to_string(i) +
          " lacks covariate rows up to its exit interval " + std::to_string(l));
  }

  grid.order.resize(n);
  std::iota(grid.order.begin(), grid.order.end(), 0);
  std::stable_sort(grid.order.begin(), grid.order.end(),
                   [&](int a, int b) { return data.time(a) > data.time(b); });

  grid.risk_count.resize(J);
  for (int j = 1; j <= J; ++j) {
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (data.time(i) > points[j - 1]) ++count;
    grid.risk_count[j - 1] = count;
  }
  return grid;
}

double piecewise_loglik(const SurvivalDataset& data, const IntervalGrid& grid,
                        const std::vector<Eigen::VectorXd>& hazards) {
  const int J = grid.num_intervals();
  if (static_cast<int>(hazards.size()) != J)
    throw std::invalid_argument("piecewise_loglik: need one hazard vector per interval");
  double ll = 0.0;
  for (int j = 1; j <= J; ++j) {
    const Eigen::VectorXd& lam = hazards[j - 1];
    const int nj = grid.risk_count[j - 1];
    if (lam.size() != nj)
      throw std::invalid_argument("piecewise_loglik: hazard length mismatch in interval " +
                                  std::to_string(j));
    for (int r = 0; r < nj; ++r) {
      const int i = grid.order[r];
      if (!(lam(r) > 0.0) || !std::isfinite(lam(r)))
        throw std::domain_error("piecewise_loglik: nonpositive hazard");
      ll -= lam(r) * grid.exposure(i, j);
      if (grid.exit_interval[i] == j && data.status[i] == 1) ll += std::log(lam(r));
    }
  }
  return ll;
}

double piecewise_loglik_log(const SurvivalDataset& data,
                            const IntervalGrid& grid,
                            const std::vector<Eigen::VectorXd>& log_hazards) {
  const int J = grid.num_intervals();
  double ll = 0.0;
  for (int j = 1; j <= J; ++j) {
    const Eigen::VectorXd& eta = log_hazards[j - 1];
    const int nj = grid.risk_count[j - 1];
    for (int r = 0; r < nj; ++r) {
      const int i = grid.order[r];
      ll -= std::exp(eta(r)) * grid.exposure(i, j);
      if (grid.exit_interval[i] == j && data.status[i] == 1) ll += eta(r);
    }
  }
  return ll;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, delim)) {
    // trim surrounding whitespace and a trailing CR
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

double parse_number(const std::string& cell, int line_no, const std::string& col) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != cell.size() || cell.empty())
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": non-numeric value '" + cell + "' in column " + col);
  return v;
}

struct RawRow {
  int line_no;
  double time;
  int status;
  Eigen::RowVectorXd covs;
  std::string group;
  std::string id;
  int interval = 0;
};

}  // namespace

SurvivalDataset load_dataset(const std::string& path, const DataSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_dataset: cannot open " + path);

  std::string header;
  if (!std::getline(in, header))
    throw std::invalid_argument("load_dataset: empty file " + path);
  const char delim = header.find('\t') != std::string::npos ? '\t' : ',';
  const std::vector<std::string> names = split_line(header, delim);

  const auto column = [&](const std::string& name, bool required) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      if (required)
        throw std::invalid_argument("load_dataset: missing column '" + name + "'");
      return -1;
    }
    return static_cast<int>(it - names.begin());
  };

  const bool long_format = !schema.interval.empty();
  const int c_time = column(schema.time, true);
  const int c_status = column(schema.status, true);
  const int c_group = schema.group.empty() ? -1 : column(schema.group, true);
  const int c_id = schema.id.empty() ? -1 : column(schema.id, long_format);
  const int c_interval = long_format ? column(schema.interval, true) : -1;
  if (long_format && c_id < 0)
    throw std::invalid_argument("load_dataset: long format requires an id column");
  std::vector<int> c_cov;
  for (const auto& name : schema.covariates) c_cov.push_back(column(name, true));
  const int K = static_cast<int>(c_cov.size());

  std::vector<RawRow> rows;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_line(line, delim);
    if (cells.size() != names.size())
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(names.size()) +
                                  " cells, found " + std::to_string(cells.size()));
    RawRow row;
    row.line_no = line_no;
    row.time = parse_number(cells[c_time], line_no, schema.time);
    const double st = parse_number(cells[c_status], line_no, schema.status);
    if (st != 0.0 && st != 1.0)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": status must be 0 or 1, got " + cells[c_status]);
    row.status = static_cast<int>(st);
    if (row.time <= 0.0)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": observed time must be positive");
    row.covs.resize(K);
    for (int k = 0; k < K; ++k)
      row.covs(k) = parse_number(cells[c_cov[k]], line_no, schema.covariates[k]);
    if (c_group >= 0) row.group = cells[c_group];
    if (c_id >= 0) row.id = cells[c_id];
    if (c_interval >= 0)
      row.interval = static_cast<int>(parse_number(cells[c_interval], line_no,
                                                   schema.interval));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("load_dataset: no data rows in " + path);

  SurvivalDataset data;
  data.long_format = long_format;
  data.covariate_names = schema.covariates;

  std::vector<std::string> group_labels;
  const auto assign_groups = [&](const std::vector<std::string>& labels) {
    std::set<std::string> uniq(labels.begin(), labels.end());
    std::vector<std::string> sorted(uniq.begin(), uniq.end());
    const bool numeric = std::all_of(sorted.begin(), sorted.end(), [](const std::string& s) {
      std::size_t pos = 0;
      try { std::stod(s, &pos); } catch (const std::exception&) { return false; }
      return pos == s.size();
    });
    if (numeric)
      std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
        return std::stod(a) < std::stod(b);
      });
    data.num_groups = static_cast<int>(sorted.size());
    data.group.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      data.group[i] = static_cast<int>(
          std::find(sorted.begin(), sorted.end(), labels[i]) - sorted.begin() + 1);
  };

  if (!long_format) {
    const int n = static_cast<int>(rows.size());
    data.time.resize(n);
    data.status.resize(n);
    data.covariates.resize(n, K);
    for (int i = 0; i < n; ++i) {
      data.time(i) = rows[i].time;
      data.status[i] = rows[i].status;
      data.covariates.row(i) = rows[i].covs;
      if (c_group >= 0) group_labels.push_back(rows[i].group);
    }
    if (c_group >= 0) assign_groups(group_labels);
    return data;
  }

  // long format: group rows by id, keep first-appearance id order
  std::vector<std::string> id_order;
  std::map<std::string, std::vector<const RawRow*>> by_id;
  for (const auto& row : rows) {
    if (by_id.find(row.id) == by_id.end()) id_order.push_back(row.id);
    by_id[row.id].push_back(&row);
  }
  const int n = static_cast<int>(id_order.size());
  data.time.resize(n);
  data.status.resize(n);
  data.covariate_paths.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& group_rows = by_id[id_order[i]];
    std::sort(group_rows.begin(), group_rows.end(),
              [](const RawRow* a, const RawRow* b) { return a->interval < b->interval; });
    for (std::size_t r = 0; r + 1 < group_rows.size(); ++r)
      if (group_rows[r]->interval == group_rows[r + 1]->interval)
        throw std::invalid_argument("line " + std::to_string(group_rows[r + 1]->line_no) +
                                    ": duplicate interval " +
                                    std::to_string(group_rows[r]->interval) +
                                    " for id " + id_order[i]);
    for (std::size_t r = 0; r < group_rows.size(); ++r)
      if (group_rows[r]->interval != static_cast<int>(r) + 1)
        throw std::invalid_argument("coverage error: id " + id_order[i] +
                                    " missing interval " + std::to_string(r + 1));
    data.time(i) = group_rows.front()->time;
    data.status[i] = group_rows.front()->status;
    for (const RawRow* row : group_rows) {
      if (row->time != data.time(i) || row->status != data.status[i])
        throw std::invalid_argument("line " + std::to_string(row->line_no) +
                                    ": inconsistent time or status for id " + id_order[i]);
    }
    Eigen::MatrixXd path(group_rows.size(), K);
    for (std::size_t r = 0; r < group_rows.size(); ++r) path.row(r) = group_rows[r]->covs;
    data.covariate_paths[i] = std::move(path);
    if (c_group >= 0) group_labels.push_back(group_rows.front()->group);
  }
  if (c_group >= 0) assign_groups(group_labels);
  return data;
}

}  // namespace dsurv
