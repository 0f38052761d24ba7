#include "slicebench/targets/logistic_data.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

LogisticData::LogisticData(Matrix features, std::vector<int> labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
  if (features_.rows() == 0 || features_.cols() == 0)
    throw ContractError("LogisticData: need at least one observation and one feature");
  if (static_cast<std::size_t>(features_.rows()) != labels_.size())
    throw ContractError("LogisticData: feature/label count mismatch");
  for (int y : labels_)
    if (y != -1 && y != 1) throw ContractError("LogisticData: labels must be -1 or +1");
  if (!features_.allFinite()) throw ContractError("LogisticData: features must be finite");
}

double LogisticData::min_feature_norm() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count(); ++i) m = std::min(m, features_.row(i).norm());
  return m;
}

LogisticData LogisticData::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("LogisticData: cannot open " + path);
  return parse_csv(in, path);
}

LogisticData LogisticData::parse_csv(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line))
    throw ContractError(origin + ": empty file, header row required");
  const std::size_t n_cols = split_csv_row(line).size();
  if (n_cols < 2)
    throw ContractError(origin + ":1: header must have at least one feature column and a label");
  const int dim = static_cast<int>(n_cols) - 1;

  std::vector<Vector> rows;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    const std::string where = origin + ":" + std::to_string(line_no);
    if (fields.size() != n_cols)
      throw ContractError(where + ": expected " + std::to_string(n_cols) + " columns, got " +
                          std::to_string(fields.size()));
    Vector xi(dim);
    for (int j = 0; j < dim; ++j) {
      try {
        std::size_t used = 0;
        xi[j] = std::stod(fields[j], &used);
        if (used != fields[j].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ContractError(where + ": cannot parse feature '" + fields[j] + "'");
      }
    }
    const std::string& lab = fields[dim];
    if (lab == "1" || lab == "+1")
      labels.push_back(1);
    else if (lab == "-1")
      labels.push_back(-1);
    else
      throw ContractError(where + ": label must be -1 or +1, got '" + lab + "'");
    rows.push_back(std::move(xi));
  }
  if (rows.empty()) throw ContractError(origin + ": no data rows");

  Matrix features(static_cast<int>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) features.row(static_cast<int>(i)) = rows[i];
  return LogisticData(std::move(features), std::move(labels));
}

}  // namespace slicebench
