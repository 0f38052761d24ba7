#ifndef SLICEBENCH_TARGETS_LOGISTIC_DATA_HPP
#define SLICEBENCH_TARGETS_LOGISTIC_DATA_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "slicebench/types.hpp"

namespace slicebench {

// Binary classification data (xi_i, y_i) with labels in {-1, +1}.
class LogisticData {
 public:
  LogisticData(Matrix features, std::vector<int> labels);

  int dim() const { return static_cast<int>(features_.cols()); }
  int count() const { return static_cast<int>(features_.rows()); }
  const Matrix& features() const { return features_; }  // N x d, row i = xi_i
  const std::vector<int>& labels() const { return labels_; }

  double min_feature_norm() const;

  // CSV with a required header row; each data row is x_1,...,x_d,label with
  // label in {-1, +1}. Column count fixes d. Parse errors name the line.
  static LogisticData load_csv(const std::string& path);
  static LogisticData parse_csv(std::istream& in, const std::string& origin);

 private:
  Matrix features_;
  std::vector<int> labels_;
};

}  // namespace slicebench

#endif
