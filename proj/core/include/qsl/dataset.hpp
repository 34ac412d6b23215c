// Labeled dataset shared by the SVM and variational learners, plus the CSV
// ingestion format: a header row of feature names followed by a label column
// named y, labels in {-1, +1}.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace qsl {

struct TrainingSet {
    Eigen::MatrixXd features; // N x p
    Eigen::VectorXi labels;   // entries in {-1, +1}

    Eigen::Index size() const { return features.rows(); }
    Eigen::Index feature_count() const { return features.cols(); }
};

/// Validates shape and label range; returns warnings (duplicate feature rows
/// with conflicting labels) without failing.
std::vector<std::string> validate_training_set(const TrainingSet& data);

struct LoadedDataset {
    TrainingSet data;
    std::vector<std::string> feature_names;
    std::vector<std::string> warnings;
};

/// Reads the CSV dataset format; throws data_format_error with the offending
/// line number on malformed input.
LoadedDataset load_dataset_csv(const std::string& path);

} // namespace qsl
