#include "qsl/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

std::vector<std::string> validate_training_set(const TrainingSet& data) {
    if (data.size() < 2) throw std::invalid_argument("training set needs at least two rows");
    if (data.feature_count() < 1) throw std::invalid_argument("training set needs at least one feature");
    if (data.labels.size() != data.size()) {
        throw std::invalid_argument("label count does not match the feature rows");
    }
    for (Eigen::Index i = 0; i < data.labels.size(); ++i) {
        if (data.labels(i) != 1 && data.labels(i) != -1) {
            throw std::invalid_argument("labels must be -1 or +1");
        }
    }
    std::vector<std::string> warnings;
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        for (Eigen::Index j = i + 1; j < data.size(); ++j) {
            if (data.labels(i) != data.labels(j) &&
                (data.features.row(i) - data.features.row(j)).cwiseAbs().maxCoeff() < 1e-12) {
                warnings.push_back("rows " + std::to_string(i) + " and " + std::to_string(j) +
                                   " share features but disagree on the label");
            }
        }
    }
    return warnings;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back({});
    return cells;
}

} // namespace

LoadedDataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::string line;
    long line_no = 0;

    // header: feature columns then the label column named y
    if (!std::getline(in, line)) throw data_format_error("dataset file is empty", 1);
    ++line_no;
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2) throw data_format_error("header needs at least one feature and a y column", line_no);
    if (header.back() != "y") throw data_format_error("last header column must be named y", line_no);

    LoadedDataset out;
    out.feature_names.assign(header.begin(), header.end() - 1);
    const std::size_t p = out.feature_names.size();

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != p + 1) {
            throw data_format_error("expected " + std::to_string(p + 1) + " columns, found " +
                                    std::to_string(cells.size()), line_no);
        }
        std::vector<double> row(p);
        for (std::size_t j = 0; j < p; ++j) {
            try {
                std::size_t used = 0;
                row[j] = std::stod(cells[j], &used);
                if (used != cells[j].size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw data_format_error("cannot parse feature value '" + cells[j] + "'", line_no);
            }
        }
        double y = 0.0;
        try {
            y = std::stod(cells[p]);
        } catch (const std::exception&) {
            throw data_format_error("cannot parse label '" + cells[p] + "'", line_no);
        }
        if (y != 1.0 && y != -1.0) {
            throw data_format_error("label must be -1 or +1, found '" + cells[p] + "'", line_no);
        }
        rows.push_back(std::move(row));
        labels.push_back(static_cast<int>(y));
    }
    if (rows.size() < 2) throw data_format_error("dataset needs at least two data rows", line_no);

    out.data.features.resize(rows.size(), p);
    out.data.labels.resize(labels.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < p; ++j) out.data.features(i, j) = rows[i][j];
        out.data.labels(i) = labels[i];
    }
    out.warnings = validate_training_set(out.data);
    return out;
}

} // namespace qsl
