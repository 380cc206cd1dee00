#include "gibbslab/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gibbslab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(std::vector<std::string> fields) {
    if (fields.size() != columns_.size())
        throw std::invalid_argument("CsvWriter: field count does not match header");
    rows_.push_back(std::move(fields));
}

std::string CsvWriter::str() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out += (i ? "," : "") + columns_[i];
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += '\n';
    }
    return out;
}

void CsvWriter::write(const std::string& path) const { write_text_file(path, str()); }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::map<std::string, std::string>& params, std::uint64_t seed,
                    const std::vector<std::string>& outputs, double wall_clock_sec) {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["parameters"] = params;
    j["seed"] = seed;
    j["artifact_version"] = kArtifactVersion;
    j["outputs"] = outputs;
    j["wall_clock_sec"] = wall_clock_sec;
    write_text_file(path, j.dump(2) + "\n");
}

void save_matrix(const std::string& path, const Eigen::MatrixXcd& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << m.rows() << " " << m.cols() << "\n";
    f.precision(17);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            if (j) f << " ";
            f << m(i, j).real() << " " << m(i, j).imag();
        }
        f << "\n";
    }
}

Eigen::MatrixXcd load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    long rows = 0, cols = 0;
    f >> rows >> cols;
    Eigen::MatrixXcd m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            double re = 0, im = 0;
            if (!(f >> re >> im)) throw std::runtime_error("matrix file truncated: " + path);
            m(i, j) = {re, im};
        }
    return m;
}

}  // namespace gibbslab
