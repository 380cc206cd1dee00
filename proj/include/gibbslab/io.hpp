#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gibbslab {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Shortest round-trippable decimal form.
std::string format_double(double v);

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);
    void add_row(std::vector<std::string> fields);
    std::string str() const;
    void write(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::string& path, const std::string& content);

// JSON manifest written next to every run's outputs.
void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::map<std::string, std::string>& params, std::uint64_t seed,
                    const std::vector<std::string>& outputs, double wall_clock_sec);

// Plain-text matrix fixtures: "rows cols" then row-major "re im" pairs.
void save_matrix(const std::string& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd load_matrix(const std::string& path);

}  // namespace gibbslab
