#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfr/complex.hpp"
#include "mfr/pipelines.hpp"
#include "mfr/resolution.hpp"

namespace mfr {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct InputDataset {
    std::vector<std::int32_t> values;
    DistanceMatrix distances;

    Index size() const { return distances.n; }
};

// Text format:
//   function-rips
//   n
//   v_1 ... v_n
//   d(2,1)
//   d(3,1) d(3,2)
//   ...
// Blank lines and lines starting with '#' are ignored. Real values are only
// accepted when a discretization is given.
InputDataset read_dataset(std::istream& in, std::optional<Discretization> disc = std::nullopt);
InputDataset parse_input(const std::string& path, std::optional<Discretization> disc = std::nullopt);

void write_dataset(std::ostream& out, const InputDataset& ds);
void write_dataset(const std::string& path, const InputDataset& ds);

// Generators of each module are listed colex by grade, ties by index, and the
// matrix columns are rewritten against that order.
void write_resolution(std::ostream& out, const FreeResolution& r);
void write_resolution(const std::string& path, const FreeResolution& r);
std::string resolution_to_string(const FreeResolution& r);
FreeResolution read_resolution(std::istream& in);

enum class Shape { circle, sphere, torus, random };
Shape parse_shape(const std::string& s);

InputDataset generate_dataset(Shape shape, Index n, double sigma, std::uint64_t seed);

struct RunRecord {
    std::string input, algorithm, chunk, columns;
    int degree = 0;
    bool clearing = true;
    unsigned threads = 1;
    double seconds_build = 0;
    PipelineStats stats;
    std::size_t beta0 = 0, beta1 = 0, beta2 = 0;
};

void write_stats_header(std::ostream& out);
void write_stats_row(std::ostream& out, const RunRecord& r);

} // namespace mfr
