#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace defk {

// Every failure mode the library reports. Validation faults carry witnesses
// (the offending lines/points); the rest are precondition or input faults.
enum class Fault {
    index_out_of_range,
    repeated_point,
    not_uniform,
    point_degree_nonuniform,
    double_incidence,
    disconnected,
    too_small,
    not_symmetric,
    negative_deficiency,
    validation_failed,
    degree_anomaly,
    tops_violation,
    not_deficiency_three,
    not_square_matrix,
    divisibility_violated,
    length_sum_mismatch,
    singular_at_n_two,
    unknown_name,
    budget_exceeded,
    parse_error,
    file_not_found,
};

std::string_view fault_name(Fault f);

// Indices of the objects that witness a violated axiom, e.g. the two lines
// sharing two points together with that point pair.
struct Witness {
    std::vector<int> lines;
    std::vector<int> points;

    bool empty() const { return lines.empty() && points.empty(); }
};

class Error : public std::runtime_error {
public:
    Error(Fault fault, std::string message)
        : std::runtime_error(std::move(message)), fault_(fault) {}

    Error(Fault fault, Witness witness, std::string message)
        : std::runtime_error(std::move(message)),
          fault_(fault),
          witness_(std::move(witness)) {}

    Fault fault() const { return fault_; }
    const Witness& witness() const { return witness_; }

private:
    Fault fault_;
    Witness witness_;
};

}  // namespace defk
