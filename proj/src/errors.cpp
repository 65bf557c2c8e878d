#include "defk/errors.hpp"

namespace defk {

std::string_view fault_name(Fault f) {
    switch (f) {
        case Fault::index_out_of_range: return "IndexOutOfRange";
        case Fault::repeated_point: return "RepeatedPoint";
        case Fault::not_uniform: return "NotUniform";
        case Fault::point_degree_nonuniform: return "PointDegreeNonUniform";
        case Fault::double_incidence: return "DoubleIncidence";
        case Fault::disconnected: return "Disconnected";
        case Fault::too_small: return "TooSmall";
        case Fault::not_symmetric: return "NotSymmetric";
        case Fault::negative_deficiency: return "NegativeDeficiency";
        case Fault::validation_failed: return "ValidationFailed";
        case Fault::degree_anomaly: return "DegreeAnomaly";
        case Fault::tops_violation: return "TopsViolation";
        case Fault::not_deficiency_three: return "NotDeficiencyThree";
        case Fault::not_square_matrix: return "NotSquareMatrix";
        case Fault::divisibility_violated: return "DivisibilityViolated";
        case Fault::length_sum_mismatch: return "LengthSumMismatch";
        case Fault::singular_at_n_two: return "SingularAtNTwo";
        case Fault::unknown_name: return "UnknownName";
        case Fault::budget_exceeded: return "BudgetExceeded";
        case Fault::parse_error: return "ParseError";
        case Fault::file_not_found: return "FileNotFound";
    }
    return "Unknown";
}

}  // namespace defk
