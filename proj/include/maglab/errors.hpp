#ifndef MAGLAB_ERRORS_HPP
#define MAGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maglab {

/// Error categories raised by the library. Every maglab exception carries
/// one of these so callers can branch without string matching.
enum class Errc {
    asymmetric_input,
    not_positive_definite,
    ill_conditioned,
    singular_matrix,
    dimension_too_large,
    not_a_metric,
    duplicate_points,
    negative_scale,
    index_out_of_range,
    duplicate_index,
    empty_set,
    dimension_mismatch,
    inverted_interval,
    negative_radius,
    nonpositive_input,
    nonpositive_mesh,
    net_too_large,
    monotonicity_violation,
    solver_failure,
    degenerate_interval,
    config_error,
    input_parse_error,
    invalid_argument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace maglab

#endif  // MAGLAB_ERRORS_HPP
