#pragma once

#include <stdexcept>
#include <string>

namespace omitread {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SNR^2 never reaches unity inside the search window.
struct no_crossing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two eigenvector-overlap maxima tie; the dressed-basis labels are at a
// degenerate crossing and the qubit identification is undefined there.
struct labeling_ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace omitread
