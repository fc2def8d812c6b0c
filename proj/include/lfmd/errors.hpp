#pragma once

#include <stdexcept>
#include <string>

namespace lfmd {

struct invalid_family_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct empty_graph_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_adjacent_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_pair_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct no_edges_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_format_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested computation exceeds a configured capacity cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lfmd
