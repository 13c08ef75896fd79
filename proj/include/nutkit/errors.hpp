#pragma once

#include <stdexcept>
#include <string>

namespace nutkit {

// graph-core
struct index_out_of_range : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct edge_not_present : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct invalid_graph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// exact-linalg
struct shape_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// nut-analysis
struct not_full_vector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// symmetry
struct mismatched_group : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct inconsistent_orbit_degrees : std::logic_error {
    using std::logic_error::logic_error;
};
struct not_nut_graph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_vertex_transitive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// families
struct invalid_connection_set : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parameter_too_small : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct degenerate_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unknown_name : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// constructions
struct not_regular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct odd_degree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct even_cycle_length : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_bridge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_full_orbit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct prime_order : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct order_too_small : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// enumerate
struct order_too_large : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace nutkit
