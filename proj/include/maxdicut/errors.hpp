#pragma once

#include <stdexcept>
#include <string>

namespace maxdicut {

// Every rejected precondition maps to one of these kinds so callers can
// distinguish failure modes without parsing messages.
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : GraphError {
    using GraphError::GraphError;
};
struct NegativeWeightError : GraphError {
    using GraphError::GraphError;
};
struct VertexRangeError : GraphError {
    using GraphError::GraphError;
};
struct CyclicInputError : GraphError {
    using GraphError::GraphError;
};
struct ZeroWeightError : GraphError {
    using GraphError::GraphError;
};
struct InstanceTooLargeError : GraphError {
    using GraphError::GraphError;
};
struct ImproperColoringError : GraphError {
    using GraphError::GraphError;
};
// A bipartite-family side that is not an independent set; the message names
// the violating arc.
struct DependentSideError : GraphError {
    using GraphError::GraphError;
};
// An arc of weight < 1 where the construction requires the weight-at-least-1
// instance class.
struct MinWeightError : GraphError {
    using GraphError::GraphError;
};
struct BadParameterError : GraphError {
    using GraphError::GraphError;
};
struct ParseError : GraphError {
    using GraphError::GraphError;
};

}  // namespace maxdicut
