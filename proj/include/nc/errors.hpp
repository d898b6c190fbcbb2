#pragma once

#include <stdexcept>
#include <string>

namespace nc {

// Exact division was requested but the remainder is nonzero, or the
// quotient has a non-integer coefficient.
struct DivisionNotExact : std::runtime_error {
    explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

// A ratio of polynomials still has a zero denominator after all common
// cyclotomic factors have been cancelled: the limit at the root diverges.
struct PoleAtRoot : std::runtime_error {
    explicit PoleAtRoot(const std::string& what) : std::runtime_error(what) {}
};

// A cyclotomic-ring value was asserted to be a rational integer but is not.
struct NotRationalInteger : std::runtime_error {
    explicit NotRationalInteger(const std::string& what) : std::runtime_error(what) {}
};

// An integer division that is supposed to be exact by a proven identity
// left a remainder.
struct NonIntegerResult : std::runtime_error {
    explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

// A rotation order d was requested that does not divide the vertex count.
struct InvalidOrder : std::runtime_error {
    explicit InvalidOrder(const std::string& what) : std::runtime_error(what) {}
};

// A claimed quadrangulation has a face without an odd-odd pair of
// opposite corners, or is not a subdivision into quadrilaterals at all.
struct MalformedQuadrangulation : std::runtime_error {
    explicit MalformedQuadrangulation(const std::string& what) : std::runtime_error(what) {}
};

struct NotSpanningTree : std::runtime_error {
    explicit NotSpanningTree(const std::string& what) : std::runtime_error(what) {}
};

// A named precondition of a bijection was violated; the message names it.
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// The d-fold symmetric graph has a central d-gon of edges, so the
// block-fold construction does not apply; callers use the diameter branch.
struct CentralPolygonPresent : std::runtime_error {
    explicit CentralPolygonPresent(const std::string& what) : std::runtime_error(what) {}
};

// Lagrange extraction requires phi(0) != 0.
struct InvalidPhi : std::runtime_error {
    explicit InvalidPhi(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nc
