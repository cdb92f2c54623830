/**
 * Error types shared across the library.
 */

#ifndef SHIFTLAB_ERRORS_HPP
#define SHIFTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shiftlab {

struct VertexOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsortableFace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FaceNotInComplex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAFacet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct VertexMissing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotShifted : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotNearCone : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Seeded-random genericity emulation failed to reproduce a value.
struct GenericInstability : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A generically-true structural fact failed; used as an instability signal.
struct ClosureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Two oracles that must agree did not; indicates a bug, never swallowed.
struct Disagreement : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace shiftlab

#endif
