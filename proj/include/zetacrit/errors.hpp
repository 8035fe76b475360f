#ifndef ZETACRIT_ERRORS_HPP
#define ZETACRIT_ERRORS_HPP

#include <stdexcept>

namespace zetacrit {

// Input outside an operation's domain (t <= 0, T < 0, bad step size, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested tolerance cannot be certified (truncation cap, rounding floor,
// or an exhausted subdivision budget).
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative scheme stalled within its iteration budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at a pole of the target function.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Point where the zero criterion is explicitly inapplicable (z = -4n).
struct ExclusionError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace zetacrit

#endif
