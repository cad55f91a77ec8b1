#ifndef REESKIT_ERRORS_HPP
#define REESKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reeskit {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial / job text.  `position` is a 0-based byte offset
// into the offending string.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Two operands live in different rings (or different coefficient fields).
struct ring_mismatch_error : error {
    explicit ring_mismatch_error(const std::string& msg) : error(msg) {}
};

// A computation hit a configured cap (degree bound, pair bound or wall-clock
// deadline).  `diagnostics` describes the partial state at the point of abort.
struct resource_limit_error : error {
    std::string diagnostics;
    resource_limit_error(const std::string& msg, std::string diag)
        : error(msg), diagnostics(std::move(diag)) {}
};

// Input matrix fails one of the presentation admissibility checks.
struct validation_error : error {
    enum class kind_t {
        nonlinear_entry,      // an entry is not linear (and nonlinear inputs not allowed)
        entry_not_base,       // an entry involves T-variables or is not homogeneous
        content_not_maximal,  // entries do not generate the full irrelevant ideal of the base
        degenerate_rank,      // maximal minors all vanish: no full column rank
        bad_shape,            // matrix/ring dimensions inconsistent with the declared rank
    };
    kind_t kind;
    int row = -1, col = -1;  // offending entry when applicable (0-based), else -1
    validation_error(kind_t k, const std::string& msg, int r = -1, int c = -1)
        : error(msg), kind(k), row(r), col(c) {}
};

// The matrix passed shape classification but is not in the exact normal form
// the submatrix extraction needs; one of the entrywise transition identities
// failed.
struct transition_identity_error : error {
    explicit transition_identity_error(const std::string& msg) : error(msg) {}
};

}  // namespace reeskit

#endif
