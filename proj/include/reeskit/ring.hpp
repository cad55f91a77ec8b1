#ifndef REESKIT_RING_HPP
#define REESKIT_RING_HPP

#include <string>

#include "reeskit/errors.hpp"
#include "reeskit/field.hpp"

namespace reeskit {

// A bigraded polynomial ring k[x1..xd][T1..Tn], optionally extended by
// auxiliary variables z1..zk used internally by elimination tricks.
// Variables are positional: indices 0..x_count-1 are x1..xd, the next
// t_count are T1..Tn, the rest are z1..zk.  deg(xi) = (1,0), deg(Ti) = (0,1).
struct ring_spec {
    int x_count = 0;
    int t_count = 0;
    int aux_count = 0;
    field_spec field;

    ring_spec() = default;
    ring_spec(int xs, int ts, field_spec f, int aux = 0)
        : x_count(xs), t_count(ts), aux_count(aux), field(f) {
        if (xs < 1) throw error("ring needs at least one x-variable");
        if (ts < 0 || aux < 0) throw error("negative variable count");
    }

    int var_count() const { return x_count + t_count + aux_count; }
    bool is_x(int v) const { return v < x_count; }
    bool is_t(int v) const { return v >= x_count && v < x_count + t_count; }
    bool is_aux(int v) const { return v >= x_count + t_count; }

    // 0-based variable index of x{i} / T{i} given the 1-based label i
    int x_var(int i) const { return i - 1; }
    int t_var(int i) const { return x_count + i - 1; }

    std::string var_name(int v) const {
        if (is_x(v)) return "x" + std::to_string(v + 1);
        if (is_t(v)) return "T" + std::to_string(v - x_count + 1);
        return "z" + std::to_string(v - x_count - t_count + 1);
    }

    ring_spec with_aux(int extra) const {
        ring_spec r = *this;
        r.aux_count += extra;
        return r;
    }

    bool operator==(const ring_spec&) const = default;
};

inline void require_same_ring(const ring_spec& a, const ring_spec& b, const char* what) {
    if (!(a == b)) throw ring_mismatch_error(std::string("ring mismatch in ") + what);
}

}  // namespace reeskit

#endif
