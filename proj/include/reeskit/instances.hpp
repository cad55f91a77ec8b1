#ifndef REESKIT_INSTANCES_HPP
#define REESKIT_INSTANCES_HPP

#include <cstdint>

#include "reeskit/presentation.hpp"

namespace reeskit {

// Parameters of a synthesized normal-form presentation: a rank-e module on
// k[x1..xd] with n generators whose matrix is column- or row-shaped with
// respect to (x1..xs).
struct instance_params {
    int d = 3;
    int s = 2;
    int n = 4;
    int e = 1;
};

struct generated_instance {
    presentation pres;
    std::uint64_t seed_used = 0;  // the seed that produced the accepted matrix
    int attempts = 0;
};

// Fills the free blocks with small random x1..xs-linear forms (coefficients
// in -2..2) and retries with bumped seeds until validation passes and the
// Fitting-height profile certifies exactly G_s (not G_{s+1}).
generated_instance make_column_instance(const instance_params& prm, const field_spec& field,
                                        std::uint64_t seed);
generated_instance make_row_instance(const instance_params& prm, const field_spec& field,
                                     std::uint64_t seed);

}  // namespace reeskit

#endif
