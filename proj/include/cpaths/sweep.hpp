#pragma once

#include <functional>

#include "cpaths/crystal.hpp"
#include "cpaths/poly.hpp"

namespace cpaths {

using PathFilter = std::function<bool(const TensorPath&)>;
using PathStat = std::function<long long(const TensorPath&)>;
using PathStat2 = std::function<std::pair<long long, long long>(
    const TensorPath&)>;  // (q exponent, t exponent)

// Sum of q^{stat(p)} over all paths of the tensor product of the crystals
// B^{r_i,s_i} over {1..nletters} that pass the filter. A null filter
// accepts everything.
QPoly paths_gf_serial(const RectangleSequence& R, int nletters,
                      const PathFilter& filter, const PathStat& stat);
QPoly paths_gf_parallel(const RectangleSequence& R, int nletters,
                        const PathFilter& filter, const PathStat& stat,
                        int jobs = 0);
QPoly paths_gf(const RectangleSequence& R, int nletters,
               const PathFilter& filter, const PathStat& stat, int jobs = 0);

// Two-variable version: sum of q^a t^b over paths.
QTPoly paths_gf2_serial(const RectangleSequence& R, int nletters,
                        const PathFilter& filter, const PathStat2& stat);
QTPoly paths_gf2_parallel(const RectangleSequence& R, int nletters,
                          const PathFilter& filter, const PathStat2& stat,
                          int jobs = 0);
QTPoly paths_gf2(const RectangleSequence& R, int nletters,
                 const PathFilter& filter, const PathStat2& stat,
                 int jobs = 0);

// Visit every path serially (for exhaustive property tests).
void for_each_path(const RectangleSequence& R, int nletters,
                   const std::function<void(const TensorPath&)>& visit);

long long path_count(const RectangleSequence& R, int nletters);

}  // namespace cpaths
