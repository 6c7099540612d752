#ifndef NRACOV_STATS_HPP
#define NRACOV_STATS_HPP

#include <cstddef>
#include <string>

namespace nracov {

/// Per-instance solver counters.
struct Stats {
    size_t implicants_generated = 0;
    size_t implicants_used = 0;
    size_t cells_characterized = 0;
    size_t samples_tried = 0;
    size_t resultants_computed = 0;

    std::string str() const {
        return "implicants_generated=" + std::to_string(implicants_generated) +
               "\nimplicants_used=" + std::to_string(implicants_used) +
               "\ncells_characterized=" + std::to_string(cells_characterized) +
               "\nsamples_tried=" + std::to_string(samples_tried) +
               "\nresultants_computed=" + std::to_string(resultants_computed) + "\n";
    }
};

} // namespace nracov

#endif
