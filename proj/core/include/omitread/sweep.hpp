#pragma once

#include <functional>
#include <string>
#include <vector>

namespace omitread {

// Tabular sweep output. Values are printed with 12 significant digits;
// the warning field is the trailing CSV column (never contains commas).
struct SweepRow {
    std::vector<double> values;
    std::string warnings;
};

struct SweepResult {
    std::vector<std::string> columns; // includes the trailing "warnings"
    std::vector<SweepRow> rows;

    bool any_errors = false; // at least one row recorded a per-point error

    std::string to_csv() const;
};

// Formats a double with 12 significant digits, locale-independent.
std::string format_value(double x);

// Runs fn(i) for i in [0, n) on a bounded worker pool; results land in
// input order regardless of scheduling. jobs <= 0 picks the hardware
// concurrency. Values are bit-identical to a serial run.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace omitread
