#ifndef DISCJET_ACCEPTANCE_HPP
#define DISCJET_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace discjet
{

struct criterion_result
{
    int id = 0;
    std::string title;
    bool passed = false;
    // Counts and failing cases; never contains timings so reports are reproducible.
    std::string detail;
};

struct acceptance_options
{
    std::uint64_t seed = 1;
    // Directory holding coproduct_n1_c4.json.
    std::string golden_dir;
    // Criteria to run; empty runs all ten. Criterion 10 repeats the selected others.
    std::vector<int> only;
};

// Runs the selected criteria in increasing order.
std::vector<criterion_result> run_acceptance(const acceptance_options &options);

// One "PASS"/"FAIL" line per criterion followed by its detail lines.
std::string format_report(const std::vector<criterion_result> &results);

bool all_passed(const std::vector<criterion_result> &results);

} // namespace discjet

#endif
