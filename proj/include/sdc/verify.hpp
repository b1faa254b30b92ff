#ifndef SDC_VERIFY_HPP
#define SDC_VERIFY_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sdc/autsearch.hpp"
#include "sdc/code.hpp"
#include "sdc/modstruct.hpp"

namespace sdc {

inline constexpr const char* tool_version = "0.1.0";

// Per-code outcome of the pipeline over a database of putative extremal
// self-dual [36,18,8] codes.
struct code_record {
    std::string file;
    std::string label;

    bool parse_ok = false;
    std::string parse_error;

    bool shape_ok = false;  // n = 36, k = 18
    bool self_dual = false;
    std::size_t min_distance = 0;
    bool overcode_free_at_8 = false;     // no coset leader of weight >= 8

    // the cycle-type searches run only for codes that pass the checks
    // above; they are statements about genuine extremal codes
    bool searches_run = false;
    bool has_4_9_automorphism = false;   // cycle type 4^9
    bool has_5_7_1_automorphism = false; // cycle type 5^7,1

    bool meets_expectations = false;
    std::vector<std::string> failures;  // human-readable reasons
};

struct obstruction_record {
    std::string group;       // "Z8" or "Q8"
    std::size_t dim;
    std::size_t group_order;
    free_rank_result rank;   // non-integral fraction = the obstruction
    std::string rule;        // how freeness over the group is obtained
};

struct verification_report {
    std::string version;
    std::size_t code_count = 0;
    std::vector<code_record> codes;
    std::vector<obstruction_record> obstructions;

    // verdict name -> "reproduced" / "not reproduced"
    std::vector<std::pair<std::string, bool>> verdicts;

    bool all_reproduced() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Runs the whole pipeline over every .gen file in the directory (sorted by
// file name). Parse failures are collected per file and the run continues.
// Respects SDC_THREADS for the per-code stages.
verification_report verify_paper(const std::filesystem::path& dir);

// parallelism cap from SDC_THREADS (0 or unset = hardware default)
std::size_t thread_budget();

}  // namespace sdc

#endif
