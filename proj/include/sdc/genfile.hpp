#ifndef SDC_GENFILE_HPP
#define SDC_GENFILE_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "sdc/code.hpp"

namespace sdc {

// GEN text format:
//   - optional '#'-prefixed comment lines (the first one, stripped of '#'
//     and surrounding spaces, is the code's label)
//   - one header line "n k" (ASCII decimals, single space)
//   - exactly k lines of exactly n characters from {0,1}
//   - LF line endings; trailing newline required on write, optional on read
struct code_file {
    std::string label;
    linear_code code;
};

struct gen_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

code_file parse_code_file(std::string_view text);
code_file load_code_file(const std::filesystem::path& path);

// canonical text: label comment (when nonempty), header, RREF rows
std::string write_code_file(const linear_code& c, std::string_view label = "");

}  // namespace sdc

#endif
