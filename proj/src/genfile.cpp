#include "sdc/genfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sdc {

namespace {

// trailing newline optional; everything else is strict
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

code_file parse_code_file(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    std::size_t li = 0;

    std::string label;
    while (li < lines.size() && !lines[li].empty() && lines[li].front() == '#') {
        if (label.empty()) label = std::string(trim(lines[li].substr(1)));
        ++li;
    }

    if (li >= lines.size()) throw gen_parse_error("missing header line");
    std::string_view header = lines[li];
    std::size_t n = 0, k = 0;
    {
        const char* b = header.data();
        const char* e = b + header.size();
        auto r1 = std::from_chars(b, e, n);
        if (r1.ec != std::errc() || r1.ptr == e || *r1.ptr != ' ')
            throw gen_parse_error("bad header line '" + std::string(header) + "' (expected \"n k\")");
        auto r2 = std::from_chars(r1.ptr + 1, e, k);
        if (r2.ec != std::errc() || r2.ptr != e)
            throw gen_parse_error("bad header line '" + std::string(header) + "' (expected \"n k\")");
    }
    if (n == 0) throw gen_parse_error("header: length must be positive");
    if (k > n) throw gen_parse_error("header: dimension exceeds length");
    ++li;

    std::vector<bit_vector> rows;
    for (std::size_t r = 0; r < k; ++r, ++li) {
        if (li >= lines.size())
            throw gen_parse_error("row " + std::to_string(r + 1) + ": missing (expected " +
                                  std::to_string(k) + " rows)");
        std::string_view line = lines[li];
        if (line.size() != n)
            throw gen_parse_error("row " + std::to_string(r + 1) + ": length " +
                                  std::to_string(line.size()) + " differs from n = " +
                                  std::to_string(n));
        for (char ch : line)
            if (ch != '0' && ch != '1')
                throw gen_parse_error("row " + std::to_string(r + 1) +
                                      ": character outside {0,1}");
        rows.push_back(bit_vector::from_string(line));
    }
    if (li != lines.size()) throw gen_parse_error("trailing content after the generator rows");

    code_file cf;
    cf.label = std::move(label);
    if (k == 0) {
        cf.code = linear_code::zero(n);
        return cf;
    }

    // declared dimension must be the rank; name the offending rows
    bit_matrix rref(0, n);
    std::vector<std::size_t> dependent;
    for (std::size_t r = 0; r < k; ++r) {
        if (contains(rref, rows[r]))
            dependent.push_back(r + 1);
        else
            rref = reduce_rref(bit_matrix::from_rows(
                                   [&] {
                                       std::vector<bit_vector> v = rref.row_data();
                                       v.push_back(rows[r]);
                                       return v;
                                   }()))
                       .mat;
    }
    if (!dependent.empty()) {
        std::string msg = "rank " + std::to_string(k - dependent.size()) +
                          " differs from declared k = " + std::to_string(k) +
                          " (dependent rows:";
        for (std::size_t r : dependent) msg += ' ' + std::to_string(r);
        throw gen_parse_error(msg + ")");
    }

    cf.code = linear_code::from_generators(rows);
    return cf;
}

code_file load_code_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gen_parse_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_code_file(ss.str());
    } catch (const gen_parse_error& e) {
        throw gen_parse_error(path.string() + ": " + e.what());
    }
}

std::string write_code_file(const linear_code& c, std::string_view label) {
    std::string out;
    if (!label.empty()) {
        out += "# ";
        out += label;
        out += '\n';
    }
    out += std::to_string(c.n()) + ' ' + std::to_string(c.k()) + '\n';
    for (std::size_t i = 0; i < c.k(); ++i) {
        out += c.generator().row(i).to_string();
        out += '\n';
    }
    return out;
}

}  // namespace sdc
