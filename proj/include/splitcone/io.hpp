#pragma once

#include "splitcone/cry.hpp"
#include "splitcone/metric.hpp"
#include "splitcone/split.hpp"

#include <string>

namespace splitcone {

// Thrown for malformed input files; the message names the offending
// line/field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV matrix: upper-triangular or full symmetric, optional header row.
DissimilarityMatrix matrix_from_csv(const std::string& text);
// JSON matrix: {"n": int, "delta": {"i,j": "p/q", ...}}.
DissimilarityMatrix matrix_from_json(const std::string& text);
// Dispatch by file extension (.json vs anything else = CSV).
DissimilarityMatrix load_matrix(const std::string& path);

// JSON split system: {"n": int, "splits": [[lo,hi],...]} or
// {"n": int, "splits_sets": [[[a,...],[b,...]],...]}.
SplitSystem system_from_json(const std::string& text);
SplitSystem load_system(const std::string& path);

// JSON CRY matrix: {"n": int, "x": [["p/q",...],...]} (row-major).
CRYMatrix cry_from_json(const std::string& text);
CRYMatrix load_cry(const std::string& path);

std::string read_file(const std::string& path);

} // namespace splitcone
