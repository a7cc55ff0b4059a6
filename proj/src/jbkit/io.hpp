#pragma once

#include "jbkit/lie_pair.hpp"

#include <stdexcept>

namespace jbkit {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra files:
//   {"name": "...", "basis": [{"name": "...", "degree": 0}, ...],
//    "brackets": [[x, y, z, "p/q"], ...],            // [x,y] contains (p/q) z
//    "differential": [[x, y, "p/q"], ...],            // optional
//    "higher_brackets": {"3": [[x1,x2,x3, z, "p/q"], ...], ...}}  // optional
// Coefficients are quoted integers or rationals. Unlisted entries are zero;
// antisymmetric completions are inferred, and conflicting duplicates are
// errors.
AlgebraSpec parse_algebra(const std::string& json_text);
AlgebraSpec load_algebra(const std::string& path);

// Pair files: {"g": {...}, "h": {...}, "phi": [[a, b, "p/q"], ...],
//              "phi_higher": {"2": [[a1, a2, b, "p/q"], ...], ...}}  // optional
LiePair parse_pair(const std::string& json_text);
LiePair load_pair(const std::string& path);

// Atom/affine files: {"g": {...}, "h": {"basis": [...]},
//                     "action": [[a, m, m2, "p/q"], ...],
//                     "phi": [[a, m, "p/q"], ...]}
AtomData parse_atom(const std::string& json_text);
AtomData load_atom(const std::string& path);

// Taylor component tables as a deterministic JSON document.
std::string emit_taylor_tables(const LiePair& pair, const std::map<int, TaylorField>& fields,
                               int order);

// Serializes an algebra (for instance an exported cone structure) in the
// same file format parse_algebra reads, so emitted tables round-trip.
std::string emit_algebra(const AlgebraSpec& a);

std::string read_file(const std::string& path);

}  // namespace jbkit
