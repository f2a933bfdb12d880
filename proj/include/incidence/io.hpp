#pragma once

#include "incidence/incidence.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace incidence {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incidence-file format:
///   points <n1>
///   blocks <n2>
/// followed by one line per block listing its 0-based point indices in
/// ascending order. Blank lines and '#' comments are ignored. Out-of-range
/// indices and duplicate points within a block are rejected.
IncidenceStructure read_incidence(std::istream& in);
IncidenceStructure read_incidence_file(const std::string& path);

void write_incidence(std::ostream& out, const IncidenceStructure& d);
void write_incidence_file(const std::string& path, const IncidenceStructure& d);

} // namespace incidence
