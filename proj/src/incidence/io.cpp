#include "incidence/io.hpp"

#include <fstream>
#include <sstream>

namespace incidence {

namespace {

// next meaningful line, with comments and blanks stripped
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

std::size_t parse_header(const std::string& line, const char* keyword) {
    std::istringstream is(line);
    std::string key;
    long long value = -1;
    if (!(is >> key >> value) || key != keyword || value < 1)
        throw ParseError(std::string("expected '") + keyword + " <count>' line");
    std::string extra;
    if (is >> extra) throw ParseError("trailing tokens after header");
    return static_cast<std::size_t>(value);
}

} // namespace

IncidenceStructure read_incidence(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing 'points' header");
    const std::size_t n1 = parse_header(line, "points");
    if (!next_line(in, line)) throw ParseError("missing 'blocks' header");
    const std::size_t n2 = parse_header(line, "blocks");

    IncidenceStructure d(n1, n2);
    for (std::size_t y = 0; y < n2; ++y) {
        if (!next_line(in, line)) {
            std::ostringstream os;
            os << "expected " << n2 << " block lines, found " << y;
            throw ParseError(os.str());
        }
        std::istringstream is(line);
        long long idx;
        while (is >> idx) {
            if (idx < 0 || idx >= static_cast<long long>(n1)) {
                std::ostringstream os;
                os << "block " << y << ": point index " << idx << " out of range";
                throw ParseError(os.str());
            }
            if (d.flags(static_cast<std::size_t>(idx), y)) {
                std::ostringstream os;
                os << "block " << y << ": duplicate point " << idx;
                throw ParseError(os.str());
            }
            d.flags(static_cast<std::size_t>(idx), y) = 1;
        }
        if (!is.eof()) {
            std::ostringstream os;
            os << "block " << y << ": malformed point index";
            throw ParseError(os.str());
        }
    }
    std::string extra;
    if (next_line(in, extra)) throw ParseError("trailing content after last block");
    return d;
}

IncidenceStructure read_incidence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_incidence(in);
}

void write_incidence(std::ostream& out, const IncidenceStructure& d) {
    out << "points " << d.n_points << "\n";
    out << "blocks " << d.n_blocks << "\n";
    for (std::size_t y = 0; y < d.n_blocks; ++y) {
        bool first = true;
        for (std::size_t x = 0; x < d.n_points; ++x) {
            if (!d.flags(x, y)) continue;
            if (!first) out << ' ';
            out << x;
            first = false;
        }
        out << '\n';
    }
}

void write_incidence_file(const std::string& path, const IncidenceStructure& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_incidence(out, d);
    if (!out) throw ParseError("write failed: " + path);
}

} // namespace incidence
