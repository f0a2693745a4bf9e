#pragma once

#include <cstddef>
#include <string_view>

namespace dyckolab {

// Safety caps shared by the O(n^2) scans, enumerations and family builders.
//
// Defaults can be overridden with the DYCKOLAB_CAP environment variable, a
// comma separated list of key=value pairs, e.g.
//
//     DYCKOLAB_CAP="scan=200000,seventhirds_t=4"
//
// A bare integer is shorthand for scan=<integer>.
struct Caps {
    std::size_t scan = 100'000;          // longest word accepted by factor-exponent scans
    std::size_t enum_nodes = 50'000'000; // DFS nodes visited per enumeration
    std::size_t enum_len = 200;          // longest enumeration depth
    std::size_t census_prefix = std::size_t{1} << 24; // longest prefix a census may materialize
    unsigned cubefree_t = 8;
    unsigned seventhirds_t = 3;
    unsigned seventhirds_t_optin = 4;
    unsigned rs_n = 7;

    /// Applies a DYCKOLAB_CAP style specification on top of the current values.
    /// Throws ParseError on unknown keys or malformed numbers.
    void apply(std::string_view spec);
};

/// Process-wide caps, initialized from DYCKOLAB_CAP on first use.
const Caps& caps();

/// Replaces the process-wide caps (tests and the CLI use this).
void set_caps(const Caps& c);

} // namespace dyckolab
