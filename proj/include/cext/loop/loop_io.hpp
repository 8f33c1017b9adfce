#pragma once

#include <filesystem>
#include <iosfwd>

#include "cext/loop/discrete_loop.hpp"

namespace cext::loop {

// Loop file: header "n N", then N blocks of n*n complex entries, each entry
// a "re im" pair, row-major within a block. Whitespace layout is free.
// Samples must lie in SU(n) within the group tolerance.

DiscreteLoop read_loop(std::istream& in);
DiscreteLoop read_loop_file(const std::filesystem::path& path);
/// Writes with 17 significant digits, so read_loop(write_loop(g)) == g.
void write_loop(std::ostream& out, const DiscreteLoop& loop);

}  // namespace cext::loop
