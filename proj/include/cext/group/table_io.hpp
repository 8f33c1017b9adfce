#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cext/group/cochain.hpp"
#include "cext/group/finite_group.hpp"

namespace cext::group {

// Group table text format: first line m, then m lines of m indices
// (row g lists g*0 .. g*(m-1)); element 0 must be the identity.
//
// Cochain text format: first line "p n", then m^p values in row-major tuple
// order, whitespace-separated over any number of lines.
//
// Parse errors raise InputError with 1-based line/column.

FiniteGroup read_group_table(std::istream& in, const std::string& name = {});
FiniteGroup read_group_file(const std::filesystem::path& path);
void write_group_table(std::ostream& out, const FiniteGroup& group);

Cochain read_cochain(std::istream& in, std::size_t group_order);
Cochain read_cochain_file(const std::filesystem::path& path, std::size_t group_order);
void write_cochain(std::ostream& out, const Cochain& c);

}  // namespace cext::group
