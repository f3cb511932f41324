#pragma once

#include <filesystem>
#include <iosfwd>

#include "qbound/bitmatrix.hpp"

namespace qbound {

/// MacKay alist: "N M", max weights, column weights, row weights, then
/// one 1-based row list per column and one 1-based column list per row.
/// Zero padding is accepted. Errors carry the 1-based line number.
BitMatrix parse_alist(std::istream& in);
void write_alist(std::ostream& out, const BitMatrix& m);

/// One row per line, entries '0'/'1' optionally separated by whitespace.
/// Blank lines and lines starting with '#' are ignored.
BitMatrix parse_dense(std::istream& in);
void write_dense(std::ostream& out, const BitMatrix& m);

/// Picks the format from the extension: ".alist" is alist, anything else
/// dense.
BitMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const BitMatrix& m);

}  // namespace qbound
