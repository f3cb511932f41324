#include "qbound/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

struct NumberedLine {
  std::size_t number;
  std::vector<long> values;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::vector<NumberedLine> tokenize_lines(std::istream& in) {
  std::vector<NumberedLine> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    NumberedLine line{number, {}};
    std::string token;
    while (ss >> token) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(token, &used);
      } catch (const std::exception&) {
        fail(number, "expected an integer, found '" + token + "'");
      }
      if (used != token.size()) fail(number, "expected an integer, found '" + token + "'");
      line.values.push_back(v);
    }
    if (!line.values.empty()) out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

BitMatrix parse_alist(std::istream& in) {
  const std::vector<NumberedLine> lines = tokenize_lines(in);
  std::size_t cursor = 0;
  auto next = [&](const char* what) -> const NumberedLine& {
    if (cursor >= lines.size()) {
      const std::size_t last = lines.empty() ? 0 : lines.back().number;
      fail(last + 1, std::string("unexpected end of file, expected ") + what);
    }
    return lines[cursor++];
  };

  const NumberedLine& dims = next("dimensions");
  if (dims.values.size() != 2 || dims.values[0] <= 0 || dims.values[1] <= 0) {
    fail(dims.number, "expected two positive integers N M");
  }
  const auto cols = static_cast<std::size_t>(dims.values[0]);
  const auto rows = static_cast<std::size_t>(dims.values[1]);

  const NumberedLine& maxima = next("maximum weights");
  if (maxima.values.size() != 2) fail(maxima.number, "expected two maximum weights");

  const NumberedLine& col_weights = next("column weights");
  if (col_weights.values.size() != cols) fail(col_weights.number, "expected " + std::to_string(cols) + " column weights");
  const NumberedLine& row_weights = next("row weights");
  if (row_weights.values.size() != rows) fail(row_weights.number, "expected " + std::to_string(rows) + " row weights");

  BitMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const NumberedLine& line = next("column list");
    std::size_t count = 0;
    for (long v : line.values) {
      if (v == 0) continue;
      if (v < 0 || static_cast<std::size_t>(v) > rows) fail(line.number, "row index " + std::to_string(v) + " out of range");
      if (m.get(static_cast<std::size_t>(v - 1), c)) fail(line.number, "duplicate row index " + std::to_string(v));
      m.set(static_cast<std::size_t>(v - 1), c);
      ++count;
    }
    if (static_cast<long>(count) != col_weights.values[c]) {
      fail(line.number, "column " + std::to_string(c + 1) + " lists " + std::to_string(count) +
                            " entries but its weight is " + std::to_string(col_weights.values[c]));
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const NumberedLine& line = next("row list");
    std::size_t count = 0;
    for (long v : line.values) {
      if (v == 0) continue;
      if (v < 0 || static_cast<std::size_t>(v) > cols) fail(line.number, "column index " + std::to_string(v) + " out of range");
      if (!m.get(r, static_cast<std::size_t>(v - 1))) {
        fail(line.number, "row " + std::to_string(r + 1) + " lists column " + std::to_string(v) +
                              " which the column lists do not contain");
      }
      ++count;
    }
    if (count != m.row_weight(r) || static_cast<long>(count) != row_weights.values[r]) {
      fail(line.number, "row " + std::to_string(r + 1) + " is inconsistent with the column lists or its weight");
    }
  }
  if (cursor != lines.size()) fail(lines[cursor].number, "unexpected trailing data");
  return m;
}

void write_alist(std::ostream& out, const BitMatrix& m) {
  const BitMatrix t = m.transpose();
  std::size_t max_col = 0;
  for (std::size_t c = 0; c < t.rows(); ++c) max_col = std::max(max_col, t.row_weight(c));
  out << m.cols() << ' ' << m.rows() << '\n';
  out << max_col << ' ' << m.max_row_weight() << '\n';
  for (std::size_t c = 0; c < t.rows(); ++c) out << (c ? " " : "") << t.row_weight(c);
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << (r ? " " : "") << m.row_weight(r);
  out << '\n';
  auto write_lists = [&out](const BitMatrix& rows_of, std::size_t width) {
    width = std::max<std::size_t>(width, 1);  // an empty line would be skipped on reading
    for (std::size_t i = 0; i < rows_of.rows(); ++i) {
      const auto support = rows_of.row(i).support();
      for (std::size_t k = 0; k < width; ++k) {
        if (k) out << ' ';
        out << (k < support.size() ? support[k] + 1 : 0);
      }
      out << '\n';
    }
  };
  write_lists(t, max_col);
  write_lists(m, m.max_row_weight());
}

BitMatrix parse_dense(std::istream& in) {
  std::vector<BitVector> rows;
  std::size_t cols = 0;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::string bits;
    bool comment = false;
    for (char ch : text) {
      if (ch == '#' && bits.empty()) {
        comment = true;
        break;
      }
      if (ch == '0' || ch == '1') {
        bits += ch;
      } else if (ch != ' ' && ch != '\t' && ch != '\r' && ch != ',') {
        fail(number, std::string("unexpected character '") + ch + "'");
      }
    }
    if (comment || bits.empty()) continue;
    if (rows.empty()) {
      cols = bits.size();
    } else if (bits.size() != cols) {
      fail(number, "row has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(cols));
    }
    rows.push_back(BitVector::from_string(bits));
  }
  if (rows.empty()) throw ValidationError("dense matrix file has no rows");
  return BitMatrix::from_rows(std::move(rows), cols);
}

void write_dense(std::ostream& out, const BitMatrix& m) { out << m.to_string(); }

BitMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path.string());
  try {
    if (path.extension() == ".alist") return parse_alist(in);
    return parse_dense(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_matrix(const std::filesystem::path& path, const BitMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write matrix file " + path.string());
  if (path.extension() == ".alist") {
    write_alist(out, m);
  } else {
    write_dense(out, m);
  }
}

}  // namespace qbound
