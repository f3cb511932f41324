#include "qbound/bitmatrix.hpp"

#include <algorithm>
#include <bit>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

std::size_t words_for(std::size_t len) { return (len + BitVector::kWordBits - 1) / BitVector::kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0) v.set(i);
    ++i;
  }
  return v;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ValidationError("bit string contains a character other than 0/1");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
  BitVector v(len);
  v.set(index);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return len_;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.len_ != len_) throw ValidationError("dot: length mismatch");
  Word acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    Word w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.len_ != len_) throw ValidationError("xor: length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(len_ + tail.len_);
  for (std::size_t i : support()) out.set(i);
  for (std::size_t i : tail.support()) out.set(len_ + i);
  return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > len_) throw ValidationError("slice: range out of bounds");
  BitVector out(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (get(i)) out.set(i - begin);
  }
  return out;
}

std::size_t BitVector::hash() const {
  // FNV-style mix over words, seeded with the length.
  std::size_t h = 1469598103934665603ULL ^ len_;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    h *= 1099511628211ULL;
  }
  return h;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw ValidationError("from_rows: row length does not match column count");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string> rows) {
  std::vector<BitVector> out;
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& s : rows) out.push_back(BitVector::from_string(s));
  return from_rows(std::move(out), cols);
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) out.set(r);
  }
  return out;
}

std::size_t BitMatrix::max_row_weight() const {
  std::size_t w = 0;
  for (const auto& r : rows_) w = std::max(w, r.weight());
  return w;
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
  std::size_t w = 0;
  for (const auto& r : rows_) w += r.get(c) ? 1 : 0;
  return w;
}

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (cols_ != other.rows()) throw ValidationError("multiply: inner dimensions differ");
  BitMatrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k : rows_[r].support()) out.rows_[r] ^= other.rows_[k];
  }
  return out;
}

BitMatrix BitMatrix::multiply_transpose(const BitMatrix& other) const {
  if (cols_ != other.cols()) throw ValidationError("multiply_transpose: column counts differ");
  BitMatrix out(rows(), other.rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t s = 0; s < other.rows(); ++s) {
      if (rows_[r].dot(other.rows_[s])) out.set(r, s);
    }
  }
  return out;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw ValidationError("multiply: vector length does not match column count");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(x)) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& right) const {
  if (rows() != right.rows()) throw ValidationError("hstack: row counts differ");
  std::vector<BitVector> out;
  out.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.push_back(rows_[r].concat(right.rows_[r]));
  return from_rows(std::move(out), cols_ + right.cols_);
}

BitMatrix BitMatrix::vstack(const BitMatrix& below) const {
  if (rows() != 0 && below.rows() != 0 && cols_ != below.cols_) {
    throw ValidationError("vstack: column counts differ");
  }
  std::vector<BitVector> out = rows_;
  out.insert(out.end(), below.rows_.begin(), below.rows_.end());
  return from_rows(std::move(out), rows() != 0 ? cols_ : below.cols_);
}

BitMatrix BitMatrix::column_block(std::size_t begin, std::size_t end) const {
  std::vector<BitVector> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.slice(begin, end));
  return from_rows(std::move(out), end - begin);
}

BitMatrix BitMatrix::row_reduced() const {
  std::vector<BitVector> work = rows_;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < work.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < work.size() && !work[sel].get(c)) ++sel;
    if (sel == work.size()) continue;
    std::swap(work[pivot_row], work[sel]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != pivot_row && work[r].get(c)) work[r] ^= work[pivot_row];
    }
    ++pivot_row;
  }
  work.resize(pivot_row);
  return from_rows(std::move(work), cols_);
}

std::size_t BitMatrix::rank() const { return row_reduced().rows(); }

std::vector<BitVector> BitMatrix::kernel_basis() const {
  const BitMatrix rref = row_reduced();
  std::vector<std::size_t> pivots;
  pivots.reserve(rref.rows());
  for (std::size_t r = 0; r < rref.rows(); ++r) pivots.push_back(rref.row(r).first_set());

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_);
    v.set(free);
    for (std::size_t r = 0; r < rref.rows(); ++r) {
      if (rref.get(r, free)) v.set(pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool BitMatrix::row_space_contains(const BitVector& x) const {
  if (x.size() != cols_) throw ValidationError("row_space_contains: vector length does not match column count");
  return RowSpaceBasis(*this).contains(x);
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t ca : a.row(ra).support()) {
      for (std::size_t rb = 0; rb < b.rows(); ++rb) {
        for (std::size_t cb : b.row(rb).support()) {
          out.set(ra * b.rows() + rb, ca * b.cols() + cb);
        }
      }
    }
  }
  return out;
}

RowSpaceBasis::RowSpaceBasis(const BitMatrix& m) : cols_(m.cols()) {
  const BitMatrix rref = m.row_reduced();
  for (std::size_t r = 0; r < rref.rows(); ++r) {
    basis_.push_back(rref.row(r));
    pivots_.push_back(rref.row(r).first_set());
  }
}

bool RowSpaceBasis::contains(BitVector x) const {
  if (x.size() != cols_) throw ValidationError("row space membership: vector length does not match");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (x.get(pivots_[i])) x ^= basis_[i];
  }
  return x.is_zero();
}

}  // namespace qbound
