// Copyright 2026 The steinerqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace steinerqc::gf2 {

/** Packed GF(2) vector. Bit i lives in word i/64 at position i%64. */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool get(int i) const {
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1ULL;
  }

  void set(int i, bool v) {
    const std::uint64_t mask = 1ULL << (i % 64);
    if (v)
      words_[static_cast<std::size_t>(i) / 64] |= mask;
    else
      words_[static_cast<std::size_t>(i) / 64] &= ~mask;
  }

  BitVec& operator^=(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  int popcount() const;

  /** Index of the lowest set bit, or -1 when empty. */
  int first_set() const;

  /** Bits [lo, hi) packed into one word; requires hi - lo <= 64. */
  std::uint64_t extract(int lo, int hi) const;

  bool operator==(const BitVec&) const = default;
  auto operator<=>(const BitVec&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/**
 * One primitive row operation: row `tgt` becomes row `tgt` XOR row `src`.
 * Realised by the gate CNOT(control = src, target = tgt).
 */
struct RowOp {
  int src = 0;
  int tgt = 0;
  bool operator==(const RowOp&) const = default;
};

/**
 * Square invertible-by-intent matrix over GF(2); the semantic content of a
 * CNOT circuit acting on computational basis states (rows index output wires,
 * columns index input variables).
 */
class ParityMatrix {
 public:
  /** Zero matrix of dimension n >= 1. */
  explicit ParityMatrix(int n);

  static ParityMatrix identity(int n);

  /** Rows as strings of '0'/'1' characters, row-major, all of length n. */
  static ParityMatrix from_rows(const std::vector<std::string>& rows);

  int size() const { return n_; }
  bool get(int r, int c) const { return rows_[r].get(c); }
  void set(int r, int c, bool v) { rows_[r].set(c, v); }
  const BitVec& row(int r) const { return rows_[r]; }

  /** Applies op in place. Throws std::invalid_argument on bad indices. */
  void apply(RowOp op);

  bool is_identity() const;
  bool is_upper_triangular() const;

  /** Rank over GF(2), by plain elimination on a scratch copy. */
  int rank() const;

  ParityMatrix transposed() const;

  /** Throws SingularMatrixError if rank < n. */
  ParityMatrix inverse() const;

  /** Matrix product (*this) * rhs over GF(2). */
  ParityMatrix multiplied(const ParityMatrix& rhs) const;

  /** Matrix-vector product over GF(2). */
  BitVec apply_to(const BitVec& x) const;

  bool operator==(const ParityMatrix&) const = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<BitVec> rows_;
};

/** Pure flavour of ParityMatrix::apply. */
ParityMatrix row_add(ParityMatrix m, RowOp op);

/**
 * Deterministic random invertible matrix: 2*n^2 random row additions applied
 * to the identity, which preserves rank by construction.
 */
ParityMatrix random_invertible(int n, std::uint64_t seed);

/**
 * Plain Gauss-Jordan synthesis. Applying the returned operations in order
 * reduces p to the identity. Pivot choice: lowest row index with a 1 at or
 * below the diagonal. Throws SingularMatrixError.
 */
std::vector<RowOp> gauss_synthesize(const ParityMatrix& p);

/** Default section width for pmh_synthesize: ceil(log2(n)/2), at least 1. */
int default_pmh_block_size(int n);

/**
 * Blocked elimination after Patel, Markov and Hayes: duplicate sub-row
 * cancellation per column section brings the count to O(n^2 / log n).
 * block_size = 0 selects the default. Returned operations reduce p to the
 * identity, like gauss_synthesize.
 */
std::vector<RowOp> pmh_synthesize(const ParityMatrix& p, int block_size = 0);

}  // namespace steinerqc::gf2
