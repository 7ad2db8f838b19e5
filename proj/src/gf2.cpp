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

#include "steinerqc/gf2.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "steinerqc/errors.hpp"
#include "steinerqc/rng.hpp"

namespace steinerqc::gf2 {

int BitVec::popcount() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

int BitVec::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

std::uint64_t BitVec::extract(int lo, int hi) const {
  const int width = hi - lo;
  if (width <= 0) return 0;
  const std::size_t w = static_cast<std::size_t>(lo) / 64;
  const int off = lo % 64;
  std::uint64_t chunk = words_[w] >> off;
  if (off != 0 && w + 1 < words_.size()) chunk |= words_[w + 1] << (64 - off);
  if (width < 64) chunk &= (1ULL << width) - 1;
  return chunk;
}

ParityMatrix::ParityMatrix(int n) : n_(n), rows_(n, BitVec(n)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

ParityMatrix ParityMatrix::identity(int n) {
  ParityMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i].set(i, true);
  return m;
}

ParityMatrix ParityMatrix::from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  ParityMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("row length does not match dimension");
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw std::invalid_argument("rows must be 0/1");
      m.rows_[i].set(j, c == '1');
    }
  }
  return m;
}

void ParityMatrix::apply(RowOp op) {
  if (op.src < 0 || op.src >= n_ || op.tgt < 0 || op.tgt >= n_)
    throw std::invalid_argument("row index out of range");
  if (op.src == op.tgt) throw std::invalid_argument("row op src must differ from tgt");
  rows_[op.tgt] ^= rows_[op.src];
}

bool ParityMatrix::is_identity() const {
  return *this == identity(n_);
}

bool ParityMatrix::is_upper_triangular() const {
  for (int r = 1; r < n_; ++r)
    for (int c = 0; c < r; ++c)
      if (get(r, c)) return false;
  return true;
}

int ParityMatrix::rank() const {
  std::vector<BitVec> m = rows_;
  int r = 0;
  for (int c = 0; c < n_ && r < n_; ++c) {
    int piv = -1;
    for (int i = r; i < n_; ++i) {
      if (m[i].get(c)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < n_; ++i)
      if (i != r && m[i].get(c)) m[i] ^= m[r];
    ++r;
  }
  return r;
}

ParityMatrix ParityMatrix::transposed() const {
  ParityMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

ParityMatrix ParityMatrix::inverse() const {
  std::vector<BitVec> m = rows_;
  ParityMatrix inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int i = c; i < n_; ++i) {
      if (m[i].get(c)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw SingularMatrixError("matrix is singular");
    std::swap(m[c], m[piv]);
    std::swap(inv.rows_[c], inv.rows_[piv]);
    for (int i = 0; i < n_; ++i) {
      if (i != c && m[i].get(c)) {
        m[i] ^= m[c];
        inv.rows_[i] ^= inv.rows_[c];
      }
    }
  }
  return inv;
}

ParityMatrix ParityMatrix::multiplied(const ParityMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
  ParityMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      if (get(i, k)) out.rows_[i] ^= rhs.rows_[k];
  return out;
}

BitVec ParityMatrix::apply_to(const BitVec& x) const {
  BitVec out(n_);
  for (int i = 0; i < n_; ++i) {
    BitVec prod = rows_[i];
    int parity = 0;
    for (int j = 0; j < n_; ++j)
      if (prod.get(j) && x.get(j)) parity ^= 1;
    out.set(i, parity != 0);
  }
  return out;
}

std::string ParityMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s += get(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

ParityMatrix row_add(ParityMatrix m, RowOp op) {
  m.apply(op);
  return m;
}

ParityMatrix random_invertible(int n, std::uint64_t seed) {
  ParityMatrix m = ParityMatrix::identity(n);
  if (n < 2) return m;
  rng::SplitMix64 g(rng::derive_seed(seed, "random-invertible", 0));
  for (int i = 0; i < 2 * n * n; ++i) {
    const int src = static_cast<int>(g.below(n));
    int tgt = static_cast<int>(g.below(n - 1));
    if (tgt >= src) ++tgt;
    m.apply({src, tgt});
  }
  return m;
}

std::vector<RowOp> gauss_synthesize(const ParityMatrix& p) {
  const int n = p.size();
  ParityMatrix m = p;
  std::vector<RowOp> ops;
  auto emit = [&](int src, int tgt) {
    m.apply({src, tgt});
    ops.push_back({src, tgt});
  };
  for (int c = 0; c < n; ++c) {
    if (!m.get(c, c)) {
      int piv = -1;
      for (int i = c + 1; i < n; ++i) {
        if (m.get(i, c)) {
          piv = i;
          break;
        }
      }
      if (piv < 0) throw SingularMatrixError("matrix is singular");
      emit(piv, c);
    }
    for (int i = 0; i < n; ++i)
      if (i != c && m.get(i, c)) emit(c, i);
  }
  return ops;
}

int default_pmh_block_size(int n) {
  const int b = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / 2.0));
  return b < 1 ? 1 : b;
}

namespace {

// Section-blocked lower elimination. Leaves m upper triangular; when m starts
// lower triangular with unit diagonal the result is exactly the identity,
// because every emitted op then has src < tgt.
std::vector<RowOp> lower_eliminate(ParityMatrix& m, int block_size) {
  const int n = m.size();
  std::vector<RowOp> ops;
  auto emit = [&](int src, int tgt) {
    m.apply({src, tgt});
    ops.push_back({src, tgt});
  };
  for (int lo = 0; lo < n; lo += block_size) {
    const int hi = std::min(lo + block_size, n);
    std::unordered_map<std::uint64_t, int> first_with_chunk;
    for (int r = lo; r < n; ++r) {
      const std::uint64_t chunk = m.row(r).extract(lo, hi);
      if (chunk == 0) continue;
      auto [it, inserted] = first_with_chunk.try_emplace(chunk, r);
      if (!inserted) emit(it->second, r);
    }
    for (int col = lo; col < hi; ++col) {
      if (!m.get(col, col)) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i) {
          if (m.get(i, col)) {
            piv = i;
            break;
          }
        }
        if (piv < 0) throw SingularMatrixError("matrix is singular");
        emit(piv, col);
      }
      for (int i = col + 1; i < n; ++i)
        if (m.get(i, col)) emit(col, i);
    }
  }
  return ops;
}

}  // namespace

std::vector<RowOp> pmh_synthesize(const ParityMatrix& p, int block_size) {
  const int n = p.size();
  if (block_size == 0) block_size = default_pmh_block_size(n);
  if (block_size < 1 || block_size > 64)
    throw std::invalid_argument("block size must be in [1, 64]");

  ParityMatrix m = p;
  std::vector<RowOp> ops = lower_eliminate(m, block_size);

  // The upper part is eliminated on the transpose, where it appears as a
  // lower-triangular system and the same blocking applies. A row op (s, t) on
  // the transpose acts on the original as the left-multiplier I + e_s e_t^T,
  // so the equivalent row-op trace is the reversed list with src/tgt swapped.
  ParityMatrix mt = m.transposed();
  std::vector<RowOp> upper = lower_eliminate(mt, block_size);
  if (!mt.is_identity())
    throw std::logic_error("transpose pass did not terminate at identity");
  for (auto it = upper.rbegin(); it != upper.rend(); ++it)
    ops.push_back({it->tgt, it->src});
  return ops;
}

}  // namespace steinerqc::gf2
