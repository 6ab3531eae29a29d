#pragma once

#include "burnside/ring.hpp"

namespace burnside {

// Dense bit-packed GF(2) matrix.
class BitMatrix {
 public:
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(size_t(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (data_[size_t(r) * words_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void flip(int r, int c) {
    data_[size_t(r) * words_ + (c >> 6)] ^= uint64_t(1) << (c & 63);
  }
  void xor_rows(int dst, int src) {
    for (int w = 0; w < words_; ++w)
      data_[size_t(dst) * words_ + w] ^= data_[size_t(src) * words_ + w];
  }
  void append_row() {
    ++rows_;
    data_.resize(size_t(rows_) * words_, 0);
  }

 private:
  int rows_, cols_, words_;
  std::vector<uint64_t> data_;
};

// Basis of {x : M x = 0} over GF(2); each vector as a 0/1 mask.
std::vector<std::vector<char>> gf2_nullspace(BitMatrix m);
int gf2_rank(BitMatrix m);
// Is v in the row span of the given vectors?
bool gf2_in_span(const std::vector<std::vector<char>>& span,
                 const std::vector<char>& v);

struct UnitGroupBasis {
  RingTag tag = RingTag::slice;
  int dimension = 0;
  std::vector<RingElement> basis;       // each squares to 1
  std::vector<std::vector<char>> sign_vectors;  // lambda rows over GF(2):
                                                // 1 means ghost value -1
};

// The 4-term GF(2) constraint system over class-indexed unknowns: for
// every class representative (T,S) and all g,h in N_G(T,S)/S,
//   l(<ghT>,<ghS>) + l(<gT>,<gS>) + l(<hT>,<hS>) + l(T,S) = 0,
// with normal closure applied in the section ring.
BitMatrix unit_constraints(const RingContext& ctx, RingTag tag);

// Nullspace basis pulled back through the ghost map to ring elements.
UnitGroupBasis unit_group(const RingContext& ctx, RingTag tag);

// Ring element with ghost vector (-1)^lambda.
RingElement unit_from_signs(const RingContext& ctx,
                            const std::vector<char>& lambda, RingTag tag);

// The closed-form basis for abelian G: -1 and, per index-2 subgroup S,
// 1 - <S,S> and 1 - <G,S>.
UnitGroupBasis abelian_unit_basis(const RingContext& ctx);

// Span of -1 and the 1 - <S,S>: the image of B(G)^x, dimension r+1.
UnitGroupBasis ordinary_unit_subgroup(const RingContext& ctx);

// All three equivalent conditions are evaluated and must agree:
// ghost values in {+-1}, u^2 = 1, and sign vector solving the
// constraint system.
bool verify_unit(const RingContext& ctx, const RingElement& u);

}  // namespace burnside
