#pragma once

#include <cstddef>
#include <vector>

#include "stabpat/core.hpp"

namespace stabpat {

// w = x_1 X_1 x_2 X_2 ... X_{rho-1} x_rho, where every X_j is a maximal
// factor over the two letters {i, i+1}. Interior x_j are nonempty; x_1 and
// x_rho may be empty.
struct RunDecomposition {
  std::size_t index = 1;
  std::vector<Word> gaps; // x_1 ... x_rho
  std::vector<Word> runs; // X_1 ... X_{rho-1}

  std::size_t rho() const { return gaps.size(); }
  Word assemble() const;
  // Same gaps, with `replacement` runs (lengths must match).
  Word assemble(const std::vector<Word>& replacement) const;
};

Word reverse(const Word& w);

// (i,i+1).w: letters i and i+1 exchanged pointwise.
Word tau(const Word& w, std::size_t i);

RunDecomposition decompose(const Word& w, std::size_t i);

// tau_i(x_1 Y_1 ... Y_{rho-1} x_rho), where Y_1...Y_{rho-1} is the reversal
// of X_1...X_{rho-1} cut back into pieces of the original run lengths.
// Maps M* onto M_i* preserving the number of classical 12 (and 21).
Word psi(const Word& w, std::size_t i);

// tau_i(x_1 r(X_1) x_2 r(X_2) ... x_rho). Preserves ascents and descents.
Word phi(const Word& w, std::size_t i);

// Swaps i <-> i+1 inside every run except at fixed positions: runs of
// length three follow a fixed eight-entry table; other runs keep their first
// two letters when those are one i and one i+1, and likewise their last two.
// Preserves occurrences of monotone consecutive patterns.
Word theta(const Word& w, std::size_t i);

} // namespace stabpat
