#pragma once

#include <utility>
#include <vector>

#include "liftline/digraph.hpp"
#include "liftline/expansion.hpp"

namespace liftline {

/// Fixed-length word over a finite alphabet of distinct integer symbols.
struct Word {
  std::vector<int> alphabet;
  std::vector<int> symbols;

  Word(std::vector<int> alphabet, std::vector<int> symbols);
  int length() const { return static_cast<int>(symbols.size()); }
  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;
};

std::vector<int> contiguous_alphabet(int d);  // {0, .., d-1}

/// De Bruijn digraph on length-k words over the given alphabet; adjacency by
/// left shift with a free new last symbol. Vertices in lexicographic order
/// (alphabet order as given), arcs vertex-major with the new symbol ascending.
Digraph de_bruijn(const std::vector<int>& alphabet, int k);

/// Kautz digraph K(d, k): length-k words over Z_{d+1} with distinct
/// consecutive symbols; left-shift adjacency with the new symbol != last.
Digraph kautz(int d, int k);

/// De Bruijn digraph in difference coordinates b1;b2..bk over Z_d (k >= 2):
/// b1;b2..bk -> b1+b2;b3..bk,c for every c in Z_d.
Digraph alt_de_bruijn(int d, int k);

/// Kautz digraph in difference coordinates a;b2..bk with a in Z_{d+1} and
/// b_i in Z_{d+1}\{0} (k >= 2): a;b2..bk -> a+b2;b3..bk,c for every c != 0.
Digraph alt_kautz(int d, int k);

/// A word split into its first symbol and the word of consecutive differences.
struct DiffCoords {
  int prefix = 0;
  Word diffs;
};

/// x1 x2 .. xk  ->  x1 ; (x2-x1) .. (xk-x_{k-1}), arithmetic mod the alphabet
/// size. Requires the alphabet to be {0, .., m-1}.
DiffCoords to_diff_coords(const Word& w);

/// Inverse: prefix plus running partial sums of the differences, mod m.
Word from_diff_coords(int prefix, const Word& diffs);

/// Consecutive differences of a Kautz word: maps a length-k word over Z_{d+1}
/// with distinct consecutive symbols onto a length-(k-1) word over
/// {1, .., d}. This is a digraph homomorphism K(d, k) -> B on that alphabet.
Word kautz_to_de_bruijn(const Word& w);

/// Base digraph B(d, k) over Z_d plus the Z_d voltage (first symbol of each
/// arc's (k+1)-word) whose lift is B(d, k+1).
std::pair<Digraph, VoltageAssignment> de_bruijn_lift_voltage(int d, int k);

/// Base De Bruijn digraph on alphabet {1, .., d} plus the Z_{d+1} voltage
/// (first symbol of each arc word) whose lift is K(d, k+1).
std::pair<Digraph, VoltageAssignment> kautz_lift_voltage(int d, int k);

}  // namespace liftline
