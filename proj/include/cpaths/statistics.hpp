#pragma once

#include "cpaths/crystal.hpp"

namespace cpaths {

// maj of a plain word: sum of (L - i) over positions i with a_i < a_{i+1}.
long long word_maj(const Word& a);
// tau of a plain word: maj of the word with a 1 prepended.
long long word_tau(const Word& a);

// Charge of a word via repeated extraction of standard subwords (rightmost
// 1, then each next letter scanning rightward cyclically; a wrap adds one
// to the index). Throws std::domain_error when a round finds letters left
// but no smallest letter to start from.
long long charge(const Word& w);
long long cocharge(const Word& w);  // n(sorted content) - charge
// Charge of a path with single-row factors: charge of the reading word of
// its tabloid.
long long charge_path(const TensorPath& p);

// Intrinsic statistics of a tensor path, accumulated while moving each
// factor to the front through the combinatorial R.
long long maj_stat(const TensorPath& p);
long long ebar_stat(const TensorPath& p);
// maj of u^{(r)}_s tensor p.
long long tau_rs(const TensorPath& p, int r, int s);
long long tau_stat(const TensorPath& p);  // r = s = 1

// Consecutive blocks of lengths mu_1, mu_2, ... (must sum to |a|).
std::vector<Word> mu_blocks(const Word& a, const Composition& mu);
long long tau_mu(const Word& a, const Composition& mu);
long long c_mu(const Word& a, const Composition& mu);

// Filling whose row i is the i-th mu-block reversed.
Tabloid haglund_filling(const Word& a, const Composition& mu);
// Raw inversion count: attackers of (i,j) are (i,k) with k < j and
// (i+1,k) with k > j; an attacker counts when its entry exceeds t_{ij}.
long long haglund_inv_count(const Tabloid& t);
// Sum of (mu_i - j) over cells (i,j), i >= 2, with t_{(i-1)j} < t_{ij}.
long long haglund_des(const Tabloid& t);
long long haglund_inv(const Tabloid& t);  // inv_count - des
// Sum of word_maj over columns read top to bottom.
long long haglund_maj(const Tabloid& t);
// Word-level formulas for the same counts, used as cross-checks.
long long haglund_inv_count_word(const Word& a, const Composition& mu);
long long haglund_des_word(const Word& a, const Composition& mu);

// Prepend (1..n-1)^{w_n} (1..n-2)^{w_{n-1}} ... 1^{w_2} to the word, where
// w is its letter content and n its alphabet size.
Word regularize(const Word& p);

}  // namespace cpaths
