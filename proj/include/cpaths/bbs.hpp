#pragma once

#include "cpaths/crystal.hpp"

namespace cpaths {

struct CarrierStep {
  TensorPath next;
  RectTableau carrier;  // final carrier state
};

// One time evolution of the path: thread the carrier u^{(a)}_l through the
// factors, replacing each via the combinatorial R.
CarrierStep carrier_step(const TensorPath& p, int a, int l);

// Stable evolution T_infinity: raise l until two consecutive results agree.
TensorPath t_infinity(const TensorPath& p, int a = 1);

// One Takahashi-Satsuma step on a letter word: every ball (letter > 1)
// moves once to the nearest empty box (letter 1) on its right; labels are
// processed from the largest down to 2, leftmost ball first. Throws
// std::runtime_error when a ball runs off the right end; callers pad with
// trailing 1s.
Word takahashi_satsuma(const Word& w);

std::vector<Word> ts_evolution(const Word& w, int steps);
std::vector<TensorPath> carrier_evolution(const TensorPath& p, int a, int l,
                                          int steps);

// Sum over t = 0..L-1 of the number of balls still inside the original
// window [1..L] of T^t(w), where L = |w| and T is the Takahashi-Satsuma
// step on a sufficiently padded word.
long long soliton_tau(const Word& w);

}  // namespace cpaths
