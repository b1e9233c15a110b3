#pragma once

#include <string>
#include <vector>

namespace cpaths {

// Integer shape/weight vectors. A Partition has weakly decreasing positive
// parts, a Composition allows arbitrary nonnegative parts, a Word is a
// sequence of positive letters.
using Partition = std::vector<int>;
using Composition = std::vector<int>;
using Word = std::vector<int>;

bool is_partition(const std::vector<int>& v);

long long size_of(const std::vector<int>& v);

// Letter multiplicities of w, indexed 1..max letter.
Composition content(const Word& w);

// Copy with trailing zeros removed.
std::vector<int> trimmed(const std::vector<int>& v);

Partition conjugate(const Partition& p);

// Dominance order on partitions of equal size.
bool dominates(const Partition& a, const Partition& b);

// n(mu) = sum_i (i-1) mu_i
long long n_stat(const Partition& mu);

long long binom2(long long n);  // n*(n-1)/2

// All partitions of n, in descending lexicographic order (a linear
// extension of dominance, largest first).
std::vector<Partition> partitions_of(int n);

// All compositions of n with positive parts.
std::vector<Composition> compositions_of(int n);

// All compositions of n into exactly k nonnegative parts.
std::vector<Composition> weak_compositions(int n, int k);

// All distinct words with the given content, lexicographic order.
std::vector<Word> words_with_content(const Composition& alpha);

std::vector<int> parse_int_list(const std::string& s);
std::string format_int_list(const std::vector<int>& v);

}  // namespace cpaths
