#pragma once

#include <vector>

#include "spf/partition.hpp"

namespace spf {

// Permutations of {0,..,d-1} in one-line notation: q[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int d);
Perm perm_compose(const Perm& s, const Perm& t);  // apply t first, then s
Perm perm_inverse(const Perm& s);
int perm_sign(const Perm& s);
bool is_identity(const Perm& s);

/// All d! permutations, lexicographic by one-line notation.
std::vector<Perm> all_perms(int d);

/// Adjacent transposition s_i = (i, i+1), 0-based i in [0, d-2].
Perm adjacent_transposition(int d, int i);

/// Word [i_1,...,i_k] with s = s_{i_1} ∘ ... ∘ s_{i_k}.
std::vector<int> adjacent_word(Perm s);

Partition cycle_type(const Perm& s);
/// One representative per cycle type of S_d.
std::vector<Perm> conjugacy_representatives(int d);

/// Indices i of the adjacent transpositions generating the Young subgroup
/// S_lambda (block-diagonal in the composition's blocks).
std::vector<int> young_subgroup_gens(const Composition& lam);

}  // namespace spf
