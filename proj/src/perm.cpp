#include "spf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spf {

Perm perm_identity(int d) {
    Perm s(d);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

Perm perm_compose(const Perm& s, const Perm& t) {
    Perm q(s.size());
    for (size_t i = 0; i < s.size(); ++i) q[i] = s[t[i]];
    return q;
}

Perm perm_inverse(const Perm& s) {
    Perm q(s.size());
    for (size_t i = 0; i < s.size(); ++i) q[s[i]] = int(i);
    return q;
}

int perm_sign(const Perm& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

bool is_identity(const Perm& s) {
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != int(i)) return false;
    return true;
}

std::vector<Perm> all_perms(int d) {
    std::vector<Perm> out;
    Perm s = perm_identity(d);
    do {
        out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

Perm adjacent_transposition(int d, int i) {
    if (i < 0 || i + 1 >= d) throw std::invalid_argument("adjacent_transposition: bad index");
    Perm s = perm_identity(d);
    std::swap(s[i], s[i + 1]);
    return s;
}

std::vector<int> adjacent_word(Perm s) {
    std::vector<int> rec;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] > s[i + 1]) {
                // multiply on the right by s_i
                std::swap(s[i], s[i + 1]);
                rec.push_back(int(i));
                changed = true;
            }
        }
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
}

Partition cycle_type(const Perm& s) {
    std::vector<bool> seen(s.size(), false);
    Partition type;
    for (size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = size_t(s[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

std::vector<Perm> conjugacy_representatives(int d) {
    std::vector<Perm> out;
    for (const Partition& type : partitions_of(d)) {
        Perm s(d);
        int pos = 0;
        for (int len : type) {
            for (int k = 0; k < len; ++k) s[pos + k] = pos + (k + 1) % len;
            pos += len;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<int> young_subgroup_gens(const Composition& lam) {
    std::vector<int> gens;
    int pos = 0;
    for (int part : lam) {
        for (int i = 0; i + 1 < part; ++i) gens.push_back(pos + i);
        pos += part;
    }
    return gens;
}

}  // namespace spf
