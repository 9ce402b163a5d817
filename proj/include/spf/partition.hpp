#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spf {

// Compositions and partitions are plain int vectors; a partition is kept
// canonical (weakly decreasing, trailing zeros stripped).
using Composition = std::vector<int>;
using Partition = std::vector<int>;

struct Config {
    uint32_t p = 3;
    int n = 3;
    int d = 3;
    void validate() const;
};

int degree_of(const Composition& c);
bool is_partition(const Composition& c);
Partition canonical(Composition c);       // strip trailing zeros, check decreasing
Partition sorted_partition(Composition c);  // sort descending, strip zeros

uint64_t binomial(int n, int k);

enum class LambdaKind { All, Dominant, PRestricted };

/// Complete, duplicate-free, lexicographically descending enumeration of
/// Λ(n,d), Λ⁺(n,d), or Λ⁺_p(n,d). Dominant/restricted output is canonical.
std::vector<Composition> enumerate_lambda(int n, int d, LambdaKind kind, uint32_t p = 0);

Partition conjugate(const Partition& lam);

struct PFlags {
    bool p_restricted = false;
    bool p_regular = false;
    bool p_core = false;
};
PFlags classify(const Partition& lam, uint32_t p);

std::vector<int> hook_lengths(const Partition& lam);
Partition p_core_of(Partition lam, uint32_t p);

enum class Order { Dominance, Lex };
enum class Cmp { Less, Greater, Equal, Incomparable };
Cmp compare(const Partition& a, const Partition& b, Order order);

/// Mullineux map on p-regular partitions (computed through the Mullineux
/// symbol; strips p-rims and rebuilds with adjusted row counts).
Partition mullineux(const Partition& lam, uint32_t p);

/// The companion map on p-restricted partitions, conjugation-wrapped:
/// m_res(λ) = (m(λ'))'.
Partition mullineux_restricted(const Partition& lam, uint32_t p);

struct MullineuxSymbol {
    std::vector<int> rim_sizes;
    std::vector<int> row_counts;
};
MullineuxSymbol mullineux_symbol(Partition lam, uint32_t p);

/// One p-rim strip step: returns the stripped partition, the rim size and
/// the number of rows the rim met.
struct RimStrip {
    Partition rest;
    int rim_size = 0;
    int rows_met = 0;
};
RimStrip strip_p_rim(const Partition& lam, uint32_t p);

uint64_t count_standard_tableaux(const Partition& lam);
uint64_t count_semistandard_tableaux(const Partition& lam, int max_entry);

std::vector<Partition> partitions_of(int d);

std::string format_partition(const std::vector<int>& parts);
/// Parses "a,b,c"; requires positive entries. If require_decreasing, also
/// checks weak decrease.
std::vector<int> parse_parts(const std::string& text, bool require_decreasing);

}  // namespace spf
