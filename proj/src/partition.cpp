#include "spf/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spf/fp.hpp"

namespace spf {

void Config::validate() const {
    if (!fp::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be >= 1");
}

int degree_of(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_partition(const Composition& c) {
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    return c.empty() || c.back() >= 0;
}

Partition canonical(Composition c) {
    if (!is_partition(c)) throw std::invalid_argument("not weakly decreasing");
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Partition sorted_partition(Composition c) {
    std::sort(c.begin(), c.end(), std::greater<int>());
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (unsigned)(n - k + i);
        r /= (unsigned)i;
    }
    return uint64_t(r);
}

namespace {
void enum_compositions(int n, int d, Composition& cur, std::vector<Composition>& out) {
    if (n == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = d; first >= 0; --first) {
        cur.push_back(first);
        enum_compositions(n - 1, d - first, cur, out);
        cur.pop_back();
    }
}

void enum_partitions_bounded(int d, int max_part, int max_rows, Composition& cur,
                             std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (max_rows == 0) return;
    for (int first = std::min(d, max_part); first >= 1; --first) {
        cur.push_back(first);
        enum_partitions_bounded(d - first, first, max_rows - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Composition> enumerate_lambda(int n, int d, LambdaKind kind, uint32_t p) {
    if (n < 1 || d < 0) throw std::invalid_argument("enumerate_lambda: n >= 1, d >= 0 required");
    if (d == 0) {
        if (kind == LambdaKind::All) return {Composition(n, 0)};
        return {Composition{}};
    }
    std::vector<Composition> out;
    if (kind == LambdaKind::All) {
        Composition cur;
        enum_compositions(n, d, cur, out);
        return out;
    }
    std::vector<Partition> parts;
    Composition cur;
    enum_partitions_bounded(d, d, n, cur, parts);
    // lexicographically descending
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    if (kind == LambdaKind::Dominant) return {parts.begin(), parts.end()};
    std::vector<Composition> res;
    for (auto& lam : parts)
        if (classify(lam, p).p_restricted) res.push_back(lam);
    return res;
}

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.empty()) return out;
    out.resize(lam[0], 0);
    for (int part : lam)
        for (int j = 0; j < part; ++j) out[j]++;
    return out;
}

PFlags classify(const Partition& lam, uint32_t p) {
    PFlags f;
    f.p_restricted = true;
    for (size_t i = 0; i < lam.size(); ++i) {
        int next = (i + 1 < lam.size()) ? lam[i + 1] : 0;
        if (lam[i] - next >= int(p)) f.p_restricted = false;
    }
    f.p_regular = true;
    for (size_t i = 0; i < lam.size();) {
        size_t j = i;
        while (j < lam.size() && lam[j] == lam[i]) ++j;
        if (j - i >= p) f.p_regular = false;
        i = j;
    }
    f.p_core = true;
    for (int h : hook_lengths(lam))
        if (h % int(p) == 0) f.p_core = false;
    return f;
}

std::vector<int> hook_lengths(const Partition& lam) {
    std::vector<int> out;
    Partition conj = conjugate(lam);
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j)
            out.push_back(lam[i] - (j + 1) + conj[j] - int(i + 1) + 1);
    return out;
}

Partition p_core_of(Partition lam, uint32_t p) {
    int len = int(lam.size());
    int L = len + int(p);
    while (L % int(p) != 0) ++L;
    lam.resize(L, 0);
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
    std::vector<int> runner_count(p, 0);
    for (int b : beta) runner_count[b % p]++;
    std::vector<int> nb;
    for (uint32_t r = 0; r < p; ++r)
        for (int c = 0; c < runner_count[r]; ++c) nb.push_back(int(r) + c * int(p));
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition out(L);
    for (int i = 0; i < L; ++i) out[i] = nb[i] - (L - 1 - i);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Cmp compare(const Partition& a, const Partition& b, Order order) {
    if (degree_of(a) != degree_of(b)) throw std::invalid_argument("compare: unequal degrees");
    size_t len = std::max(a.size(), b.size());
    auto get = [&](const Partition& v, size_t i) { return i < v.size() ? v[i] : 0; };
    if (order == Order::Lex) {
        for (size_t i = 0; i < len; ++i) {
            if (get(a, i) < get(b, i)) return Cmp::Less;
            if (get(a, i) > get(b, i)) return Cmp::Greater;
        }
        return Cmp::Equal;
    }
    bool le = true, ge = true;
    int sa = 0, sb = 0;
    for (size_t i = 0; i < len; ++i) {
        sa += get(a, i);
        sb += get(b, i);
        if (sa > sb) le = false;
        if (sa < sb) ge = false;
    }
    if (le && ge) return Cmp::Equal;
    if (le) return Cmp::Less;
    if (ge) return Cmp::Greater;
    return Cmp::Incomparable;
}

RimStrip strip_p_rim(const Partition& lam, uint32_t p) {
    RimStrip out;
    int r = int(lam.size());
    if (r == 0) return out;
    // rim path cells, northeast to southwest
    std::vector<std::pair<int, int>> path;  // (row, col), 1-based
    for (int i = 1; i <= r; ++i) {
        int lo = (i < r) ? std::max(1, lam[i]) : 1;
        for (int j = lam[i - 1]; j >= lo; --j) path.push_back({i, j});
    }
    std::vector<bool> selected(path.size(), false);
    size_t pos = 0;
    int row_target = 1;
    while (row_target <= r) {
        // segment starts at first path cell of row_target
        while (pos < path.size() && path[pos].first < row_target) ++pos;
        if (pos >= path.size()) break;
        int taken = 0;
        int last_row = row_target;
        while (pos < path.size() && taken < int(p)) {
            selected[pos] = true;
            last_row = path[pos].first;
            ++pos;
            ++taken;
        }
        out.rim_size += taken;
        if (taken < int(p)) break;  // path exhausted
        row_target = last_row + 1;
    }
    std::vector<int> removed(r + 1, 0);
    std::vector<bool> met(r + 1, false);
    for (size_t i = 0; i < path.size(); ++i)
        if (selected[i]) {
            removed[path[i].first]++;
            met[path[i].first] = true;
        }
    Partition rest(lam);
    for (int i = 1; i <= r; ++i) rest[i - 1] -= removed[i];
    for (int i = 1; i <= r; ++i) out.rows_met += met[i] ? 1 : 0;
    if (!is_partition(rest)) throw std::logic_error("strip_p_rim: result not a partition");
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    out.rest = std::move(rest);
    return out;
}

MullineuxSymbol mullineux_symbol(Partition lam, uint32_t p) {
    MullineuxSymbol sym;
    while (!lam.empty()) {
        int rows = int(lam.size());
        RimStrip s = strip_p_rim(lam, p);
        if (s.rows_met != rows) throw std::logic_error("mullineux_symbol: rim misses a row");
        sym.rim_sizes.push_back(s.rim_size);
        sym.row_counts.push_back(rows);
        lam = s.rest;
    }
    return sym;
}

namespace {
// Unique partition mu containing nu with |mu| = |nu| + rim, exactly `rows`
// rows, whose p-rim strip gives back nu.
Partition attach_p_rim(const Partition& nu, int rim, int rows, uint32_t p) {
    int total = degree_of(nu) + rim;
    std::vector<Partition> cands;
    Composition cur;
    enum_partitions_bounded(total, total, rows, cur, cands);
    Partition found;
    bool have = false;
    for (auto& mu : cands) {
        if (int(mu.size()) != rows) continue;
        bool contains = true;
        for (size_t i = 0; i < mu.size(); ++i) {
            int base = i < nu.size() ? nu[i] : 0;
            if (mu[i] < base) { contains = false; break; }
        }
        if (!contains || nu.size() > mu.size()) continue;
        RimStrip s = strip_p_rim(mu, p);
        if (s.rim_size == rim && s.rest == nu) {
            if (have) throw std::logic_error("attach_p_rim: non-unique reconstruction");
            found = mu;
            have = true;
        }
    }
    if (!have) throw std::logic_error("attach_p_rim: no reconstruction");
    return found;
}
}  // namespace

Partition mullineux(const Partition& lam, uint32_t p) {
    if (!classify(lam, p).p_regular)
        throw std::invalid_argument("mullineux: input not p-regular");
    MullineuxSymbol sym = mullineux_symbol(lam, p);
    Partition out;
    for (int i = int(sym.rim_sizes.size()) - 1; i >= 0; --i) {
        int a = sym.rim_sizes[i];
        int eps = (a % int(p) != 0) ? 1 : 0;
        int s = a - sym.row_counts[i] + eps;
        out = attach_p_rim(out, a, s, p);
    }
    if (!classify(out, p).p_regular) throw std::logic_error("mullineux: image not p-regular");
    return out;
}

Partition mullineux_restricted(const Partition& lam, uint32_t p) {
    if (!classify(lam, p).p_restricted)
        throw std::invalid_argument("mullineux_restricted: input not p-restricted");
    return conjugate(mullineux(conjugate(lam), p));
}

uint64_t count_standard_tableaux(const Partition& lam) {
    static std::map<Partition, uint64_t> memo;
    if (lam.empty()) return 1;
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    uint64_t total = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        bool removable = (i + 1 == lam.size()) || lam[i] > lam[i + 1];
        if (!removable) continue;
        Partition sub(lam);
        sub[i]--;
        while (!sub.empty() && sub.back() == 0) sub.pop_back();
        total += count_standard_tableaux(sub);
    }
    memo[lam] = total;
    return total;
}

uint64_t count_semistandard_tableaux(const Partition& lam, int max_entry) {
    // hook-content formula with running gcd reduction
    Partition conj = conjugate(lam);
    unsigned __int128 num = 1, den = 1;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 1; j <= lam[i]; ++j) {
            long content = long(j) - long(i + 1);
            long hook = lam[i] - j + conj[j - 1] - long(i + 1) + 1;
            long top = max_entry + content;
            if (top <= 0) return 0;
            num *= (unsigned long)top;
            den *= (unsigned long)hook;
            unsigned __int128 a = num, b = den;
            while (b) { auto t = a % b; a = b; b = t; }
            num /= a;
            den /= a;
        }
    if (den != 1) throw std::logic_error("count_semistandard_tableaux: non-integral");
    return uint64_t(num);
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Composition cur;
    enum_partitions_bounded(d, d, d, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

std::string format_partition(const std::vector<int>& parts) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<int> parse_parts(const std::string& text, bool require_decreasing) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty part in \"" + text + "\"");
        tok = tok.substr(b, e - b + 1);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (...) {
            throw std::invalid_argument("bad integer \"" + tok + "\"");
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("bad part \"" + tok + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("no parts in \"" + text + "\"");
    if (require_decreasing && !is_partition(out))
        throw std::invalid_argument("parts not weakly decreasing: \"" + text + "\"");
    return out;
}

}  // namespace spf
