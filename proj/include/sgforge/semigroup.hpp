#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_util.hpp"

namespace sgforge {

/*
 * A numerical semigroup: a subset of the non-negative integers containing 0,
 * closed under addition, with finite complement.  Constructed from a finite
 * generating set whose gcd must be 1.
 *
 * Representation: conductor (least c with [c, inf) contained in S) plus a
 * dense membership table for [0, conductor].  The conductor is found first
 * by a shortest-path pass over residues mod the multiplicity, so the table
 * is allocated at its exact final size; the table itself is filled by the
 * forward DP over the generators.  Instances are immutable once built.
 */
class NumericalSemigroup {
public:
    static constexpr int64 default_generator_cap = 1'000'000;

    static NumericalSemigroup from_generators(std::vector<int64> gens,
                                              int64 max_entry = default_generator_cap) {
        if (gens.empty()) raise(errc::empty_generators, "need at least one generator");
        for (int64 g : gens) {
            if (g < 1) raise(errc::zero_or_negative, "generator " + std::to_string(g) + " is not positive");
            if (g > max_entry)
                raise(errc::generator_too_large,
                      "generator " + std::to_string(g) + " exceeds cap " + std::to_string(max_entry));
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gcd_all(gens) != 1)
            raise(errc::not_numerical, "generators have gcd " + std::to_string(gcd_all(gens)) +
                                           "; the complement would be infinite");
        return NumericalSemigroup(std::move(gens));
    }

    const std::vector<int64>& generators() const { return gens_; }
    const std::vector<int64>& minimal_generators() const { return min_gens_; }

    int64 multiplicity() const { return min_gens_.front(); }
    int64 embedding_dim() const { return static_cast<int64>(min_gens_.size()); }

    int64 conductor() const { return conductor_; }
    int64 frobenius() const { return conductor_ - 1; }  // -1 when S is all of N

    bool contains(int64 n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return table_[static_cast<size_t>(n)];
    }

    // least element of S in each residue class mod m, indexed by residue
    std::vector<int64> apery_set(int64 m) const {
        if (m < 1 || !contains(m))
            raise(errc::m_not_in_semigroup, std::to_string(m) + " is not a positive element of the semigroup");
        std::vector<int64> ap(static_cast<size_t>(m), -1);
        int64 found = 0;
        for (int64 n = 0; found < m; ++n) {
            if (!contains(n)) continue;
            int64& slot = ap[static_cast<size_t>(n % m)];
            if (slot < 0) { slot = n; ++found; }
        }
        return ap;
    }

    std::vector<int64> gaps() const {
        std::vector<int64> out;
        for (int64 n = 1; n < conductor_; ++n)
            if (!table_[static_cast<size_t>(n)]) out.push_back(n);
        return out;
    }

    int64 genus() const { return genus_; }

    // symmetric semigroups: exactly half of [0, conductor) is missing
    bool is_self_dual() const { return 2 * genus_ == conductor_; }

    bool operator==(const NumericalSemigroup& o) const { return min_gens_ == o.min_gens_; }
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

private:
    // membership tables beyond this many entries are refused rather than OOM-ing
    static constexpr int64 table_limit = int64(1) << 30;

    explicit NumericalSemigroup(std::vector<int64> gens) : gens_(std::move(gens)) {
        const int64 m = gens_.front();
        if (m == 1) {
            conductor_ = 0;
            table_ = {true};
            min_gens_ = {1};
            genus_ = 0;
            return;
        }

        // least member of each residue class mod m, via Dijkstra on Z_m
        const int64 inf = std::numeric_limits<int64>::max();
        std::vector<int64> least(static_cast<size_t>(m), inf);
        least[0] = 0;
        using node = std::pair<int64, int64>;  // (value, residue)
        std::priority_queue<node, std::vector<node>, std::greater<node>> pq;
        pq.emplace(0, 0);
        while (!pq.empty()) {
            auto [v, r] = pq.top();
            pq.pop();
            if (v != least[static_cast<size_t>(r)]) continue;
            for (int64 g : gens_) {
                int64 nv = checked_add(v, g);
                int64 nr = nv % m;
                if (nv < least[static_cast<size_t>(nr)]) {
                    least[static_cast<size_t>(nr)] = nv;
                    pq.emplace(nv, nr);
                }
            }
        }
        int64 frob = *std::max_element(least.begin(), least.end()) - m;
        conductor_ = frob + 1;

        if (conductor_ + 1 > table_limit)
            raise(errc::table_too_large,
                  "conductor " + std::to_string(conductor_) + " exceeds the dense table limit");
        table_.assign(static_cast<size_t>(conductor_ + 1), false);
        table_[0] = true;
        for (int64 n = 1; n <= conductor_; ++n)
            for (int64 g : gens_) {
                if (g > n) break;
                if (table_[static_cast<size_t>(n - g)]) {
                    table_[static_cast<size_t>(n)] = true;
                    break;
                }
            }

        genus_ = 0;
        for (int64 n = 1; n < conductor_; ++n)
            if (!table_[static_cast<size_t>(n)]) ++genus_;

        // candidates are m and the nonzero Apery elements; a candidate is a
        // minimal generator iff no earlier minimal generator leaves it in S
        std::vector<int64> cand;
        cand.push_back(m);
        for (int64 r = 1; r < m; ++r) cand.push_back(least[static_cast<size_t>(r)]);
        std::sort(cand.begin(), cand.end());
        for (int64 v : cand) {
            bool decomposable = false;
            for (int64 g : min_gens_) {
                if (v - g < m) break;  // min_gens_ is increasing, v - g only shrinks
                if (contains(v - g)) { decomposable = true; break; }
            }
            if (!decomposable) min_gens_.push_back(v);
        }
    }

    std::vector<int64> gens_;      // sorted, deduplicated input
    std::vector<int64> min_gens_;  // sorted
    std::vector<bool> table_;      // membership on [0, conductor]
    int64 conductor_ = 0;
    int64 genus_ = 0;
};

// membership in the (not necessarily numerical) sub-semigroup of N generated
// by an arbitrary finite set: reduce by the gcd, then use the dense table
inline bool subsemigroup_contains(std::vector<int64> gens, int64 v) {
    if (v == 0) return true;
    if (v < 0) return false;
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](int64 g) { return g == 0; }), gens.end());
    if (gens.empty()) return false;
    int64 d = gcd_all(gens);
    if (v % d != 0) return false;
    for (int64& g : gens) g /= d;
    return NumericalSemigroup::from_generators(std::move(gens)).contains(v / d);
}

}  // namespace sgforge
