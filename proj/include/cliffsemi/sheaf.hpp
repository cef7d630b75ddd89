#pragma once

/**
 * @file sheaf.hpp
 * @brief Rank-1 torsion-free sheaves O<1, t^a1, ..., t^an> on a unicuspidal
 *        monomial curve, and their cohomological invariants.
 *
 * Such a sheaf is determined by two pieces of data: its value ideal at the
 * cusp, F = S U (a1 + S) U ... U (an + S), and its top exponent an, which
 * fixes the stalk t^an O_Q at the point at infinity. Everything else
 * (h0, h1, degree, Clifford index, scrollar dimension) is counted from those.
 */

#include "cliffsemi/semigroup.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace cliffsemi {

struct SheafInvariants {
    int h0 = 1;
    int h1 = 0;
    int degree = 0;
    int clifford = 0;
    /// Defined only when h0 >= 2.
    std::optional<int> scrollar_dim;
    bool invertible = true;
    bool contributes_clifford = false;
    bool base_point_free = true;

    friend bool operator==(const SheafInvariants&, const SheafInvariants&) = default;
};

/// Identifies a monomial sheaf up to isomorphism: (value ideal, top exponent).
struct sheaf_key {
    window mask;
    int a_max = 0;

    friend bool operator==(const sheaf_key&, const sheaf_key&) = default;
};

struct sheaf_key_less {
    bool operator()(const sheaf_key& a, const sheaf_key& b) const {
        if (a.a_max != b.a_max) return a.a_max < b.a_max;
        for (int i = 0; i < window_bits; ++i)
            if (a.mask[i] != b.mask[i]) return b.mask[i];
        return false;
    }
};

namespace detail {

/// #(members of mask in [0, a]), with everything past the window counted as present.
inline int count_upto(const window& mask, long long a) {
    if (a < 0) return 0;
    if (a < window_bits) return count(mask & low_bits(static_cast<int>(a) + 1));
    return count(mask) + static_cast<int>(a - (window_bits - 1));
}

/// Invariants from the (value ideal, top exponent) pair by the defining counts.
inline SheafInvariants invariants_from_key(const NumericalSemigroup& s, const window& ideal, int a_max) {
    SheafInvariants inv;
    inv.h0 = count_upto(ideal, a_max);
    const window missing = s.gap_mask() & ~ideal;
    inv.h1 = count(missing & ~low_bits(a_max + 1));
    inv.degree = a_max + count(ideal & s.gap_mask());
    inv.clifford = inv.degree - 2 * (inv.h0 - 1);
    if (inv.h0 >= 2) inv.scrollar_dim = inv.degree - (inv.h0 - 1);
    inv.invertible = (ideal == s.members());
    inv.base_point_free = inv.invertible;
    inv.contributes_clifford = inv.h0 >= 2 && inv.h1 >= 2;
    return inv;
}

} // namespace detail

class MonomialSheaf {
public:
    /**
     * Canonical form of O<1, t^e : e in exps>. The implicit generator 1 joins
     * the list; if anything is non-positive the whole set is translated so its
     * minimum becomes 0; then 0 is dropped and the rest sorted and deduplicated.
     */
    static MonomialSheaf make(const NumericalSemigroup& s, std::span<const int> exps) {
        std::vector<long long> all{0};
        all.insert(all.end(), exps.begin(), exps.end());
        const long long lo = *std::min_element(all.begin(), all.end());
        std::vector<int> norm;
        for (long long e : all) {
            const long long shifted = e - lo;
            if (shifted != 0) norm.push_back(static_cast<int>(shifted));
        }
        std::sort(norm.begin(), norm.end());
        norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
        return MonomialSheaf(s, std::move(norm));
    }

    static MonomialSheaf make(const NumericalSemigroup& s, std::initializer_list<int> exps) {
        return make(s, std::span<const int>(exps.begin(), exps.size()));
    }

    /// The sheaf generated by its global sections: exponents = F intersected with [1, a_max].
    static MonomialSheaf from_key(const NumericalSemigroup& s, const sheaf_key& key) {
        std::vector<int> exps;
        for (int i = 1; i <= key.a_max; ++i)
            if (i >= window_bits || key.mask[i]) exps.push_back(i);
        MonomialSheaf out(s, std::move(exps));
        if (!(out.ideal_.mask() == key.mask))
            throw error(errc::internal_assertion, "key is not generated by its global sections");
        return out;
    }

    const NumericalSemigroup& base() const { return base_; }
    const std::vector<int>& exponents() const { return exps_; }
    const ValueIdeal& value_ideal() const { return ideal_; }
    int a_max() const { return exps_.empty() ? 0 : exps_.back(); }
    const SheafInvariants& invariants() const { return inv_; }
    bool is_structure_sheaf() const { return exps_.empty(); }

    sheaf_key key() const { return sheaf_key{ideal_.mask(), a_max()}; }

    /// Exponents of the monomial basis of H0: F intersected with [0, a_max].
    std::vector<int> global_section_exponents() const { return ideal_.members_upto(a_max()); }

    /// O<1,t^4,t^5>
    std::string to_string() const {
        std::string out = "O<1";
        for (int e : exps_) out += ",t^" + std::to_string(e);
        return out + ">";
    }

    friend bool operator==(const MonomialSheaf& a, const MonomialSheaf& b) {
        return a.base_ == b.base_ && a.exps_ == b.exps_;
    }

private:
    MonomialSheaf(const NumericalSemigroup& s, std::vector<int> exps)
        : base_(s), exps_(std::move(exps)),
          ideal_(ValueIdeal::generated_by(s, exps_)),
          inv_(detail::invariants_from_key(s, ideal_.mask(), a_max())) {
        if (inv_.h0 - inv_.h1 != inv_.degree - s.genus() + 1)
            throw error(errc::internal_assertion, "Riemann-Roch fails for " + to_string());
    }

    NumericalSemigroup base_;
    std::vector<int> exps_;
    ValueIdeal ideal_;
    SheafInvariants inv_;
};

inline MonomialSheaf make_sheaf(const NumericalSemigroup& s, std::span<const int> exps) {
    return MonomialSheaf::make(s, exps);
}

inline MonomialSheaf make_sheaf(const NumericalSemigroup& s, std::initializer_list<int> exps) {
    return MonomialSheaf::make(s, exps);
}

inline int h0(const MonomialSheaf& f) { return f.invariants().h0; }
inline int h1(const MonomialSheaf& f) { return f.invariants().h1; }
inline int degree(const MonomialSheaf& f) { return f.invariants().degree; }
inline bool contributes_clifford(const MonomialSheaf& f) { return f.invariants().contributes_clifford; }
inline bool is_invertible(const MonomialSheaf& f) { return f.invariants().invertible; }
/// Monomial sheaves here are generated by global sections, so this is invertibility.
inline bool is_base_point_free(const MonomialSheaf& f) { return f.invariants().base_point_free; }

/// G' = gaps above a_max that are outside F; h1 is its size.
inline std::vector<int> dual_gaps(const MonomialSheaf& f) {
    std::vector<int> out;
    for (int l : f.base().gaps())
        if (l > f.a_max() && !f.value_ideal().contains(l)) out.push_back(l);
    return out;
}

/// Exponents of the monomial basis of Hom(F, omega): gamma - G', ascending.
inline std::vector<int> hom_omega_exponents(const MonomialSheaf& f) {
    std::vector<int> out;
    for (int l : dual_gaps(f)) out.push_back(f.base().frobenius() - l);
    std::sort(out.begin(), out.end());
    return out;
}

/// Counts over [1, hi] of S-members, treating hi past the window correctly.
namespace detail {
inline int semigroup_count_1_to(const NumericalSemigroup& s, long long hi) {
    if (hi < 1) return 0;
    return count_upto(s.members(), hi) - 1;
}
} // namespace detail

/**
 * Clifford index from the gap formula
 *   #((G \ E) n [1,an]) - #(S n [1,an]) + #((E \ S) n [an+1, gamma]),
 * with E = U (ai + S) rebuilt from the exponents rather than the cached ideal.
 */
inline int clifford_by_gap_formula(const MonomialSheaf& f) {
    const auto& s = f.base();
    window e;
    for (int a : f.exponents()) e |= detail::shifted(s.members(), a);
    const int an = f.a_max();
    const window gaps = s.gap_mask();
    const int gaps_outside_e = detail::count(gaps & ~e & detail::range_bits(1, an));
    const int members_below = detail::semigroup_count_1_to(s, an);
    const int e_gaps_above = detail::count(e & gaps & detail::range_bits(an + 1, s.frobenius()));
    return gaps_outside_e - members_below + e_gaps_above;
}

/// #(G n [1,an]) - #(S n [1,an]); valid only for invertible sheaves.
inline std::optional<int> clifford_invertible_formula(const MonomialSheaf& f) {
    if (!is_invertible(f)) return std::nullopt;
    const auto& s = f.base();
    const int an = f.a_max();
    return detail::count(s.gap_mask() & detail::range_bits(1, an)) - detail::semigroup_count_1_to(s, an);
}

/// deg - 2(h0 - 1), cross-checked against the gap formulas.
inline int clifford_index(const MonomialSheaf& f) {
    const int by_definition = f.invariants().clifford;
    if (clifford_by_gap_formula(f) != by_definition)
        throw error(errc::internal_assertion, "Clifford gap formula disagrees for " + f.to_string());
    if (auto inv = clifford_invertible_formula(f); inv && *inv != by_definition)
        throw error(errc::internal_assertion, "invertible Clifford formula disagrees for " + f.to_string());
    return by_definition;
}

inline int scrollar_dimension(const MonomialSheaf& f) {
    if (!f.invariants().scrollar_dim)
        throw error(errc::not_a_pencil_source, "h0 < 2 for " + f.to_string());
    return *f.invariants().scrollar_dim;
}

} // namespace cliffsemi
