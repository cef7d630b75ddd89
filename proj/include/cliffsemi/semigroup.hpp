#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups and their relative ideals.
 *
 * A numerical semigroup S is a cofinite submonoid of the naturals. Everything
 * the solvers need (gaps, Frobenius number, conductor, multiplicity, genus)
 * is finite once the set is truncated at the conductor, so both S and its
 * relative ideals are stored as fixed-width bit windows over [0, window_bits).
 * Every integer at or beyond the window is treated as a member.
 */

#include "cliffsemi/error.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffsemi {

inline constexpr int window_bits = 256;
/// Largest Frobenius number the fixed window can hold (conductor must fit).
inline constexpr int max_frobenius = window_bits - 2;
/// Default genus cap for surveys and CLI input.
inline constexpr int default_genus_cap = 25;

using window = std::bitset<window_bits>;

namespace detail {

/// Bits [0, n), clamped to the window.
inline window low_bits(int n) {
    window w;
    if (n <= 0) return w;
    if (n >= window_bits) return w.set();
    w.set();
    return w >> (window_bits - n);
}

/// Bits [lo, hi] inclusive, clamped.
inline window range_bits(int lo, int hi) {
    if (hi < lo) return window{};
    return low_bits(hi + 1) & ~low_bits(lo);
}

inline window shifted(const window& w, int by) {
    if (by >= window_bits) return window{};
    return w << static_cast<std::size_t>(by);
}

inline int count(const window& w) { return static_cast<int>(w.count()); }

struct semigroup_data {
    window members;
    window gaps_mask;
    std::vector<int> gaps;
    std::vector<int> min_generators;
    int frobenius = -1;
    int multiplicity = 1;
    int genus = 0;
};

} // namespace detail

class NumericalSemigroup {
public:
    /// The full monoid of naturals (genus 0, flagged smooth).
    static NumericalSemigroup natural() {
        window w;
        w.set();
        return from_mask_unchecked(w);
    }

    static NumericalSemigroup from_generators(std::span<const int> gens) {
        if (gens.empty()) throw error(errc::empty_input, "no generators given");
        int g = 0;
        for (int a : gens) {
            if (a < 1) throw error(errc::invalid_input, "generator " + std::to_string(a) + " is not positive");
            g = std::gcd(g, a);
        }
        if (g != 1) throw error(errc::not_cofinite, "gcd of generators is " + std::to_string(g));

        // Gaps are closed under subtracting the multiplicity, so a Frobenius
        // number beyond the window always leaves a gap inside [max_frobenius, 2W).
        constexpr int span_len = 2 * window_bits;
        std::vector<char> in(span_len, 0);
        in[0] = 1;
        for (int n = 1; n < span_len; ++n)
            for (int a : gens)
                if (a <= n && in[n - a]) { in[n] = 1; break; }
        int frob = -1;
        for (int n = span_len - 1; n >= 0; --n)
            if (!in[n]) { frob = n; break; }
        if (frob > max_frobenius)
            throw error(errc::frobenius_too_large,
                        "Frobenius number exceeds " + std::to_string(max_frobenius));
        window w;
        for (int n = 0; n < window_bits; ++n) w[n] = in[n] != 0;
        return from_mask_unchecked(w);
    }

    static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
        return from_generators(std::span<const int>(gens.begin(), gens.size()));
    }

    /// Inverse constructor; validates closure and reports the first violating pair.
    static NumericalSemigroup from_gaps(std::span<const int> gap_list) {
        window gaps;
        int top = 0;
        for (int l : gap_list) {
            if (l < 1) throw error(errc::not_a_semigroup, "gap " + std::to_string(l) + " is not positive");
            if (l > max_frobenius)
                throw error(errc::frobenius_too_large, "gap " + std::to_string(l) + " outside window");
            gaps.set(static_cast<std::size_t>(l));
            top = std::max(top, l);
        }
        window members = ~gaps;
        for (int x = 1; x <= top / 2; ++x) {
            if (!members[x]) continue;
            for (int y = x; x + y <= top; ++y)
                if (members[y] && gaps[x + y])
                    throw error(errc::not_a_semigroup,
                                std::to_string(x) + " + " + std::to_string(y) + " = " +
                                    std::to_string(x + y) + " is listed as a gap");
        }
        return from_mask_unchecked(members);
    }

    static NumericalSemigroup from_gaps(std::initializer_list<int> gap_list) {
        return from_gaps(std::span<const int>(gap_list.begin(), gap_list.size()));
    }

    /// Builds from a membership window that is already known to be a semigroup.
    static NumericalSemigroup from_mask_unchecked(const window& members) {
        auto d = std::make_shared<detail::semigroup_data>();
        d->members = members;
        d->members.set(0);
        for (int n = 1; n < window_bits; ++n)
            if (!d->members[n]) {
                d->gaps.push_back(n);
                d->gaps_mask.set(static_cast<std::size_t>(n));
            }
        d->genus = static_cast<int>(d->gaps.size());
        d->frobenius = d->gaps.empty() ? -1 : d->gaps.back();
        d->multiplicity = 1;
        while (d->multiplicity < window_bits && !d->members[d->multiplicity]) ++d->multiplicity;

        const int alpha = d->multiplicity;
        const int bound = std::max(d->frobenius + 1, alpha) + alpha;
        auto in = [&](int n) { return n >= window_bits || d->members[n]; };
        for (int n = alpha; n < bound; ++n) {
            if (!in(n)) continue;
            bool decomposable = false;
            for (int s = alpha; s <= n - alpha && !decomposable; ++s)
                decomposable = in(s) && in(n - s);
            if (!decomposable) d->min_generators.push_back(n);
        }
        NumericalSemigroup out;
        out.d_ = std::move(d);
        return out;
    }

    const std::vector<int>& min_generators() const { return d_->min_generators; }
    const std::vector<int>& gaps() const { return d_->gaps; }
    int frobenius() const { return d_->frobenius; }
    int conductor() const { return d_->frobenius + 1; }
    int multiplicity() const { return d_->multiplicity; }
    int genus() const { return d_->genus; }
    bool is_smooth() const { return d_->genus == 0; }

    bool contains(int n) const { return n >= 0 && (n >= window_bits || d_->members[n]); }
    bool is_gap(int n) const { return n > 0 && n < window_bits && d_->gaps_mask[n]; }

    const window& members() const { return d_->members; }
    const window& gap_mask() const { return d_->gaps_mask; }

    /// Sorted members in [0, hi].
    std::vector<int> members_upto(int hi) const {
        std::vector<int> out;
        for (int n = 0; n <= hi; ++n)
            if (contains(n)) out.push_back(n);
        return out;
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.d_ == b.d_ || a.d_->members == b.d_->members;
    }

private:
    NumericalSemigroup() = default;
    std::shared_ptr<const detail::semigroup_data> d_;
};

/// Symmetric semigroups: beta = 2g. Equivalent to the canonical ideal equalling S.
inline bool is_gorenstein(const NumericalSemigroup& s) {
    return s.conductor() == 2 * s.genus();
}

/// Conductor ideal equals the maximal ideal, i.e. S = {0} U [alpha, inf). False for N.
inline bool is_nearly_normal(const NumericalSemigroup& s) {
    return s.genus() >= 1 && s.multiplicity() == s.conductor();
}

/**
 * A relative ideal V of S contained in the naturals: V + S is inside V.
 *
 * Ideals built by the enumerator or by sheaves always contain S (and 0);
 * differences A - B are truncated to the naturals and may not.
 */
class ValueIdeal {
public:
    /// Validates the ideal property on the window.
    static ValueIdeal from_mask(const NumericalSemigroup& base, const window& mask) {
        if (!mask[window_bits - 1])
            throw error(errc::invalid_input, "ideal is not cofinite inside the window");
        for (int x = 0; x < window_bits; ++x)
            if (mask[x] && (detail::shifted(base.members(), x) & ~mask).any())
                throw error(errc::invalid_input,
                            "not closed under adding S at " + std::to_string(x));
        return ValueIdeal(base, mask);
    }

    /// The ideal S U (a_1 + S) U ... for non-negative shifts a_i.
    static ValueIdeal generated_by(const NumericalSemigroup& base, std::span<const int> gens,
                                   bool include_zero = true) {
        window m;
        if (include_zero) m = base.members();
        for (int a : gens) {
            if (a < 0) throw error(errc::invalid_input, "negative generator for a value ideal");
            m |= detail::shifted(base.members(), a);
        }
        return ValueIdeal(base, m);
    }

    /// Internal fast path: caller guarantees the ideal property.
    static ValueIdeal from_mask_unchecked(const NumericalSemigroup& base, const window& mask) {
        return ValueIdeal(base, mask);
    }

    const NumericalSemigroup& base() const { return base_; }
    const window& mask() const { return mask_; }
    int tail_start() const { return tail_; }
    const std::vector<int>& min_generators() const { return min_gens_; }

    bool contains(int n) const { return n >= 0 && (n >= window_bits || mask_[n]); }

    std::vector<int> members_upto(int hi) const {
        std::vector<int> out;
        for (int n = 0; n <= hi; ++n)
            if (contains(n)) out.push_back(n);
        return out;
    }

    /// Members of the ideal that are gaps of the base semigroup.
    std::vector<int> gap_members() const {
        std::vector<int> out;
        for (int l : base_.gaps())
            if (mask_[l]) out.push_back(l);
        return out;
    }

    friend bool operator==(const ValueIdeal& a, const ValueIdeal& b) {
        return a.base_ == b.base_ && a.mask_ == b.mask_;
    }

private:
    ValueIdeal(const NumericalSemigroup& base, const window& mask) : base_(base), mask_(mask) {
        tail_ = window_bits;
        while (tail_ > 0 && mask_[tail_ - 1]) --tail_;
        window generated;
        for (int a = 0; a < window_bits; ++a) {
            if (!mask_[a] || generated[a]) continue;
            min_gens_.push_back(a);
            generated |= detail::shifted(base_.members(), a);
        }
    }

    NumericalSemigroup base_;
    window mask_;
    int tail_ = 0;
    std::vector<int> min_gens_;
};

/// K = { a >= 0 : gamma - a not in S }, the standard canonical ideal.
inline ValueIdeal canonical_ideal(const NumericalSemigroup& s) {
    window k;
    for (int a = 0; a < window_bits; ++a) k[a] = !s.contains(s.frobenius() - a);
    return ValueIdeal::from_mask_unchecked(s, k);
}

/// (A - B) intersected with the naturals: { z >= 0 : z + B inside A }.
inline ValueIdeal ideal_difference(const ValueIdeal& a, const ValueIdeal& b) {
    if (!(a.base() == b.base())) throw error(errc::base_mismatch, "ideals over different semigroups");
    window out;
    for (int z = 0; z < window_bits; ++z)
        out[z] = (detail::shifted(b.mask(), z) & ~a.mask()).none();
    return ValueIdeal::from_mask_unchecked(a.base(), out);
}

// ---------------------------------------------------------------------------
// Ideal enumeration
// ---------------------------------------------------------------------------

/// One enumerated ideal V with S inside V inside N, 0 in V.
struct ideal_node {
    window mask;
    /// Largest minimal generator of V (0 when V = S).
    int max_generator = 0;
};

/// A partial include/exclude assignment over the first `depth` gaps.
struct ideal_prefix {
    int depth = 0;
    window forced;
    int max_generator = 0;
};

namespace detail {

template <class Visitor>
void walk_ideals(const NumericalSemigroup& s, int pos, const window& forced, int max_gen,
                 Visitor& visit) {
    const auto& gaps = s.gaps();
    if (pos == static_cast<int>(gaps.size())) {
        visit(ideal_node{forced, max_gen});
        return;
    }
    const int y = gaps[pos];
    if (forced[y]) {
        walk_ideals(s, pos + 1, forced, max_gen, visit);
        return;
    }
    walk_ideals(s, pos + 1, forced, max_gen, visit);
    walk_ideals(s, pos + 1, forced | shifted(s.members(), y), y, visit);
}

inline void collect_prefixes(const NumericalSemigroup& s, int pos, int depth, const window& forced,
                             int max_gen, std::vector<ideal_prefix>& out) {
    const auto& gaps = s.gaps();
    if (pos == depth) {
        out.push_back(ideal_prefix{pos, forced, max_gen});
        return;
    }
    const int y = gaps[pos];
    if (forced[y]) {
        collect_prefixes(s, pos + 1, depth, forced, max_gen, out);
        return;
    }
    collect_prefixes(s, pos + 1, depth, forced, max_gen, out);
    collect_prefixes(s, pos + 1, depth, forced | shifted(s.members(), y), y, out);
}

} // namespace detail

/**
 * Visits every relative ideal S inside V inside N exactly once, in
 * lexicographic order of the indicator vector of V over the ascending gaps.
 */
template <class Visitor>
void for_each_ideal(const NumericalSemigroup& s, Visitor&& visit) {
    detail::walk_ideals(s, 0, s.members(), 0, visit);
}

/// Splits the ideal space by the decisions on the first `depth` gaps, in enumeration order.
inline std::vector<ideal_prefix> ideal_prefixes(const NumericalSemigroup& s, int depth) {
    depth = std::clamp(depth, 0, s.genus());
    std::vector<ideal_prefix> out;
    detail::collect_prefixes(s, 0, depth, s.members(), 0, out);
    return out;
}

/// Completes the enumeration below one prefix.
template <class Visitor>
void for_each_ideal_from(const NumericalSemigroup& s, const ideal_prefix& p, Visitor&& visit) {
    detail::walk_ideals(s, p.depth, p.forced, p.max_generator, visit);
}

inline std::vector<ValueIdeal> enumerate_ideals(const NumericalSemigroup& s) {
    std::vector<ValueIdeal> out;
    for_each_ideal(s, [&](const ideal_node& n) { out.push_back(ValueIdeal::from_mask_unchecked(s, n.mask)); });
    return out;
}

// ---------------------------------------------------------------------------
// Semigroup tree
// ---------------------------------------------------------------------------

namespace detail {

template <class Visitor>
void walk_tree(const NumericalSemigroup& s, int max_genus, Visitor& visit) {
    visit(s);
    if (s.genus() >= max_genus) return;
    for (int x : s.min_generators()) {
        if (x <= s.frobenius()) continue;
        window child = s.members();
        child.reset(static_cast<std::size_t>(x));
        walk_tree(NumericalSemigroup::from_mask_unchecked(child), max_genus, visit);
    }
}

} // namespace detail

/// Largest genus the tree walk accepts (Frobenius stays inside the window).
inline constexpr int max_tree_genus = (max_frobenius + 1) / 2;

/**
 * Visits every numerical semigroup of genus <= max_genus once, in preorder of
 * the tree rooted at N whose children remove one minimal generator above the
 * Frobenius number (ascending).
 */
template <class Visitor>
void for_each_semigroup(int max_genus, Visitor&& visit) {
    if (max_genus < 0) return;
    if (max_genus > max_tree_genus)
        throw error(errc::genus_too_large, "tree enumeration capped at genus " + std::to_string(max_tree_genus));
    detail::walk_tree(NumericalSemigroup::natural(), max_genus, visit);
}

inline std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus) {
    std::vector<NumericalSemigroup> out;
    for_each_semigroup(max_genus, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

// ---------------------------------------------------------------------------
// Text input
// ---------------------------------------------------------------------------

/// Parses "5,9,13" style integer lists. Whitespace around items is ignored.
inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string item;
    auto flush = [&]() {
        std::string t;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        item.clear();
        if (t.empty()) throw error(errc::invalid_input, "empty list item");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw error(errc::invalid_input, "not an integer: '" + t + "'");
        }
        if (used != t.size()) throw error(errc::invalid_input, "not an integer: '" + t + "'");
        out.push_back(v);
    };
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) return out;
    for (char c : text) {
        if (c == ',') flush();
        else item.push_back(c);
    }
    flush();
    return out;
}

/// Accepts a generator list ("5,9,13,17,21") or a gap list ("gaps:1,2,3,5,6,9").
inline NumericalSemigroup parse_semigroup(std::string_view text) {
    constexpr std::string_view prefix = "gaps:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto gaps = parse_int_list(text.substr(prefix.size()));
        return NumericalSemigroup::from_gaps(gaps);
    }
    auto gens = parse_int_list(text);
    return NumericalSemigroup::from_generators(gens);
}

} // namespace cliffsemi
