#pragma once

/**
 * @file solvers.hpp
 * @brief Gonality, Clifford index and Clifford dimension of unicuspidal
 *        monomial curves by exhaustive search over monomial sheaves.
 *
 * Both invariants are attained by sheaves generated by monomial sections.
 * Gonality only needs pencils O<1, t^a>. The Clifford search runs over pairs
 * (V, a) with V a relative ideal S inside V inside N and a in V at or above the
 * largest minimal generator of V: such a pair is exactly one sheaf, and any
 * generator list collapses onto one. A naive generator-subset enumeration is
 * kept alongside as an independent oracle.
 */

#include "cliffsemi/semigroup.hpp"
#include "cliffsemi/sheaf.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cliffsemi {

// ---------------------------------------------------------------------------
// Gonality
// ---------------------------------------------------------------------------

struct GonalityResult {
    int gonality = 0;
    /// Every a >= 1 with deg O<1,t^a> = gonality, ascending.
    std::vector<int> witnesses;
};

/// deg O<1, t^a> = a + #((a + S) \ S).
inline int pencil_degree(const NumericalSemigroup& s, int a) {
    if (a >= s.conductor()) return a;
    return a + detail::count(detail::shifted(s.members(), a) & s.gap_mask());
}

inline GonalityResult gonality(const NumericalSemigroup& s) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no singular point");
    GonalityResult r;
    int best = s.multiplicity();
    for (int a = 1; a <= best; ++a) {
        const int d = pencil_degree(s, a);
        if (d < best) {
            best = d;
            r.witnesses.clear();
        }
        if (d == best) r.witnesses.push_back(a);
    }
    r.gonality = best;
    return r;
}

// ---------------------------------------------------------------------------
// Clifford index
// ---------------------------------------------------------------------------

/// One (ideal, top exponent) pair examined by the Clifford search.
struct SheafCandidate {
    window mask;
    int a_max = 0;
    int h0 = 0;
    int h1 = 0;
    int degree = 0;
    int clifford = 0;
};

struct CliffordOptions {
    int jobs = 1;
    /// Called for every contributing candidate. Serialized when jobs > 1.
    std::function<void(const SheafCandidate&)> on_visit;
};

struct CliffordResult {
    int clifford = 0;
    int clifford_dimension = 0;
    /// Every sheaf attaining the Clifford index, ordered by global-section exponents.
    std::vector<MonomialSheaf> computing_sheaves;
    /// Computing sheaves of minimal h0.
    std::vector<MonomialSheaf> dimension_witnesses;
    long long candidates = 0;
};

namespace detail {

struct clifford_accumulator {
    std::optional<int> best;
    std::vector<sheaf_key> ties;
    long long candidates = 0;

    void offer(const sheaf_key& k, int cliff) {
        ++candidates;
        if (!best || cliff < *best) {
            best = cliff;
            ties.clear();
        }
        if (cliff == *best) ties.push_back(k);
    }

    void merge(const clifford_accumulator& o) {
        candidates += o.candidates;
        if (!o.best) return;
        if (!best || *o.best < *best) {
            best = o.best;
            ties = o.ties;
        } else if (*o.best == *best) {
            ties.insert(ties.end(), o.ties.begin(), o.ties.end());
        }
    }
};

/// Sorts by global-section exponent list and splits off the minimal-h0 witnesses.
inline CliffordResult finish_clifford(const NumericalSemigroup& s, int cliff, std::vector<sheaf_key> keys,
                                      long long candidates) {
    std::sort(keys.begin(), keys.end(), sheaf_key_less{});
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    CliffordResult r;
    r.clifford = cliff;
    r.candidates = candidates;
    for (const auto& k : keys) r.computing_sheaves.push_back(MonomialSheaf::from_key(s, k));
    std::sort(r.computing_sheaves.begin(), r.computing_sheaves.end(),
              [](const MonomialSheaf& a, const MonomialSheaf& b) { return a.exponents() < b.exponents(); });
    int min_h0 = 0;
    for (const auto& f : r.computing_sheaves)
        min_h0 = (min_h0 == 0) ? h0(f) : std::min(min_h0, h0(f));
    for (const auto& f : r.computing_sheaves)
        if (h0(f) == min_h0) r.dimension_witnesses.push_back(f);
    r.clifford_dimension = min_h0 - 1;
    return r;
}

template <class Emit>
void scan_ideal(const NumericalSemigroup& s, const ideal_node& n, Emit& emit) {
    const int gamma = s.frobenius();
    const window missing = s.gap_mask() & ~n.mask;
    const int deg_p = count(n.mask & s.gap_mask());
    for (int a = std::max(1, n.max_generator); a < gamma; ++a) {
        if (!n.mask[a]) continue;
        const int h1 = count(missing & ~low_bits(a + 1));
        if (h1 < 2) break;
        const int h0 = count(n.mask & low_bits(a + 1));
        if (h0 < 2) continue;
        const int deg = a + deg_p;
        emit(SheafCandidate{n.mask, a, h0, h1, deg, deg - 2 * (h0 - 1)});
    }
}

/// Runs the ideal-based search; nullopt when no sheaf contributes.
inline std::optional<CliffordResult> search_clifford(const NumericalSemigroup& s, const CliffordOptions& opt) {
    std::mutex visit_mu;
    auto make_emit = [&](clifford_accumulator& acc) {
        return [&](const SheafCandidate& c) {
            if (opt.on_visit) {
                std::lock_guard lock(visit_mu);
                opt.on_visit(c);
            }
            acc.offer(sheaf_key{c.mask, c.a_max}, c.clifford);
        };
    };

    clifford_accumulator total;
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || s.genus() < 6) {
        auto emit = make_emit(total);
        for_each_ideal(s, [&](const ideal_node& n) { scan_ideal(s, n, emit); });
    } else {
        int depth = 0;
        std::vector<ideal_prefix> prefixes;
        do {
            prefixes = ideal_prefixes(s, ++depth);
        } while (static_cast<int>(prefixes.size()) < 4 * jobs && depth < s.genus());
        std::vector<clifford_accumulator> slots(prefixes.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                auto emit = make_emit(slots[i]);
                for_each_ideal_from(s, prefixes[i], [&](const ideal_node& n) { scan_ideal(s, n, emit); });
            }
        };
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        pool.clear();
        for (const auto& slot : slots) total.merge(slot);
    }
    if (!total.best) return std::nullopt;
    return finish_clifford(s, *total.best, std::move(total.ties), total.candidates);
}

/// Low-genus policy: with g <= 3 the index exists only on gonality-2 curves, where it is 0.
inline CliffordResult low_genus_policy(const NumericalSemigroup& s, int gon,
                                       std::optional<CliffordResult> found) {
    if (gon != 2)
        throw error(errc::clifford_undefined,
                    "genus " + std::to_string(s.genus()) + " with gonality " + std::to_string(gon));
    if (found) {
        if (found->clifford != 0)
            throw error(errc::internal_assertion, "gonality 2 curve with nonzero Clifford index");
        return *found;
    }
    CliffordResult r;
    r.clifford = 0;
    r.clifford_dimension = 1;
    return r;
}

} // namespace detail

/**
 * Clifford index and dimension of the curve with semigroup S.
 *
 * Throws smooth_curve for N, and clifford_undefined when g <= 3 and the
 * gonality exceeds 2 (no sheaf has h0, h1 >= 2 then).
 */
inline CliffordResult clifford_of_curve(const NumericalSemigroup& s, const CliffordOptions& opt = {}) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no singular point");
    auto found = detail::search_clifford(s, opt);
    if (s.genus() <= 3) return detail::low_genus_policy(s, gonality(s).gonality, std::move(found));
    if (!found) throw error(errc::internal_assertion, "no contributing sheaf on a curve of genus >= 4");
    return *found;
}

/// Genus ceiling for the naive oracle.
inline constexpr int brute_oracle_max_genus = 12;

/**
 * Independent oracle: every exponent set A inside [1, gamma - 1] with
 * |A| <= max_extra_generators, evaluated straight from the definitions.
 * Agrees with clifford_of_curve once max_extra_generators >= g.
 */
inline CliffordResult clifford_brute_oracle(const NumericalSemigroup& s, int max_extra_generators) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no singular point");
    if (s.genus() > brute_oracle_max_genus)
        throw error(errc::genus_too_large,
                    "oracle is limited to genus " + std::to_string(brute_oracle_max_genus));
    const int gamma = s.frobenius();
    const window& members = s.members();

    struct frame_eval {
        int h0, h1, deg;
    };
    auto evaluate = [&](const window& f, int an) {
        frame_eval e{0, 0, an};
        for (int i = 0; i <= an; ++i) e.h0 += f[i] ? 1 : 0;
        for (int l : s.gaps()) {
            if (f[l]) ++e.deg;
            else if (l > an) ++e.h1;
        }
        return e;
    };

    std::map<int, std::vector<sheaf_key>> by_clifford;
    long long candidates = 0;
    std::function<void(int, const window&, int)> extend = [&](int next, const window& f, int size) {
        if (size >= max_extra_generators) return;
        for (int a = next; a <= gamma - 1; ++a) {
            window g = f | (members << static_cast<std::size_t>(a));
            const auto e = evaluate(g, a);
            if (e.h0 >= 2 && e.h1 >= 2) {
                ++candidates;
                by_clifford[e.deg - 2 * (e.h0 - 1)].push_back(sheaf_key{g, a});
            }
            extend(a + 1, g, size + 1);
        }
    };
    extend(1, members, 0);

    std::optional<CliffordResult> found;
    if (!by_clifford.empty()) {
        auto& [cliff, keys] = *by_clifford.begin();
        found = detail::finish_clifford(s, cliff, std::move(keys), candidates);
    }
    if (s.genus() <= 3) {
        // Gonality by brute force too: any pencil of degree <= alpha has a_max <= alpha.
        int gon = s.multiplicity();
        std::function<void(int, const window&)> pencils = [&](int next, const window& f) {
            for (int a = next; a <= s.multiplicity(); ++a) {
                window g = f | (members << static_cast<std::size_t>(a));
                const auto e = evaluate(g, a);
                if (e.h0 >= 2) gon = std::min(gon, e.deg);
                pencils(a + 1, g);
            }
        };
        pencils(1, members);
        return detail::low_genus_policy(s, gon, std::move(found));
    }
    if (!found) throw error(errc::internal_assertion, "oracle found no contributing sheaf at genus >= 4");
    return *found;
}

// ---------------------------------------------------------------------------
// Trigonal classification
// ---------------------------------------------------------------------------

struct TrigonalClass {
    enum class Kind { pattern_i, pattern_ii, pattern_iii, not_trigonal, gonality_le2 };
    Kind kind = Kind::not_trigonal;
    int alpha = 0;
    int k = 0;
    int l = 0;

    bool trigonal() const {
        return kind == Kind::pattern_i || kind == Kind::pattern_ii || kind == Kind::pattern_iii;
    }
    friend bool operator==(const TrigonalClass&, const TrigonalClass&) = default;
};

inline std::string to_string(TrigonalClass::Kind k) {
    switch (k) {
        case TrigonalClass::Kind::pattern_i: return "PatternI";
        case TrigonalClass::Kind::pattern_ii: return "PatternII";
        case TrigonalClass::Kind::pattern_iii: return "PatternIII";
        case TrigonalClass::Kind::not_trigonal: return "NotTrigonal";
        case TrigonalClass::Kind::gonality_le2: return "GonalityLE2";
    }
    return "NotTrigonal";
}

inline std::optional<TrigonalClass::Kind> trigonal_kind_from_string(std::string_view s) {
    using K = TrigonalClass::Kind;
    for (K k : {K::pattern_i, K::pattern_ii, K::pattern_iii, K::not_trigonal, K::gonality_le2})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

/**
 * Matches S against the three trigonal shapes:
 *   I   {0, a, a+1, ..., a+k, a+k+l, ->}  a >= 3, k >= 0, l >= 2
 *   II  {0, a, a+2, ..., a+2k, ->}       a >= 3, k >= 1
 *   III a = 3 and S not nearly normal
 */
inline TrigonalClass classify_trigonal(const NumericalSemigroup& s) {
    using K = TrigonalClass::Kind;
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no singular point");
    const int alpha = s.multiplicity();
    const int beta = s.conductor();
    if (alpha <= 2 || alpha == beta) return {K::gonality_le2, alpha, 0, 0};

    // {0, a, a+2, ->} fits both I (k = 0, l = 2) and II (k = 1); report it as II.
    bool even_steps = (beta - alpha) % 2 == 0;
    for (int n = alpha; n < beta && even_steps; ++n)
        if (s.contains(n) != ((n - alpha) % 2 == 0)) even_steps = false;
    if (even_steps) return {K::pattern_ii, alpha, (beta - alpha) / 2, 0};

    int k = 0;
    while (s.contains(alpha + k + 1)) ++k;
    bool block_then_tail = true;
    for (int n = alpha + k + 1; n < beta; ++n)
        if (s.contains(n)) block_then_tail = false;
    if (block_then_tail) return {K::pattern_i, alpha, k, beta - alpha - k};

    if (alpha == 3) return {K::pattern_iii, alpha, 0, 0};
    return {K::not_trigonal, alpha, 0, 0};
}

// ---------------------------------------------------------------------------
// Closed forms for the plane and nonplanar families
// ---------------------------------------------------------------------------

struct FamilyExpectation {
    NumericalSemigroup semigroup;
    int clifford = 0;
    int clifford_dimension = 0;
    std::optional<int> gonality;
    /// An invertible sheaf computing the index, when the closed form names one.
    std::vector<int> witness_exponents;
    bool only_non_invertible = false;
};

/// Plane curve (1 : t^a : t^(a+1)) of degree d = a + 1 >= 5.
inline FamilyExpectation plane_closed_form(int alpha) {
    if (alpha <= 3)
        throw error(errc::degree_too_small, "plane family needs degree >= 5, got " + std::to_string(alpha + 1));
    return FamilyExpectation{NumericalSemigroup::from_generators({alpha, alpha + 1}),
                             alpha - 3, 2, alpha, {alpha + 1}, false};
}

/// S = <a, 2a-1, 3a-2, ..., a^2-(a-1)>.
inline NumericalSemigroup nonplanar_semigroup(int alpha) {
    if (alpha < 4) throw error(errc::degree_too_small, "nonplanar family is defined for alpha >= 4");
    std::vector<int> gens;
    for (int i = 1; i <= alpha; ++i) gens.push_back(i * alpha - (i - 1));
    return NumericalSemigroup::from_generators(gens);
}

inline FamilyExpectation nonplanar_family(int alpha) {
    return FamilyExpectation{nonplanar_semigroup(alpha), alpha - 3, 2, std::nullopt, {}, true};
}

// ---------------------------------------------------------------------------
// Relations between gonality, Clifford index and Clifford dimension
// ---------------------------------------------------------------------------

struct RelationCheck {
    std::string name;
    bool holds = false;
    friend bool operator==(const RelationCheck&, const RelationCheck&) = default;
};

/// True when some contributing monomial sheaf has scrollar dimension gon - 1 and degree > gon.
inline bool has_minimal_scroll_off_gonality(const NumericalSemigroup& s, int gon) {
    bool found = false;
    for_each_ideal(s, [&](const ideal_node& n) {
        if (found) return;
        auto emit = [&](const SheafCandidate& c) {
            if (c.degree > gon && c.degree - (c.h0 - 1) == gon - 1) found = true;
        };
        detail::scan_ideal(s, n, emit);
    });
    return found;
}

/**
 * Instantiates the known implications between gon, Cliff and Cliffd. All of
 * them are proven facts, so a false entry points at a solver bug. Most need
 * g >= 4; below that only the Cliff = 0 <=> gon = 2 check runs.
 */
inline std::vector<RelationCheck> relations_report(const NumericalSemigroup& s, const GonalityResult& gon,
                                                   const CliffordResult& cl) {
    std::vector<RelationCheck> out;
    const int g = s.genus();
    const int gn = gon.gonality;
    const int cf = cl.clifford;
    const int cd = cl.clifford_dimension;
    auto add = [&](std::string name, bool holds) { out.push_back({std::move(name), holds}); };

    add("cliff_zero_iff_gon_two", (cf == 0) == (gn == 2));
    add("cliff_nonnegative", cf >= 0);
    if (g < 4) return out;

    add("gon_at_most_genus", gn <= g);
    add("gon_lt_g_implies_cliff_le_gon_minus_2", !(gn < g) || cf <= gn - 2);
    add("cliff_eq_gon_minus_2_implies_cliffd_1", !(gn < g && cf == gn - 2) || cd == 1);
    add("cliffd_1_implies_cliff_eq_gon_minus_2", cd != 1 || cf == gn - 2);
    add("gon_eq_g_implies_cliffd_ge_2", gn != g || cd >= 2);
    add("gon_3_implies_cliff_1", gn != 3 || cf == 1);
    if (gn < g && cf >= gn - 3)
        add("minimal_scroll_off_gonality_iff_cliffd_2",
            has_minimal_scroll_off_gonality(s, gn) == (cd == 2));
    return out;
}

inline std::vector<RelationCheck> relations_report(const NumericalSemigroup& s) {
    return relations_report(s, gonality(s), clifford_of_curve(s));
}

} // namespace cliffsemi
