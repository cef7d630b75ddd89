#pragma once

/**
 * @file scroll.hpp
 * @brief Canonical model coordinates, pencil multiplication matrices and the
 *        rational normal scroll swept out by a pencil inside a monomial sheaf.
 *
 * Coordinates are symbolic: x_k is the k-th entry of the sorted list gamma - G.
 */

#include "cliffsemi/semigroup.hpp"
#include "cliffsemi/sheaf.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cliffsemi {

/// Sorted gamma - G; position k is the canonical coordinate x_k.
inline std::vector<int> canonical_exponents(const NumericalSemigroup& s) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no canonical model");
    std::vector<int> out;
    for (int l : s.gaps()) out.push_back(s.frobenius() - l);
    std::sort(out.begin(), out.end());
    return out;
}

/// Two global sections t^u, t^v (u < v) of a monomial sheaf.
class Pencil {
public:
    Pencil(MonomialSheaf sheaf, int u, int v) : sheaf_(std::move(sheaf)), u_(u), v_(v) {
        if (h0(sheaf_) < 2) throw error(errc::not_a_pencil_source, "h0 < 2 for " + sheaf_.to_string());
        if (u >= v)
            throw error(errc::invalid_pencil, "need u < v, got " + std::to_string(u) + "," + std::to_string(v));
        for (int e : {u, v})
            if (e < 0 || e > sheaf_.a_max() || !sheaf_.value_ideal().contains(e))
                throw error(errc::invalid_pencil,
                            "t^" + std::to_string(e) + " is not a global section of " + sheaf_.to_string());
    }

    const MonomialSheaf& sheaf() const { return sheaf_; }
    int u() const { return u_; }
    int v() const { return v_; }
    int step() const { return v_ - u_; }

    /// Base-point-free pencil of an invertible sheaf. Anything else gets the nonstandard flag.
    bool standard() const { return is_invertible(sheaf_) && u_ == 0; }

private:
    MonomialSheaf sheaf_;
    int u_;
    int v_;
};

/// Every pencil (u, v) of global-section exponents, lexicographic.
inline std::vector<Pencil> pencils_of(const MonomialSheaf& f) {
    std::vector<Pencil> out;
    const auto sections = f.global_section_exponents();
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i + 1; j < sections.size(); ++j) out.emplace_back(f, sections[i], sections[j]);
    return out;
}

struct PencilMatrix {
    /// rows[r][i] = coordinate index of column_exponents[i] + (r == 0 ? u : v).
    std::vector<int> rows[2];
    std::vector<int> column_exponents;

    friend bool operator==(const PencilMatrix& a, const PencilMatrix& b) {
        return a.rows[0] == b.rows[0] && a.rows[1] == b.rows[1] && a.column_exponents == b.column_exponents;
    }
};

inline PencilMatrix pencil_matrix(const Pencil& p) {
    const auto& s = p.sheaf().base();
    PencilMatrix m;
    m.column_exponents = hom_omega_exponents(p.sheaf());
    if (m.column_exponents.empty()) throw error(errc::empty_dual, "h1 = 0 for " + p.sheaf().to_string());
    const auto coords = canonical_exponents(s);
    auto index_of = [&](int e) {
        auto it = std::lower_bound(coords.begin(), coords.end(), e);
        if (it == coords.end() || *it != e)
            throw error(errc::internal_assertion, "t^" + std::to_string(e) + " is not a canonical coordinate");
        return static_cast<int>(it - coords.begin());
    };
    for (int c : m.column_exponents) {
        m.rows[0].push_back(index_of(c + p.u()));
        m.rows[1].push_back(index_of(c + p.v()));
    }
    return m;
}

struct ScrollType {
    /// m_1 >= ... >= m_d >= 0.
    std::vector<int> invariants;
    int dim = 0;
    int degree_e = 0;
    int ambient = 0;

    friend bool operator==(const ScrollType&, const ScrollType&) = default;
};

/**
 * Splits the Hom(F, omega) exponents into maximal arithmetic chains of step
 * v - u. Chain lengths, padded with zeros to scd(F) entries, are the scroll
 * invariants.
 */
inline ScrollType scroll_type(const Pencil& p) {
    const auto& f = p.sheaf();
    const auto cols = hom_omega_exponents(f);
    if (cols.empty()) throw error(errc::empty_dual, "h1 = 0 for " + f.to_string());
    const int step = p.step();
    auto has = [&](int e) { return std::binary_search(cols.begin(), cols.end(), e); };

    ScrollType t;
    for (int c : cols) {
        if (has(c - step)) continue;
        int len = 0;
        for (int e = c; has(e); e += step) ++len;
        t.invariants.push_back(len);
    }
    t.dim = scrollar_dimension(f);
    if (static_cast<int>(t.invariants.size()) > t.dim)
        throw error(errc::chain_consistency, "more chains than scrollar dimension for " + f.to_string());
    t.invariants.resize(static_cast<std::size_t>(t.dim), 0);
    std::sort(t.invariants.rbegin(), t.invariants.rend());
    for (int m : t.invariants) t.degree_e += m;
    t.ambient = t.degree_e + t.dim - 1;

    const int g = f.base().genus();
    if (t.degree_e != h1(f) || t.ambient != g - 1)
        throw error(errc::chain_consistency, "scroll of " + f.to_string() + " has degree " +
                                                 std::to_string(t.degree_e) + " in P^" + std::to_string(t.ambient));
    return t;
}

/**
 * Exponents of a projective monomial model (1 : t^n1 : ... : t^nm) with value
 * semigroup S that is smooth at infinity, i.e. n_m = n_(m-1) + 1.
 */
inline std::vector<int> realizing_curve_exponents(const NumericalSemigroup& s) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0");
    std::vector<int> out = s.min_generators();
    const std::size_t n = out.size();
    if (n >= 2 && out[n - 1] == out[n - 2] + 1) return out;
    if (s.contains(out.back() + 1)) {
        out.push_back(out.back() + 1);
    } else {
        out.push_back(s.conductor());
        out.push_back(s.conductor() + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// [[x2,x4,x5],[x4,x7,x8]]
inline std::string to_string(const PencilMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < 2; ++r) {
        out += r == 0 ? "[" : ",[";
        for (std::size_t i = 0; i < m.rows[r].size(); ++i) {
            if (i) out += ",";
            out += "x" + std::to_string(m.rows[r][i]);
        }
        out += "]";
    }
    return out + "]";
}

/// S(2,1,0,0,0,0,0) in P^9
inline std::string to_string(const ScrollType& t) {
    std::string out = "S(";
    for (std::size_t i = 0; i < t.invariants.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.invariants[i]);
    }
    return out + ") in P^" + std::to_string(t.ambient);
}

} // namespace cliffsemi
