#pragma once

/**
 * @file error.hpp
 * @brief Error kinds raised by the semigroup, sheaf and solver layers.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffsemi {

enum class errc {
    empty_input,
    invalid_input,
    not_cofinite,
    not_a_semigroup,
    frobenius_too_large,
    base_mismatch,
    smooth_curve,
    clifford_undefined,
    genus_too_large,
    not_a_pencil_source,
    invalid_pencil,
    empty_dual,
    chain_consistency,
    degree_too_small,
    internal_assertion,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
        case errc::empty_input: return "EmptyInput";
        case errc::invalid_input: return "InvalidInput";
        case errc::not_cofinite: return "NotCofinite";
        case errc::not_a_semigroup: return "NotASemigroup";
        case errc::frobenius_too_large: return "FrobeniusTooLarge";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::smooth_curve: return "SmoothCurve";
        case errc::clifford_undefined: return "CliffordUndefined";
        case errc::genus_too_large: return "GenusTooLarge";
        case errc::not_a_pencil_source: return "NotAPencilSource";
        case errc::invalid_pencil: return "InvalidPencil";
        case errc::empty_dual: return "EmptyDual";
        case errc::chain_consistency: return "ChainConsistency";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::internal_assertion: return "InternalAssertion";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace cliffsemi
