#pragma once

#include "diagram.hpp"

namespace growth {

/// Variant whose tableaux are the conjugates of tableaux of v.
inline Variant conjugate_variant(Variant v) {
    switch (v) {
    case Variant::standard: return Variant::standard;
    case Variant::rsk: return Variant::dual_rsk_prime;
    case Variant::dual_rsk_prime: return Variant::rsk;
    case Variant::dual_rsk: return Variant::rsk_prime;
    case Variant::rsk_prime: return Variant::dual_rsk;
    }
    return v;
}

/// Variant governing the diagram reflected in the main diagonal.
inline Variant reflect_variant(Variant v) {
    switch (v) {
    case Variant::dual_rsk: return Variant::rsk_prime;
    case Variant::rsk_prime: return Variant::dual_rsk;
    default: return v;
    }
}

/// Conjugate every partition; horizontal strips become vertical strips.
inline OscillatingTableau conjugate_tableau(const OscillatingTableau& t) {
    OscillatingTableau out{t.word, {}, conjugate_variant(t.variant)};
    out.seq.reserve(t.seq.size());
    for (const auto& p : t.seq)
        out.seq.push_back(conjugate(p));
    return out;
}

/// Read the border tableau under `from`, conjugate it and rebuild a filling
/// under the conjugate variant. The standard case is an involution.
inline Filling conjugation_map(const Filling& f, Variant from) {
    OscillatingTableau t = border_tableau(label_diagram(f, from));
    Reconstruction r = reconstruct(f.shape(), conjugate_tableau(t));
    detail::require(r.boundary.trivial(), "conjugation map produced nonempty side labels");
    return r.filling;
}

/// Swaps the longest NE chain with the longest SE chain (rectangle-bound)
/// on fillings with at most one 1 per row and column.
inline Filling theorem2_map(const Filling& f) { return conjugation_map(f, Variant::standard); }

/// Arbitrary fillings: (NE entry sum, se) to (SE entry sum, ne). Inverse is nes1_inverse.
inline Filling nes1_map(const Filling& f) { return conjugation_map(f, Variant::rsk); }
inline Filling nes1_inverse(const Filling& f) { return conjugation_map(f, Variant::dual_rsk_prime); }

/// 0-1 fillings: (nE, Se) to (sE, Ne). Inverse is nes2_inverse.
inline Filling nes2_map(const Filling& f) { return conjugation_map(f, Variant::dual_rsk); }
inline Filling nes2_inverse(const Filling& f) { return conjugation_map(f, Variant::rsk_prime); }

/// Chain flavors measured by the first and by the conjugated part of a label.
struct GreeneFlavors {
    ChainSpec rows;     // lambda_1 + ... + lambda_k
    ChainSpec columns;  // lambda'_1 + ... + lambda'_k
};

inline GreeneFlavors greene_flavors(Variant v) {
    switch (v) {
    case Variant::standard:
        return {ChainSpec::parse("NE"), ChainSpec::parse("SE")};
    case Variant::rsk:
        return {ChainSpec::parse("NE", LengthMode::entry_sum), ChainSpec::parse("se", LengthMode::multiplicity)};
    case Variant::dual_rsk:
        return {ChainSpec::parse("nE"), ChainSpec::parse("Se")};
    case Variant::rsk_prime:
        return {ChainSpec::parse("Ne"), ChainSpec::parse("sE")};
    case Variant::dual_rsk_prime:
        return {ChainSpec::parse("ne", LengthMode::multiplicity), ChainSpec::parse("SE", LengthMode::entry_sum)};
    }
    return {};
}

} // namespace growth
