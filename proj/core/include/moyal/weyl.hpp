#pragma once

#include <memory>
#include <optional>

#include "moyal/coefficient.hpp"

namespace moyal {

/// Signature of a canonical algebra: m conjugate generator pairs (x_i, y_i)
/// with central commutators [x_i, y_i] = kappa_i and everything across pairs
/// commuting. kappa is any nonzero Coefficient, so one kernel covers the
/// q/p Weyl algebra (kappa = i*hbar), its sign-flipped Bopp copies and the
/// polynomial differential-operator algebras (kappa = -1 for (q, d_q)).
class AlgebraSignature {
public:
    struct Pair {
        std::string x;
        std::string y;
        Coefficient xy_commutator;  // [x, y]
    };

    /// self_adjoint_generators marks signatures whose generators are their
    /// own adjoints; requires conj(kappa) == -kappa so that the adjoint is
    /// an involution.
    AlgebraSignature(RegistryPtr reg, std::vector<Pair> pairs, bool self_adjoint_generators);

    const RegistryPtr& registry() const { return reg_; }
    std::size_t pair_count() const { return pairs_.size(); }
    const Pair& pair(std::size_t i) const { return pairs_[i]; }
    bool self_adjoint_generators() const { return self_adjoint_; }

    /// Slot of a generator in the normal-form exponent vector:
    /// 2*i for x_i, 2*i + 1 for y_i. Throws on unknown name.
    std::size_t slot_of(const std::string& name) const;
    const std::string& slot_name(std::size_t slot) const;
    std::size_t slot_count() const { return 2 * pairs_.size(); }

    friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b);

private:
    RegistryPtr reg_;
    std::vector<Pair> pairs_;
    bool self_adjoint_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

/// The Weyl algebra over generators qh, ph with [qh, ph] = i*hbar.
SignaturePtr weyl_signature(const RegistryPtr& reg);

/// Noncommutative polynomial in normal form: within each pair all x powers
/// stand left of y powers, pairs in registry order. The term map from
/// exponent vectors (x1, y1, x2, y2, ...) to nonzero Coefficients is the
/// unique normal form, so equality is structural.
class CanonicalElement {
public:
    explicit CanonicalElement(SignaturePtr sig) : sig_(std::move(sig)) {}

    static CanonicalElement zero(SignaturePtr sig) { return CanonicalElement(std::move(sig)); }
    static CanonicalElement identity(SignaturePtr sig);
    static CanonicalElement scalar(SignaturePtr sig, Coefficient c);
    static CanonicalElement generator(SignaturePtr sig, const std::string& name,
                                      std::uint32_t power = 1);
    static CanonicalElement monomial(SignaturePtr sig, ExponentVec exps, Coefficient c);

    const SignaturePtr& signature() const { return sig_; }
    const std::map<ExponentVec, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t total_degree() const;

    CanonicalElement operator-() const;
    CanonicalElement& operator+=(const CanonicalElement& o);
    CanonicalElement& operator-=(const CanonicalElement& o);
    friend CanonicalElement operator+(CanonicalElement a, const CanonicalElement& b) { return a += b; }
    friend CanonicalElement operator-(CanonicalElement a, const CanonicalElement& b) { return a -= b; }
    friend bool operator==(const CanonicalElement& a, const CanonicalElement& b);
    friend bool operator!=(const CanonicalElement& a, const CanonicalElement& b) { return !(a == b); }

    CanonicalElement scaled(const Coefficient& c) const;
    CanonicalElement scaled(const GaussianRational& c) const;
    CanonicalElement pow(unsigned e, std::uint32_t degree_cap = kDefaultDegreeCap) const;

    /// Reverses every product, conjugates every coefficient, renormal-orders.
    /// Only defined for signatures with self-adjoint generators.
    CanonicalElement adjoint() const;

    void add_term(const ExponentVec& exps, const Coefficient& c);
    void require_same_signature(const CanonicalElement& o) const;

    static constexpr std::uint32_t kDefaultDegreeCap = 64;

private:
    SignaturePtr sig_;
    std::map<ExponentVec, Coefficient> terms_;
};

/// Normal-form product via the closed-form single-pair reordering
///   y^b x^c = sum_j C(b,j) C(c,j) j! (-kappa)^j x^(c-j) y^(b-j).
/// Throws when the combined total degree exceeds degree_cap.
CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b,
                          std::uint32_t degree_cap = CanonicalElement::kDefaultDegreeCap);

/// Same product computed by iterative application of the single rewrite
/// y x -> x y - kappa. Slow; kept as the independent route the closed form
/// is checked against.
CanonicalElement multiply_rewrite(const CanonicalElement& a, const CanonicalElement& b);

CanonicalElement commutator(const CanonicalElement& a, const CanonicalElement& b,
                            std::uint32_t degree_cap = CanonicalElement::kDefaultDegreeCap);
CanonicalElement anticommutator(const CanonicalElement& a, const CanonicalElement& b,
                                std::uint32_t degree_cap = CanonicalElement::kDefaultDegreeCap);

}  // namespace moyal
