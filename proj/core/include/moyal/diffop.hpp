#pragma once

#include <map>
#include <string>

#include "moyal/ordering.hpp"

namespace moyal {

/// Polynomial differential operators on phase space are canonical-algebra
/// elements over the pairs (q, d_q), (p, d_p) (or the xi/eta analogue) with
/// [coordinate, derivative] = -1; normal form keeps multiplications left of
/// derivatives, so composition of elements is composition of actions.
using DiffOp = CanonicalElement;

/// Signature over (q, dq), (p, dp).
SignaturePtr diffop_signature_qp(const RegistryPtr& reg);
/// Signature over (xi, dxi), (eta, deta).
SignaturePtr diffop_signature_xieta(const RegistryPtr& reg);

enum class BoppKind { QL, QR, PL, PR };
enum class BoppBasis { D, Delta };  // displacement-basis (xi,eta) or parity-basis (q,p)

/// The s-parametrized Bopp operators.
/// Delta basis: QL = q - i s- d_p, QR = q + i s+ d_p,
///              PL = p + i s+ d_q, PR = p - i s- d_q.
/// D basis:     QL = -i d_xi - s- eta, QR = -i d_xi + s+ eta,
///              PL = -i d_eta + s+ xi, PR = -i d_eta - s- xi.
DiffOp bopp(BoppKind which, BoppBasis basis, const OrderParameter& s, const SignaturePtr& sig);

/// T_nm^(r)(s) = {QL^n PL^m}_(-r) - {QR^n PR^m}_(r) over the (xi,eta) Bopp
/// operators: the commutator action on the displacement basis.
DiffOp t_op(std::uint32_t n, std::uint32_t m, const OrderParameter& r, const OrderParameter& s,
            const SignaturePtr& sig);

/// Gamma_nm^(r)(s), same construction over the (q,p) Bopp operators. At
/// Bopp parameter -r its action on symbols is the r-Moyal bracket with
/// q^n p^m.
DiffOp gamma_op(std::uint32_t n, std::uint32_t m, const OrderParameter& r, const OrderParameter& s,
                const SignaturePtr& sig);

/// Exact action of a differential operator on a polynomial symbol. The
/// operator signature must match the symbol's variable pair.
Symbol apply(const DiffOp& op, const Symbol& f);

/// The Hamiltonian vector field of q^n p^m as a differential operator:
///   m q^n p^(m-1) d_q - n q^(n-1) p^m d_p.
DiffOp hvf_operator(std::uint32_t n, std::uint32_t m, const SignaturePtr& sig);

enum class Isp2Realization {
    XiEta,     // translations + squeezes + rotation on (xi, eta)
    XiEtaS,    // s-dependent family with multiplication-operator translations
    Delta,     // the (q,p) mirror
    DeltaS,    // s-dependent (q,p) family
};

Isp2Realization isp2_realization_from_name(const std::string& name);  // xi_eta, xi_eta_s, delta, delta_s

/// Generators keyed "N1","N2","B1","B2","J". For XiEtaS the N-slots hold the
/// multiplication operators M1 = -hbar eta, M2 = hbar xi. Every family
/// satisfies the same ten-relation commutator table.
std::map<std::string, DiffOp> isp2_realization(Isp2Realization which, const OrderParameter& s);

/// Element of the Weyl algebra divided by a power of hbar; covers the
/// squeeze/rotation generators whose prefactor 1/(4 hbar) has no polynomial
/// representative. Equality and brackets are exact via cross-multiplication.
struct HbarScaled {
    CanonicalElement numerator;
    std::uint32_t hbar_power = 0;  // value = numerator / hbar^hbar_power

    friend HbarScaled commutator(const HbarScaled& a, const HbarScaled& b) {
        return {moyal::commutator(a.numerator, b.numerator), a.hbar_power + b.hbar_power};
    }
    friend bool operator==(const HbarScaled& a, const HbarScaled& b) {
        const auto& reg = a.numerator.signature()->registry();
        const Coefficient ha = Coefficient::parameter(reg, "hbar", b.hbar_power);
        const Coefficient hb = Coefficient::parameter(reg, "hbar", a.hbar_power);
        return a.numerator.scaled(ha) == b.numerator.scaled(hb);
    }
    HbarScaled scaled(const GaussianRational& c) const { return {numerator.scaled(c), hbar_power}; }
};

/// Central extension in the Weyl algebra: N1 = qh, N2 = ph,
/// B1 = (qh ph + ph qh)/(4 hbar), B2 = (qh^2 - ph^2)/(4 hbar),
/// J = (qh^2 + ph^2)/(4 hbar).
std::map<std::string, HbarScaled> quantum_isp2(const SignaturePtr& weyl_sig);

}  // namespace moyal
