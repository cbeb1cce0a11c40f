#include "moyal/diffop.hpp"

namespace moyal {

namespace {

SignaturePtr make_diffop_signature(const RegistryPtr& reg, const std::string& v0,
                                   const std::string& v1) {
    const Coefficient minus_one =
        Coefficient::constant(reg, GaussianRational(-1));
    return std::make_shared<const AlgebraSignature>(
        reg,
        std::vector<AlgebraSignature::Pair>{{v0, "d" + v0, minus_one}, {v1, "d" + v1, minus_one}},
        false);
}

DiffOp mono(const SignaturePtr& sig, std::uint32_t a, std::uint32_t b, std::uint32_t c,
            std::uint32_t d, Coefficient w) {
    return CanonicalElement::monomial(sig, ExponentVec{a, b, c, d}, std::move(w));
}

PhaseSpaceVars vars_of_signature(const AlgebraSignature& sig) {
    if (sig.pair_count() == 2 && sig.pair(0).x == "q" && sig.pair(1).x == "p")
        return PhaseSpaceVars::QP;
    if (sig.pair_count() == 2 && sig.pair(0).x == "xi" && sig.pair(1).x == "eta")
        return PhaseSpaceVars::XiEta;
    throw Error("not a phase-space differential-operator signature");
}

}  // namespace

SignaturePtr diffop_signature_qp(const RegistryPtr& reg) {
    return make_diffop_signature(reg, "q", "p");
}

SignaturePtr diffop_signature_xieta(const RegistryPtr& reg) {
    return make_diffop_signature(reg, "xi", "eta");
}

DiffOp bopp(BoppKind which, BoppBasis basis, const OrderParameter& s, const SignaturePtr& sig) {
    const auto& reg = s.registry();
    const GaussianRational i = GaussianRational::i();
    const Coefficient splus = s.splus();
    const Coefficient sminus = s.sminus();
    const Coefficient one = Coefficient::one(reg);

    if (basis == BoppBasis::Delta) {
        // slots: q, dq, p, dp
        switch (which) {
            case BoppKind::QL:
                return mono(sig, 1, 0, 0, 0, one) + mono(sig, 0, 0, 0, 1, sminus.scaled(-i));
            case BoppKind::QR:
                return mono(sig, 1, 0, 0, 0, one) + mono(sig, 0, 0, 0, 1, splus.scaled(i));
            case BoppKind::PL:
                return mono(sig, 0, 0, 1, 0, one) + mono(sig, 0, 1, 0, 0, splus.scaled(i));
            case BoppKind::PR:
                return mono(sig, 0, 0, 1, 0, one) + mono(sig, 0, 1, 0, 0, sminus.scaled(-i));
        }
    } else {
        // slots: xi, dxi, eta, deta
        switch (which) {
            case BoppKind::QL:
                return mono(sig, 0, 1, 0, 0, one.scaled(-i)) + mono(sig, 0, 0, 1, 0, -sminus);
            case BoppKind::QR:
                return mono(sig, 0, 1, 0, 0, one.scaled(-i)) + mono(sig, 0, 0, 1, 0, splus);
            case BoppKind::PL:
                return mono(sig, 0, 0, 0, 1, one.scaled(-i)) + mono(sig, 1, 0, 0, 0, splus);
            case BoppKind::PR:
                return mono(sig, 0, 0, 0, 1, one.scaled(-i)) + mono(sig, 1, 0, 0, 0, -sminus);
        }
    }
    throw Error("unreachable");
}

DiffOp t_op(std::uint32_t n, std::uint32_t m, const OrderParameter& r, const OrderParameter& s,
            const SignaturePtr& sig) {
    const DiffOp left = ordered_pair_product(bopp(BoppKind::QL, BoppBasis::D, s, sig),
                                             bopp(BoppKind::PL, BoppBasis::D, s, sig), n, m,
                                             r.negated());
    const DiffOp right = ordered_pair_product(bopp(BoppKind::QR, BoppBasis::D, s, sig),
                                              bopp(BoppKind::PR, BoppBasis::D, s, sig), n, m, r);
    return left - right;
}

DiffOp gamma_op(std::uint32_t n, std::uint32_t m, const OrderParameter& r, const OrderParameter& s,
                const SignaturePtr& sig) {
    const DiffOp left = ordered_pair_product(bopp(BoppKind::QL, BoppBasis::Delta, s, sig),
                                             bopp(BoppKind::PL, BoppBasis::Delta, s, sig), n, m,
                                             r.negated());
    const DiffOp right = ordered_pair_product(bopp(BoppKind::QR, BoppBasis::Delta, s, sig),
                                              bopp(BoppKind::PR, BoppBasis::Delta, s, sig), n, m, r);
    return left - right;
}

Symbol apply(const DiffOp& op, const Symbol& f) {
    const auto& sig = *op.signature();
    if (vars_of_signature(sig) != f.vars())
        throw Error("operator and symbol live on different variable pairs");

    Symbol result = Symbol::zero(f.registry(), f.vars());
    for (const auto& [e, c] : op.terms()) {
        const std::uint32_t mul0 = e[0], der0 = e[1], mul1 = e[2], der1 = e[3];
        Symbol part = f.derivative(0, der0).derivative(1, der1);
        if (part.is_zero()) continue;
        Symbol shift = Symbol::monomial(f.registry(), mul0, mul1, c, f.vars());
        result += shift * part;
    }
    return result;
}

DiffOp hvf_operator(std::uint32_t n, std::uint32_t m, const SignaturePtr& sig) {
    const auto& reg = sig->registry();
    DiffOp v = CanonicalElement::zero(sig);
    if (m > 0)
        v += mono(sig, n, 1, m - 1, 0, Coefficient::constant(reg, GaussianRational(long(m))));
    if (n > 0)
        v += mono(sig, n - 1, 0, m, 1, Coefficient::constant(reg, GaussianRational(-long(n))));
    return v;
}

Isp2Realization isp2_realization_from_name(const std::string& name) {
    if (name == "xi_eta") return Isp2Realization::XiEta;
    if (name == "xi_eta_s") return Isp2Realization::XiEtaS;
    if (name == "delta") return Isp2Realization::Delta;
    if (name == "delta_s") return Isp2Realization::DeltaS;
    throw Error("unknown isp(2) realization: " + name);
}

std::map<std::string, DiffOp> isp2_realization(Isp2Realization which, const OrderParameter& s) {
    const auto& reg = s.registry();
    const GaussianRational i = GaussianRational::i();
    const GaussianRational half_i = i * GaussianRational(1, 2);
    const Coefficient one = Coefficient::one(reg);
    const Coefficient hbar = Coefficient::parameter(reg, "hbar");
    const Coefficient quarter_s_hbar = (hbar * s.coeff()).scaled(GaussianRational(1, 4));

    std::map<std::string, DiffOp> gens;
    const auto put = [&gens](const std::string& name, DiffOp op) {
        gens.emplace(name, std::move(op));
    };
    if (which == Isp2Realization::XiEta || which == Isp2Realization::XiEtaS) {
        const SignaturePtr sig = diffop_signature_xieta(reg);
        // slots: xi, dxi, eta, deta
        const DiffOp xi_dxi = mono(sig, 1, 1, 0, 0, one);
        const DiffOp eta_deta = mono(sig, 0, 0, 1, 1, one);
        const DiffOp xi_deta = mono(sig, 1, 0, 0, 1, one);
        const DiffOp eta_dxi = mono(sig, 0, 1, 1, 0, one);
        const DiffOp b1 = (xi_dxi - eta_deta).scaled(-half_i);
        const DiffOp b2 = (xi_deta + eta_dxi).scaled(half_i);
        const DiffOp j = (xi_deta - eta_dxi).scaled(-half_i);
        if (which == Isp2Realization::XiEta) {
            put("N1", mono(sig, 0, 1, 0, 0, one.scaled(-i)));
            put("N2", mono(sig, 0, 0, 0, 1, one.scaled(-i)));
            put("B1", b1);
            put("B2", b2);
            put("J", j);
        } else {
            const DiffOp xi2 = mono(sig, 2, 0, 0, 0, one);
            const DiffOp eta2 = mono(sig, 0, 0, 2, 0, one);
            put("N1", mono(sig, 0, 0, 1, 0, -hbar));  // M1 = -hbar eta
            put("N2", mono(sig, 1, 0, 0, 0, hbar));   // M2 = hbar xi
            put("B1", b1);
            put("B2", b2 - (xi2 + eta2).scaled(quarter_s_hbar));
            put("J", j + (xi2 - eta2).scaled(quarter_s_hbar));
        }
    } else {
        const SignaturePtr sig = diffop_signature_qp(reg);
        // slots: q, dq, p, dp
        const DiffOp q_dq = mono(sig, 1, 1, 0, 0, one);
        const DiffOp p_dp = mono(sig, 0, 0, 1, 1, one);
        const DiffOp q_dp = mono(sig, 1, 0, 0, 1, one);
        const DiffOp p_dq = mono(sig, 0, 1, 1, 0, one);
        const DiffOp b1 = (q_dq - p_dp).scaled(half_i);
        const DiffOp b2 = (q_dp + p_dq).scaled(-half_i);
        const DiffOp j = (q_dp - p_dq).scaled(-half_i);
        put("N1", mono(sig, 0, 0, 0, 1, hbar.scaled(-i)));  // -i hbar d_p
        put("N2", mono(sig, 0, 1, 0, 0, hbar.scaled(i)));   // i hbar d_q
        put("B1", b1);
        if (which == Isp2Realization::Delta) {
            put("B2", b2);
            put("J", j);
        } else {
            const DiffOp dq2 = mono(sig, 0, 2, 0, 0, one);
            const DiffOp dp2 = mono(sig, 0, 0, 0, 2, one);
            put("B2", b2 + (dq2 + dp2).scaled(quarter_s_hbar));
            put("J", j - (dq2 - dp2).scaled(quarter_s_hbar));
        }
    }
    return gens;
}

std::map<std::string, HbarScaled> quantum_isp2(const SignaturePtr& weyl_sig) {
    const CanonicalElement qh = CanonicalElement::generator(weyl_sig, "qh");
    const CanonicalElement ph = CanonicalElement::generator(weyl_sig, "ph");
    const GaussianRational quarter(1, 4);

    std::map<std::string, HbarScaled> gens;
    gens.emplace("N1", HbarScaled{qh, 0});
    gens.emplace("N2", HbarScaled{ph, 0});
    gens.emplace("B1", HbarScaled{(multiply(qh, ph) + multiply(ph, qh)).scaled(quarter), 1});
    gens.emplace("B2", HbarScaled{(multiply(qh, qh) - multiply(ph, ph)).scaled(quarter), 1});
    gens.emplace("J", HbarScaled{(multiply(qh, qh) + multiply(ph, ph)).scaled(quarter), 1});
    return gens;
}

}  // namespace moyal
