#include "moyal/weyl.hpp"

#include <algorithm>
#include <deque>

namespace moyal {

AlgebraSignature::AlgebraSignature(RegistryPtr reg, std::vector<Pair> pairs,
                                   bool self_adjoint_generators)
    : reg_(std::move(reg)), pairs_(std::move(pairs)), self_adjoint_(self_adjoint_generators) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].xy_commutator.is_zero()) throw Error("kappa must be nonzero");
        if (self_adjoint_ && pairs_[i].xy_commutator.conjugate() != -pairs_[i].xy_commutator)
            throw Error("self-adjoint generators require conj(kappa) == -kappa");
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            if (i != j && (pairs_[i].x == pairs_[j].x || pairs_[i].x == pairs_[j].y))
                throw Error("duplicate generator name: " + pairs_[i].x);
            if (i != j && (pairs_[i].y == pairs_[j].x || pairs_[i].y == pairs_[j].y))
                throw Error("duplicate generator name: " + pairs_[i].y);
        }
        if (pairs_[i].x == pairs_[i].y) throw Error("duplicate generator name: " + pairs_[i].x);
    }
}

std::size_t AlgebraSignature::slot_of(const std::string& name) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].x == name) return 2 * i;
        if (pairs_[i].y == name) return 2 * i + 1;
    }
    throw Error("unknown generator: " + name);
}

const std::string& AlgebraSignature::slot_name(std::size_t slot) const {
    const Pair& p = pairs_.at(slot / 2);
    return (slot % 2 == 0) ? p.x : p.y;
}

bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    if (a.pairs_.size() != b.pairs_.size() || a.self_adjoint_ != b.self_adjoint_) return false;
    if (!(*a.reg_ == *b.reg_)) return false;
    for (std::size_t i = 0; i < a.pairs_.size(); ++i) {
        if (a.pairs_[i].x != b.pairs_[i].x || a.pairs_[i].y != b.pairs_[i].y) return false;
        if (a.pairs_[i].xy_commutator != b.pairs_[i].xy_commutator) return false;
    }
    return true;
}

SignaturePtr weyl_signature(const RegistryPtr& reg) {
    Coefficient ihbar = Coefficient::parameter(reg, "hbar").scaled(GaussianRational::i());
    return std::make_shared<const AlgebraSignature>(
        reg, std::vector<AlgebraSignature::Pair>{{"qh", "ph", ihbar}}, true);
}

CanonicalElement CanonicalElement::identity(SignaturePtr sig) {
    Coefficient one = Coefficient::one(sig->registry());
    return scalar(std::move(sig), std::move(one));
}

CanonicalElement CanonicalElement::scalar(SignaturePtr sig, Coefficient c) {
    CanonicalElement e(std::move(sig));
    if (!c.is_zero()) e.terms_.emplace(ExponentVec(e.sig_->slot_count(), 0), std::move(c));
    return e;
}

CanonicalElement CanonicalElement::generator(SignaturePtr sig, const std::string& name,
                                             std::uint32_t power) {
    CanonicalElement e(std::move(sig));
    ExponentVec exps(e.sig_->slot_count(), 0);
    exps[e.sig_->slot_of(name)] = power;
    e.terms_.emplace(std::move(exps), Coefficient::one(e.sig_->registry()));
    return e;
}

CanonicalElement CanonicalElement::monomial(SignaturePtr sig, ExponentVec exps, Coefficient c) {
    CanonicalElement e(std::move(sig));
    if (exps.size() != e.sig_->slot_count()) throw Error("exponent vector width mismatch");
    if (!c.is_zero()) e.terms_.emplace(std::move(exps), std::move(c));
    return e;
}

std::uint32_t CanonicalElement::total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

void CanonicalElement::require_same_signature(const CanonicalElement& o) const {
    if (sig_ == o.sig_) return;
    if (!sig_ || !o.sig_ || !(*sig_ == *o.sig_)) throw Error("algebra signature mismatch");
}

void CanonicalElement::add_term(const ExponentVec& exps, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CanonicalElement CanonicalElement::operator-() const {
    CanonicalElement r(sig_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CanonicalElement& CanonicalElement::operator+=(const CanonicalElement& o) {
    require_same_signature(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CanonicalElement& CanonicalElement::operator-=(const CanonicalElement& o) {
    require_same_signature(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

bool operator==(const CanonicalElement& a, const CanonicalElement& b) {
    a.require_same_signature(b);
    return a.terms_ == b.terms_;
}

CanonicalElement CanonicalElement::scaled(const Coefficient& c) const {
    CanonicalElement r(sig_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

CanonicalElement CanonicalElement::scaled(const GaussianRational& c) const {
    CanonicalElement r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.scaled(c));
    return r;
}

CanonicalElement CanonicalElement::pow(unsigned e, std::uint32_t degree_cap) const {
    CanonicalElement r = identity(sig_);
    for (unsigned k = 0; k < e; ++k) r = multiply(r, *this, degree_cap);
    return r;
}

namespace {

Integer falling_contraction_count(std::uint32_t b, std::uint32_t c, std::uint32_t j) {
    // C(b,j) * C(c,j) * j!
    return binomial(b, j) * binomial(c, j) * factorial(j);
}

}  // namespace

CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b,
                          std::uint32_t degree_cap) {
    a.require_same_signature(b);
    const auto& sig = *a.signature();
    if (a.total_degree() + b.total_degree() > degree_cap)
        throw Error("product exceeds degree cap of " + std::to_string(degree_cap));

    CanonicalElement result(a.signature());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            // Partial expansions accumulated pair by pair.
            std::vector<std::pair<ExponentVec, Coefficient>> partial;
            partial.emplace_back(ExponentVec(sig.slot_count(), 0), ca * cb);
            for (std::size_t i = 0; i < sig.pair_count(); ++i) {
                const std::uint32_t xa = ea[2 * i], ya = ea[2 * i + 1];
                const std::uint32_t xb = eb[2 * i], yb = eb[2 * i + 1];
                const std::uint32_t jmax = std::min(ya, xb);
                if (jmax == 0) {
                    for (auto& [e, c] : partial) {
                        e[2 * i] = xa + xb;
                        e[2 * i + 1] = ya + yb;
                    }
                    continue;
                }
                const Coefficient minus_kappa = -sig.pair(i).xy_commutator;
                std::vector<std::pair<ExponentVec, Coefficient>> next;
                next.reserve(partial.size() * (jmax + 1));
                for (std::uint32_t j = 0; j <= jmax; ++j) {
                    const GaussianRational count(Rational(falling_contraction_count(ya, xb, j)));
                    const Coefficient weight = minus_kappa.pow(j).scaled(count);
                    for (const auto& [e, c] : partial) {
                        ExponentVec en = e;
                        en[2 * i] = xa + xb - j;
                        en[2 * i + 1] = ya + yb - j;
                        next.emplace_back(std::move(en), c * weight);
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [e, c] : partial) result.add_term(e, c);
        }
    }
    return result;
}

CanonicalElement multiply_rewrite(const CanonicalElement& a, const CanonicalElement& b) {
    a.require_same_signature(b);
    const auto& sig = *a.signature();
    CanonicalElement result(a.signature());

    // Words over generator slots; slot order is the normal order.
    struct Item {
        Coefficient coeff;
        std::vector<std::size_t> word;
    };
    std::deque<Item> queue;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<std::size_t> word;
            for (const ExponentVec* e : {&ea, &eb})
                for (std::size_t slot = 0; slot < e->size(); ++slot)
                    word.insert(word.end(), (*e)[slot], slot);
            queue.push_back({ca * cb, std::move(word)});
        }
    }

    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        bool reduced = false;
        for (std::size_t t = 0; t + 1 < item.word.size(); ++t) {
            const std::size_t g1 = item.word[t], g2 = item.word[t + 1];
            if (g1 <= g2) continue;
            if (g1 / 2 == g2 / 2) {
                // y x -> x y - kappa within one conjugate pair.
                Item swapped = item;
                std::swap(swapped.word[t], swapped.word[t + 1]);
                Item contracted{item.coeff * (-sig.pair(g1 / 2).xy_commutator), item.word};
                contracted.word.erase(contracted.word.begin() + long(t),
                                      contracted.word.begin() + long(t) + 2);
                queue.push_back(std::move(swapped));
                queue.push_back(std::move(contracted));
            } else {
                Item swapped = std::move(item);
                std::swap(swapped.word[t], swapped.word[t + 1]);
                queue.push_back(std::move(swapped));
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            ExponentVec exps(sig.slot_count(), 0);
            for (std::size_t slot : item.word) ++exps[slot];
            result.add_term(exps, item.coeff);
        }
    }
    return result;
}

CanonicalElement CanonicalElement::adjoint() const {
    if (!sig_->self_adjoint_generators())
        throw Error("adjoint requires a signature with self-adjoint generators");
    CanonicalElement result(sig_);
    for (const auto& [e, c] : terms_) {
        // Reversed word: pairs in reverse order, y^b before x^a inside each.
        CanonicalElement term = CanonicalElement::scalar(sig_, c.conjugate());
        for (std::size_t i = sig_->pair_count(); i-- > 0;) {
            if (e[2 * i + 1] > 0)
                term = multiply(term, generator(sig_, sig_->pair(i).y, e[2 * i + 1]));
            if (e[2 * i] > 0) term = multiply(term, generator(sig_, sig_->pair(i).x, e[2 * i]));
        }
        result += term;
    }
    return result;
}

CanonicalElement commutator(const CanonicalElement& a, const CanonicalElement& b,
                            std::uint32_t degree_cap) {
    return multiply(a, b, degree_cap) - multiply(b, a, degree_cap);
}

CanonicalElement anticommutator(const CanonicalElement& a, const CanonicalElement& b,
                                std::uint32_t degree_cap) {
    return multiply(a, b, degree_cap) + multiply(b, a, degree_cap);
}

}  // namespace moyal
