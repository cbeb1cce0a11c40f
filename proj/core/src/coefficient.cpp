#include "moyal/coefficient.hpp"

#include <algorithm>
#include <sstream>

namespace moyal {

std::string GaussianRational::str() const {
    std::ostringstream os;
    os << re_;
    if (im_ != 0) {
        os << (im_ > 0 ? "+" : "-");
        Rational a = boost::multiprecision::abs(im_);
        if (a != 1) os << a << "*";
        os << "i";
    }
    return os.str();
}

ParameterRegistry::ParameterRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw Error("duplicate parameter name: " + names_[i]);
}

std::shared_ptr<const ParameterRegistry> ParameterRegistry::standard() {
    static const auto reg =
        std::make_shared<const ParameterRegistry>(std::vector<std::string>{"hbar", "s", "sp"});
    return reg;
}

bool ParameterRegistry::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t ParameterRegistry::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error("unknown parameter: " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

Coefficient Coefficient::constant(RegistryPtr reg, GaussianRational value) {
    Coefficient c(std::move(reg));
    if (!value.is_zero()) c.terms_.emplace(ExponentVec(c.reg_->size(), 0), std::move(value));
    return c;
}

Coefficient Coefficient::parameter(RegistryPtr reg, const std::string& name, std::uint32_t power) {
    Coefficient c(std::move(reg));
    ExponentVec e(c.reg_->size(), 0);
    e[c.reg_->index_of(name)] = power;
    c.terms_.emplace(std::move(e), GaussianRational(1));
    return c;
}

Coefficient Coefficient::monomial(RegistryPtr reg, ExponentVec exps, GaussianRational value) {
    Coefficient c(std::move(reg));
    if (exps.size() != c.reg_->size()) throw Error("exponent vector width mismatch");
    if (!value.is_zero()) c.terms_.emplace(std::move(exps), std::move(value));
    return c;
}

bool Coefficient::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

GaussianRational Coefficient::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw Error("coefficient is not constant");
    return terms_.begin()->second;
}

void Coefficient::require_compatible(const Coefficient& o) const {
    if (reg_ == o.reg_) return;
    if (!reg_ || !o.reg_ || !(*reg_ == *o.reg_)) throw Error("parameter registry mismatch");
}

void Coefficient::add_term(const ExponentVec& exps, const GaussianRational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient r(reg_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
    return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    require_compatible(o);
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    require_compatible(o);
    for (const auto& [e, v] : o.terms_) add_term(e, -v);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    a.require_compatible(b);
    Coefficient r(a.reg_);
    for (const auto& [ea, va] : a.terms_) {
        for (const auto& [eb, vb] : b.terms_) {
            ExponentVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, va * vb);
        }
    }
    return r;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    a.require_compatible(b);
    return a.terms_ == b.terms_;
}

Coefficient Coefficient::scaled(const GaussianRational& c) const {
    Coefficient r(reg_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Coefficient Coefficient::pow(unsigned e) const {
    Coefficient r = Coefficient::one(reg_);
    Coefficient b = *this;
    while (e > 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

Coefficient Coefficient::conjugate() const {
    Coefficient r(reg_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.conj());
    return r;
}

Coefficient Coefficient::substitute(const std::map<std::string, GaussianRational>& bindings) const {
    std::vector<std::pair<std::size_t, GaussianRational>> bound;
    bound.reserve(bindings.size());
    for (const auto& [name, value] : bindings) bound.emplace_back(reg_->index_of(name), value);

    Coefficient r(reg_);
    for (const auto& [e, v] : terms_) {
        GaussianRational value = v;
        ExponentVec exps = e;
        for (const auto& [idx, bval] : bound) {
            if (exps[idx] == 0) continue;
            value *= bval.pow(exps[idx]);
            exps[idx] = 0;
        }
        r.add_term(exps, value);
    }
    return r;
}

std::uint32_t Coefficient::degree_in(const std::string& name) const {
    const std::size_t idx = reg_->index_of(name);
    std::uint32_t deg = 0;
    for (const auto& [e, v] : terms_) deg = std::max(deg, e[idx]);
    return deg;
}

Coefficient Coefficient::coefficient_of(const std::string& name, std::uint32_t power) const {
    const std::size_t idx = reg_->index_of(name);
    Coefficient r(reg_);
    for (const auto& [e, v] : terms_) {
        if (e[idx] != power) continue;
        ExponentVec rest = e;
        rest[idx] = 0;
        r.add_term(rest, v);
    }
    return r;
}

}  // namespace moyal
