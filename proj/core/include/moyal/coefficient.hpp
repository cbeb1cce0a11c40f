#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "moyal/gaussian.hpp"

namespace moyal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered list of formal parameter names. The registry is fixed for a
/// computation session: exponent vectors of every Coefficient built against
/// it have exactly registry.size() slots.
class ParameterRegistry {
public:
    explicit ParameterRegistry(std::vector<std::string> names);

    /// Default session registry: hbar, s, sp (all declared real).
    static std::shared_ptr<const ParameterRegistry> standard();

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    bool has(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws on unknown name

    friend bool operator==(const ParameterRegistry& a, const ParameterRegistry& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const ParameterRegistry>;
using ExponentVec = std::vector<std::uint32_t>;

/// Element of the coefficient ring: a multivariate polynomial in the
/// registered formal parameters over Gaussian rationals. Values are
/// immutable in spirit: every operation returns a fresh canonical value
/// (zero terms pruned), so equality is structural.
class Coefficient {
public:
    explicit Coefficient(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Coefficient zero(RegistryPtr reg) { return Coefficient(std::move(reg)); }
    static Coefficient constant(RegistryPtr reg, GaussianRational value);
    static Coefficient one(RegistryPtr reg) { return constant(std::move(reg), GaussianRational(1)); }
    static Coefficient imaginary_unit(RegistryPtr reg) {
        return constant(std::move(reg), GaussianRational::i());
    }
    static Coefficient parameter(RegistryPtr reg, const std::string& name, std::uint32_t power = 1);
    static Coefficient monomial(RegistryPtr reg, ExponentVec exps, GaussianRational value);

    const RegistryPtr& registry() const { return reg_; }
    const std::map<ExponentVec, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The scalar value; only valid when is_constant().
    GaussianRational constant_value() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b);
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    Coefficient scaled(const GaussianRational& c) const;
    Coefficient pow(unsigned e) const;

    /// Complex conjugation: i -> -i, formal parameters fixed (declared real).
    Coefficient conjugate() const;

    /// Exact evaluation of the given parameters; unbound ones stay formal.
    Coefficient substitute(const std::map<std::string, GaussianRational>& bindings) const;

    /// Highest power of one parameter appearing in any term.
    std::uint32_t degree_in(const std::string& name) const;

    /// Polynomial coefficient of name^power (the parameter removed from the
    /// surviving exponent vectors).
    Coefficient coefficient_of(const std::string& name, std::uint32_t power) const;

    void add_term(const ExponentVec& exps, const GaussianRational& value);

private:
    void require_compatible(const Coefficient& o) const;

    RegistryPtr reg_;
    std::map<ExponentVec, GaussianRational> terms_;
};

}  // namespace moyal
