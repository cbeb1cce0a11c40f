#include "json.hpp"
#include <sstream>

#include "moyal/io.hpp"

namespace moyal {

namespace {

std::string int_str(const Integer& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::string rational_plain(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (!is_integer(r)) os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

std::string rational_text(const Rational& r, bool parenthesize_fractions) {
    if (is_integer(r) || !parenthesize_fractions) return rational_plain(r);
    return "(" + rational_plain(r) + ")";
}

std::string rational_latex(const Rational& r) {
    if (is_integer(r)) return int_str(boost::multiprecision::numerator(r));
    std::string sign = r < 0 ? "-" : "";
    Rational a = boost::multiprecision::abs(r);
    return sign + "\\frac{" + int_str(boost::multiprecision::numerator(a)) + "}{" +
           int_str(boost::multiprecision::denominator(a)) + "}";
}

std::string latex_name(const std::string& name) {
    if (name == "hbar") return "\\hbar";
    if (name == "sp") return "s'";
    if (name == "qh") return "\\hat{q}";
    if (name == "ph") return "\\hat{p}";
    if (name == "xi") return "\\xi";
    if (name == "eta") return "\\eta";
    if (name == "dq") return "\\partial_{q}";
    if (name == "dp") return "\\partial_{p}";
    if (name == "dxi") return "\\partial_{\\xi}";
    if (name == "deta") return "\\partial_{\\eta}";
    return name;
}

struct Factorized {
    GaussianRational scalar;
    std::vector<std::pair<std::string, std::uint32_t>> powers;  // name, exponent > 0
};

std::string render_text(const std::vector<Factorized>& pieces) {
    if (pieces.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& piece : pieces) {
        const GaussianRational& g = piece.scalar;
        const bool negative = (g.im() == 0 && g.re() < 0) || (g.re() == 0 && g.im() < 0);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const GaussianRational mag = negative ? -g : g;

        std::vector<std::string> factors;
        if (mag.im() == 0) {
            if (!mag.is_one() || piece.powers.empty())
                factors.push_back(rational_text(mag.re(), true));
        } else if (mag.re() == 0) {
            if (mag.im() != 1) factors.push_back(rational_text(mag.im(), true));
            factors.push_back("i");
        } else {
            std::string inner = rational_plain(mag.re());
            inner += mag.im() > 0 ? "+" : "-";
            const Rational aim = boost::multiprecision::abs(mag.im());
            if (aim != 1) inner += rational_text(aim, true) + "*";
            inner += "i";
            factors.push_back("(" + inner + ")");
        }
        for (const auto& [name, exp] : piece.powers) {
            std::string f = name;
            if (exp > 1) f += "^" + std::to_string(exp);
            factors.push_back(f);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

std::string render_latex(const std::vector<Factorized>& pieces) {
    if (pieces.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& piece : pieces) {
        const GaussianRational& g = piece.scalar;
        const bool negative = (g.im() == 0 && g.re() < 0) || (g.re() == 0 && g.im() < 0);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const GaussianRational mag = negative ? -g : g;

        std::vector<std::string> factors;
        if (mag.im() == 0) {
            if (!mag.is_one() || piece.powers.empty()) factors.push_back(rational_latex(mag.re()));
        } else if (mag.re() == 0) {
            if (mag.im() != 1) factors.push_back(rational_latex(mag.im()));
            factors.push_back("i");
        } else {
            factors.push_back("\\left(" + rational_latex(mag.re()) +
                              (mag.im() > 0 ? "+" : "-") + rational_latex(boost::multiprecision::abs(mag.im())) +
                              "i\\right)");
        }
        for (const auto& [name, exp] : piece.powers) {
            std::string f = latex_name(name);
            if (exp > 1) f += "^{" + std::to_string(exp) + "}";
            factors.push_back(f);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << " ";
            os << factors[k];
        }
    }
    return os.str();
}

/// Fully flattened scalar terms: generator monomial (descending), then
/// coefficient parameter monomial (descending).
template <typename TermMap, typename GenNames>
std::vector<Factorized> flatten(const TermMap& terms, const RegistryPtr& reg, GenNames gen_name,
                                std::size_t gen_count) {
    std::vector<Factorized> pieces;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& gens = it->first;
        const Coefficient& coeff = it->second;
        const auto& cterms = coeff.terms();
        for (auto ct = cterms.rbegin(); ct != cterms.rend(); ++ct) {
            Factorized piece;
            piece.scalar = ct->second;
            for (std::size_t k = 0; k < reg->size(); ++k)
                if (ct->first[k] > 0) piece.powers.emplace_back(reg->name(k), ct->first[k]);
            // Multiplication slots before derivative slots; commuting
            // factors, so the element is unchanged and reads naturally.
            for (std::size_t k = 0; k < gen_count; k += 2)
                if (gens[k] > 0) piece.powers.emplace_back(gen_name(k), gens[k]);
            for (std::size_t k = 1; k < gen_count; k += 2)
                if (gens[k] > 0) piece.powers.emplace_back(gen_name(k), gens[k]);
            pieces.push_back(std::move(piece));
        }
    }
    return pieces;
}

}  // namespace

PrintFormat print_format_from_name(const std::string& name) {
    if (name == "text") return PrintFormat::Text;
    if (name == "latex") return PrintFormat::Latex;
    if (name == "json") return PrintFormat::Json;
    throw Error("unknown format: " + name);
}

std::string print(const Symbol& f, PrintFormat format) {
    if (format == PrintFormat::Json) return to_json(f).dump();
    auto pieces = flatten(f.terms(), f.registry(),
                          [&](std::size_t k) { return std::string(var_name(f.vars(), k)); }, 2);
    return format == PrintFormat::Latex ? render_latex(pieces) : render_text(pieces);
}

std::string print(const CanonicalElement& a, PrintFormat format) {
    if (format == PrintFormat::Json) return to_json(a).dump();
    const auto& sig = *a.signature();
    auto pieces = flatten(a.terms(), sig.registry(),
                          [&](std::size_t k) { return sig.slot_name(k); }, sig.slot_count());
    return format == PrintFormat::Latex ? render_latex(pieces) : render_text(pieces);
}

std::string print(const Coefficient& c, PrintFormat format) {
    if (format == PrintFormat::Json) return to_json(c).dump();
    std::map<ExponentVec, Coefficient> wrapper;
    wrapper.emplace(ExponentVec{}, c);
    auto pieces = flatten(wrapper, c.registry(), [](std::size_t) { return std::string(); }, 0);
    return format == PrintFormat::Latex ? render_latex(pieces) : render_text(pieces);
}

namespace {

std::string rational_io(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Rational rational_from_io(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

}  // namespace

nlohmann::json to_json(const Coefficient& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, g] : c.terms()) {
        nlohmann::json t;
        t["exponents"] = e;
        t["re"] = rational_io(g.re());
        t["im"] = rational_io(g.im());
        terms.push_back(std::move(t));
    }
    return terms;
}

Coefficient coefficient_from_json(const nlohmann::json& j, const RegistryPtr& reg) {
    Coefficient c(reg);
    for (const auto& t : j) {
        ExponentVec e = t.at("exponents").get<ExponentVec>();
        if (e.size() != reg->size()) throw Error("coefficient exponent width mismatch");
        c.add_term(e, GaussianRational(rational_from_io(t.at("re").get<std::string>()),
                                       rational_from_io(t.at("im").get<std::string>())));
    }
    return c;
}

nlohmann::json to_json(const Symbol& f) {
    nlohmann::json j;
    j["vars"] = f.vars() == PhaseSpaceVars::QP ? "qp" : "xieta";
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::json t;
        t["exps"] = std::vector<std::uint32_t>{e[0], e[1]};
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Symbol symbol_from_json(const nlohmann::json& j, const RegistryPtr& reg) {
    const PhaseSpaceVars vars =
        j.at("vars").get<std::string>() == "qp" ? PhaseSpaceVars::QP : PhaseSpaceVars::XiEta;
    Symbol f(reg, vars);
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != 2) throw Error("symbol exponent width mismatch");
        f.add_term({exps[0], exps[1]}, coefficient_from_json(t.at("coeff"), reg));
    }
    return f;
}

nlohmann::json to_json(const CanonicalElement& a) {
    const auto& sig = *a.signature();
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < sig.pair_count(); ++i) {
        nlohmann::json p;
        p["x"] = sig.pair(i).x;
        p["y"] = sig.pair(i).y;
        p["kappa"] = to_json(sig.pair(i).xy_commutator);
        pairs.push_back(std::move(p));
    }
    nlohmann::json j;
    j["signature"] = std::move(pairs);
    j["selfAdjoint"] = sig.self_adjoint_generators();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : a.terms()) {
        nlohmann::json t;
        t["exps"] = e;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

CanonicalElement element_from_json(const nlohmann::json& j, const RegistryPtr& reg) {
    std::vector<AlgebraSignature::Pair> pairs;
    for (const auto& p : j.at("signature"))
        pairs.push_back({p.at("x").get<std::string>(), p.at("y").get<std::string>(),
                         coefficient_from_json(p.at("kappa"), reg)});
    auto sig = std::make_shared<const AlgebraSignature>(reg, std::move(pairs),
                                                        j.at("selfAdjoint").get<bool>());
    CanonicalElement a(sig);
    for (const auto& t : j.at("terms")) {
        ExponentVec e = t.at("exps").get<ExponentVec>();
        if (e.size() != sig->slot_count()) throw Error("element exponent width mismatch");
        a.add_term(e, coefficient_from_json(t.at("coeff"), reg));
    }
    return a;
}

}  // namespace moyal
