#pragma once

#include "json.hpp"
#include <string>

#include "moyal/diffop.hpp"
#include "moyal/symbol.hpp"

namespace moyal {

/// Syntax or semantic error at a source position (1-based).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Grammar (no implicit multiplication, '/' only by nonzero rational
/// constants, '^' takes a non-negative integer literal):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | primary ('^' INT)?
///   primary:= INT | IDENT | '(' expr ')'
/// Identifiers: i; parameters hbar, s, sp; symbol variables q, p, xi, eta;
/// operator generators qh, ph; derivatives dq, dp, dxi, deta.
Symbol parse_symbol(const std::string& text, const RegistryPtr& reg);
CanonicalElement parse_weyl(const std::string& text, const SignaturePtr& weyl_sig);
DiffOp parse_diffop(const std::string& text, const RegistryPtr& reg);

/// Constant expression (numbers and i only) -> exact value.
GaussianRational parse_gaussian(const std::string& text);

enum class PrintFormat { Text, Latex, Json };

PrintFormat print_format_from_name(const std::string& name);

/// Deterministic rendering; text output round-trips through parse_* back to
/// the same value. Terms are ordered by descending exponent vectors.
std::string print(const Symbol& f, PrintFormat format = PrintFormat::Text);
std::string print(const CanonicalElement& a, PrintFormat format = PrintFormat::Text);
std::string print(const Coefficient& c, PrintFormat format = PrintFormat::Text);

nlohmann::json to_json(const Coefficient& c);
nlohmann::json to_json(const Symbol& f);
nlohmann::json to_json(const CanonicalElement& a);

Coefficient coefficient_from_json(const nlohmann::json& j, const RegistryPtr& reg);
Symbol symbol_from_json(const nlohmann::json& j, const RegistryPtr& reg);
CanonicalElement element_from_json(const nlohmann::json& j, const RegistryPtr& reg);

}  // namespace moyal
