// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>

#include "moyal/diffop.hpp"
#include "moyal/io.hpp"
#include "moyal/metaplectic.hpp"
#include "moyal/structure_table.hpp"
#include "moyal/verify.hpp"
#include "moyal/winf.hpp"

using namespace moyal;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool suite_green(const std::string& name, const VerifyOptions& opt, std::string& detail) {
    const SuiteReport report = run_suite(name, opt);
    for (const auto& c : report.checks)
        if (!c.pass) {
            detail = c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
            return false;
        }
    return true;
}

}  // namespace

int main() {
    const RegistryPtr reg = ParameterRegistry::standard();
    const SignaturePtr weyl = weyl_signature(reg);
    const OrderParameter s = OrderParameter::formal(reg, "s");
    std::string detail;

    // 1. Star/operator homomorphism, monomial pairs of total degree <= 8,
    //    formal s, exact.
    {
        bool ok = true;
        std::string fail;
        std::size_t pairs = 0;
        for (std::uint32_t d1 = 0; d1 <= 8 && ok; ++d1)
            for (std::uint32_t a = 0; a <= d1 && ok; ++a)
                for (std::uint32_t d2 = 0; d1 + d2 <= 8 && ok; ++d2)
                    for (std::uint32_t c = 0; c <= d2 && ok; ++c) {
                        const Symbol f = Symbol::power(reg, a, d1 - a);
                        const Symbol g = Symbol::power(reg, c, d2 - c);
                        ++pairs;
                        // The symbol map reverses operator factor order; the
                        // quantifier runs over all ordered pairs.
                        if (dequantize(multiply(quantize(f, s, weyl), quantize(g, s, weyl)), s) !=
                            star(g, f, s)) {
                            ok = false;
                            fail = "pair q^" + std::to_string(a) + "p^" + std::to_string(d1 - a) +
                                   ", q^" + std::to_string(c) + "p^" + std::to_string(d2 - c);
                        }
                    }
        criterion(1, "star/operator homomorphism on " + std::to_string(pairs) +
                         " monomial pairs, total degree <= 8, formal s",
                  ok, fail);
    }

    // 2. Closed form vs engine, indices <= 6, formal s, with the boxed
    //    specializations s = 0, +-1 emerging under substitution.
    {
        VerifyOptions opt{s, 6};
        const bool ok = suite_green("closed-form", opt, detail);
        criterion(2, "closed-form structure constants == moyal bracket, indices <= 6, "
                     "boxed s = 0, +-1 specializations",
                  ok, detail);
    }

    // 3. Sign resolution: a single global sign relates the closed form to
    //    Weyl-algebra commutators over the full index range <= 6.
    {
        bool ok = true;
        std::string fail;
        std::vector<std::vector<CanonicalElement>> t(7);
        for (std::uint32_t n = 0; n <= 6; ++n)
            for (std::uint32_t m = 0; m <= 6; ++m)
                t[n].push_back(ordered_product(n, m, s, weyl));
        for (std::uint32_t n = 0; n <= 6 && ok; ++n)
            for (std::uint32_t m = 0; m <= 6 && ok; ++m)
                for (std::uint32_t k = 0; k <= 6 && ok; ++k)
                    for (std::uint32_t l = 0; l <= 6 && ok; ++l) {
                        const Symbol closed =
                            expansion_to_symbol(bracket_closed_form(n, m, k, l, s), reg);
                        Symbol deq = dequantize(commutator(t[n][m], t[k][l]), s);
                        if (kCommutatorBracketSign < 0) deq = -deq;
                        if (deq != closed) {
                            ok = false;
                            fail = "indices (" + std::to_string(n) + "," + std::to_string(m) +
                                   "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                    }
        criterion(3, "global sign " + std::to_string(kCommutatorBracketSign) +
                         " between commutators and the bracket, no exceptions, indices <= 6",
                  ok, fail);
    }

    // 4. Moyal Jacobi identity, monomial triples of total degree <= 9,
    //    formal s.
    {
        VerifyOptions opt{s, 9};
        const bool ok = suite_green("jacobi", opt, detail);
        criterion(4, "moyal Jacobi identity, triples of total degree <= 9, formal s", ok, detail);
    }

    // 5. isp(2): the commutator table for all four phase-space realizations
    //    and the Weyl-algebra central extension.
    {
        VerifyOptions opt{s};
        const bool ok = suite_green("isp2", opt, detail) && suite_green("bopp", opt, detail);
        criterion(5, "isp(2) commutator table for all four realizations and the quantum "
                     "central extension",
                  ok, detail);
    }

    // 6. The low-order generator table (ordered products and both
    //    phase-space realizations), formal s.
    {
        VerifyOptions opt{s};
        const bool ok = suite_green("table1", opt, detail);
        criterion(6, "generator table for n,m <= 2 (12 nonzero entries), formal s", ok, detail);
    }

    // 7. Abelian tower: product formula vs normal form, and commutativity,
    //    n,k <= 8.
    {
        VerifyOptions opt{s, 8};
        const bool ok = suite_green("h-tower", opt, detail);
        criterion(7, "H-tower product formula and [H_n, H_k] = 0 for n,k <= 8", ok, detail);
    }

    // 8. Virasoro subalgebras: modes <= 6, s-free structure constants, and
    //    the ordered-product route with the resolved sign.
    {
        VerifyOptions opt{s, 6};
        const bool ok = suite_green("virasoro", opt, detail);
        criterion(8, "two Virasoro copies, modes <= 6, formal s, s-free constants", ok, detail);
    }

    // 9. Kac-Moody cross brackets, indices <= 6, formal s.
    {
        VerifyOptions opt{s, 6};
        const bool ok = suite_green("kac-moody", opt, detail);
        criterion(9, "Kac-Moody cross brackets match the Moyal bracket, indices <= 6", ok, detail);
    }

    // 10. Hermiticity, n,m <= 5 formal real s; hermitized combinations are
    //     self-adjoint.
    {
        VerifyOptions opt{s, 5};
        const bool ok = suite_green("hermiticity", opt, detail);
        criterion(10, "adjoint(t_nm(s)) = t_nm(-s) for n,m <= 5 and self-adjoint "
                      "hermitized combinations",
                  ok, detail);
    }

    // 11. Quantum-deformed vector-field closure, generator pairs of total
    //     degree <= 6 on test monomials of degree <= 4.
    {
        VerifyOptions opt{s, 6};
        const bool ok = suite_green("gamma-closure", opt, detail);
        criterion(11, "deformed vector fields close under the bracket, pairs <= 6 on "
                      "monomials <= 4",
                  ok, detail);
    }

    // 12. Metaplectic matrices: group law and exponential reconstruction
    //     within 1e-12 over 100 random parameters in [-3,3]; exact
    //     first-order Weyl-algebra consistency.
    {
        VerifyOptions opt{s};
        const bool ok = suite_green("metaplectic", opt, detail);
        criterion(12, "metaplectic one-parameter groups (1e-12) and exact first-order "
                      "Weyl consistency",
                  ok, detail);
    }

    // 13. Determinism and speed: the nmax = 6 table is byte-identical for 1
    //     and 8 workers and builds in under a minute.
    {
        const auto start = std::chrono::steady_clock::now();
        const StructureTable t1 = build_structure_table(6, s, false, 1);
        const StructureTable t8 = build_structure_table(6, s, false, 8);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool identical =
            table_to_json(t1) == table_to_json(t8) && table_to_csv(t1) == table_to_csv(t8);
        criterion(13, "structure table nmax = 6: 1-worker and 8-worker outputs byte-identical, "
                      "built in " + std::to_string(seconds) + "s",
                  identical && seconds < 60.0,
                  identical ? "too slow" : "outputs differ");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
