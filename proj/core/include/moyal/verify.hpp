#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "moyal/order_parameter.hpp"

namespace moyal {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // violated identity / offending indices on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
};

struct VerifyOptions {
    OrderParameter s;
    int nmax = -1;  // -1 picks the suite default
    std::uint64_t seed = 20240915;
    unsigned jobs = 1;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite: jacobi, homomorphism, isp2, bopp, gamma-closure,
/// virasoro, kac-moody, h-tower, hermiticity, metaplectic, table1,
/// closed-form. Throws on unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

/// The oracle-resolved global sign relating Weyl-algebra commutators to the
/// Moyal bracket: dequantize([quantize f, quantize g]) = sign * moyal(f,g).
constexpr int kCommutatorBracketSign = -1;

}  // namespace moyal
