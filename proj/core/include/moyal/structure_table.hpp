#pragma once

#include "moyal/winf.hpp"

namespace moyal {

/// The bracket table of the quantized monomial algebra: entry (n,m,k,l)
/// holds the expansion of the s-bracket of q^n p^m and q^k p^l in the
/// monomial basis.
struct StructureTable {
    std::uint32_t nmax = 0;
    OrderParameter s;
    bool anti = false;
    std::map<std::array<std::uint32_t, 4>, BracketExpansion> entries;
};

/// Builds the full table for all indices <= nmax. Entries are computed by a
/// fixed-chunk worker pool and merged in index order, so the result (and any
/// rendering of it) is identical for every worker count.
StructureTable build_structure_table(std::uint32_t nmax, const OrderParameter& s, bool anti,
                                     unsigned jobs);

std::string table_to_json(const StructureTable& table);
std::string table_to_csv(const StructureTable& table);
std::string table_to_latex(const StructureTable& table);

}  // namespace moyal
