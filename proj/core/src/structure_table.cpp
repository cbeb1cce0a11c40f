#include "moyal/structure_table.hpp"

#include "json.hpp"
#include <atomic>
#include <sstream>
#include <thread>

#include "moyal/io.hpp"

namespace moyal {

StructureTable build_structure_table(std::uint32_t nmax, const OrderParameter& s, bool anti,
                                     unsigned jobs) {
    if (jobs == 0) jobs = 1;
    const std::uint32_t side = nmax + 1;
    const std::size_t count = std::size_t(side) * side * side * side;

    std::vector<std::pair<std::array<std::uint32_t, 4>, BracketExpansion>> slots(count);
    std::atomic<std::size_t> cursor{0};

    const auto worker = [&]() {
        while (true) {
            const std::size_t idx = cursor.fetch_add(16);
            if (idx >= count) return;
            const std::size_t end = std::min(count, idx + 16);
            for (std::size_t t = idx; t < end; ++t) {
                std::size_t rest = t;
                const std::uint32_t l = rest % side;
                rest /= side;
                const std::uint32_t k = rest % side;
                rest /= side;
                const std::uint32_t m = rest % side;
                rest /= side;
                const std::uint32_t n = std::uint32_t(rest);
                slots[t] = {{n, m, k, l}, bracket_closed_form(n, m, k, l, s, anti)};
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    StructureTable table{nmax, s, anti, {}};
    for (auto& [key, expansion] : slots) table.entries.emplace(key, std::move(expansion));
    return table;
}

std::string table_to_json(const StructureTable& table) {
    nlohmann::json j;
    j["schema"] = "moyal/structure-table/v1";
    j["nmax"] = table.nmax;
    j["s"] = table.s.is_numeric() ? print(table.s.coeff()) : "formal:" + print(table.s.coeff());
    j["anti"] = table.anti;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, expansion] : table.entries) {
        nlohmann::json e;
        e["n"] = key[0];
        e["m"] = key[1];
        e["k"] = key[2];
        e["l"] = key[3];
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [nm, c] : expansion) {
            nlohmann::json t;
            t["qexp"] = nm.first;
            t["pexp"] = nm.second;
            t["coeff"] = to_json(c);
            terms.push_back(std::move(t));
        }
        e["terms"] = std::move(terms);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

std::string table_to_csv(const StructureTable& table) {
    std::ostringstream os;
    os << "n,m,k,l,j,qexp,pexp,coeff\n";
    for (const auto& [key, expansion] : table.entries) {
        for (const auto& [nm, c] : expansion) {
            const std::uint32_t j = key[0] + key[2] - nm.first;
            os << key[0] << "," << key[1] << "," << key[2] << "," << key[3] << "," << j << ","
               << nm.first << "," << nm.second << ",\"" << print(c) << "\"\n";
        }
    }
    return os.str();
}

std::string table_to_latex(const StructureTable& table) {
    std::ostringstream os;
    os << "\\begin{tabular}{cccc l}\n";
    os << "$n$ & $m$ & $k$ & $l$ & bracket \\\\\n\\hline\n";
    for (const auto& [key, expansion] : table.entries) {
        os << key[0] << " & " << key[1] << " & " << key[2] << " & " << key[3] << " & $";
        if (expansion.empty()) {
            os << "0";
        } else {
            bool first = true;
            for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
                const auto& [nm, c] = *it;
                if (!first) os << " + ";
                first = false;
                os << "\\left(" << print(c, PrintFormat::Latex) << "\\right)";
                if (nm.first > 0) os << " q^{" << nm.first << "}";
                if (nm.second > 0) os << " p^{" << nm.second << "}";
            }
        }
        os << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace moyal
