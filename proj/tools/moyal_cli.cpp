#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "moyal/io.hpp"
#include "moyal/structure_table.hpp"
#include "moyal/verify.hpp"

namespace {

using namespace moyal;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

OrderParameter parse_order_parameter(const std::string& text, const RegistryPtr& reg) {
    if (text == "formal" || text == "s") return OrderParameter::formal(reg, "s");
    if (text == "sp") return OrderParameter::formal(reg, "sp");
    return OrderParameter::numeric(reg, parse_gaussian(text));
}

unsigned default_jobs() {
    if (const char* env = std::getenv("MOYAL_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    return 1;
}

struct CommonOptions {
    std::string s = "formal";
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_s = true) {
    if (with_s)
        cmd->add_option("--s", opt.s, "ordering parameter: formal, sp, or an exact value like 1/2")
            ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact phase-space quantization calculator: star products, Moyal "
                 "brackets, operator orderings and their verification suites"};
    app.require_subcommand(1);
    const RegistryPtr reg = ParameterRegistry::standard();
    const SignaturePtr weyl = weyl_signature(reg);

    // star / moyal / pb
    struct BinaryCmd {
        CLI::App* cmd;
        std::string lhs, rhs;
        CommonOptions opt;
    };
    BinaryCmd star_cmd{app.add_subcommand("star", "s-star product of two (q,p) symbols")},
        moyal_cmd{app.add_subcommand("moyal", "s-Moyal bracket of two (q,p) symbols")},
        pb_cmd{app.add_subcommand("pb", "Poisson bracket of two symbols")};
    for (BinaryCmd* c : {&star_cmd, &moyal_cmd, &pb_cmd}) {
        c->cmd->add_option("lhs", c->lhs, "left symbol expression")->required();
        c->cmd->add_option("rhs", c->rhs, "right symbol expression")->required();
        add_common(c->cmd, c->opt, c->cmd != pb_cmd.cmd);
    }

    // quantize / dequantize
    struct UnaryCmd {
        CLI::App* cmd;
        std::string expr;
        CommonOptions opt;
    };
    UnaryCmd quantize_cmd{app.add_subcommand("quantize", "map a (q,p) symbol to its s-ordered operator")},
        dequantize_cmd{app.add_subcommand("dequantize", "map a Weyl-algebra element back to its s-symbol")};
    for (UnaryCmd* c : {&quantize_cmd, &dequantize_cmd}) {
        c->cmd->add_option("expr", c->expr, "expression")->required();
        add_common(c->cmd, c->opt);
    }

    // commutator (Weyl algebra)
    BinaryCmd comm_cmd{app.add_subcommand("commutator", "normal-ordered commutator of two operator expressions")};
    comm_cmd.cmd->add_option("lhs", comm_cmd.lhs, "left operator expression")->required();
    comm_cmd.cmd->add_option("rhs", comm_cmd.rhs, "right operator expression")->required();
    add_common(comm_cmd.cmd, comm_cmd.opt, false);

    // isp2 realization listing
    auto* isp2_cmd = app.add_subcommand(
        "isp2", "print a named isp(2) realization (xi_eta, xi_eta_s, delta, delta_s)");
    std::string isp2_name;
    CommonOptions isp2_opt;
    isp2_cmd->add_option("realization", isp2_name, "realization name")->required();
    add_common(isp2_cmd, isp2_opt);

    // convert-order
    auto* conv_cmd = app.add_subcommand("convert-order", "expand t_nm(from) in the t(to) basis");
    std::uint32_t conv_n = 0, conv_m = 0;
    std::string conv_from = "formal", conv_to = "formal";
    CommonOptions conv_opt;
    conv_cmd->add_option("n", conv_n)->required();
    conv_cmd->add_option("m", conv_m)->required();
    conv_cmd->add_option("--from", conv_from, "source ordering parameter")->required();
    conv_cmd->add_option("--to", conv_to, "target ordering parameter")->required();
    add_common(conv_cmd, conv_opt, false);

    // structure-constants
    auto* table_cmd = app.add_subcommand("structure-constants",
                                         "bracket table of the quantized monomials up to nmax");
    std::uint32_t table_nmax = 2;
    bool table_anti = false;
    unsigned table_jobs = default_jobs();
    CommonOptions table_opt;
    table_opt.format = "json";
    table_cmd->add_option("--nmax", table_nmax, "largest generator index")->capture_default_str();
    table_cmd->add_flag("--anti", table_anti, "tabulate the anti-bracket instead");
    table_cmd->add_option("--jobs", table_jobs, "worker threads (default: MOYAL_JOBS or 1)")
        ->capture_default_str();
    table_cmd->add_option("--s", table_opt.s, "ordering parameter")->capture_default_str();
    table_cmd->add_option("--format", table_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_suite;
    int verify_nmax = -1;
    std::uint64_t verify_seed = VerifyOptions{OrderParameter::formal(reg)}.seed;
    unsigned verify_jobs = default_jobs();
    CommonOptions verify_opt;
    verify_cmd->add_option("suite", verify_suite, "one of: " + [] {
                              std::string all;
                              for (const auto& n : verify_suite_names())
                                  all += (all.empty() ? "" : ", ") + n;
                              return all;
                          }())
        ->required();
    verify_cmd->add_option("--s", verify_opt.s, "ordering parameter")->capture_default_str();
    verify_cmd->add_option("--nmax", verify_nmax, "index/degree bound (suite default if omitted)");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks")->capture_default_str();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto fmt = [](const CommonOptions& o) { return print_format_from_name(o.format); };

    if (star_cmd.cmd->parsed() || moyal_cmd.cmd->parsed()) {
        const BinaryCmd& c = star_cmd.cmd->parsed() ? star_cmd : moyal_cmd;
        const Symbol lhs = parse_symbol(c.lhs, reg);
        const Symbol rhs = parse_symbol(c.rhs, reg);
        const OrderParameter s = parse_order_parameter(c.opt.s, reg);
        const Symbol result =
            star_cmd.cmd->parsed() ? star(lhs, rhs, s) : moyal_bracket(lhs, rhs, s);
        std::cout << print(result, fmt(c.opt)) << "\n";
        return kExitOk;
    }
    if (pb_cmd.cmd->parsed()) {
        const Symbol lhs = parse_symbol(pb_cmd.lhs, reg);
        const Symbol rhs = parse_symbol(pb_cmd.rhs, reg);
        std::cout << print(poisson(lhs, rhs), fmt(pb_cmd.opt)) << "\n";
        return kExitOk;
    }
    if (quantize_cmd.cmd->parsed()) {
        const Symbol f = parse_symbol(quantize_cmd.expr, reg);
        const OrderParameter s = parse_order_parameter(quantize_cmd.opt.s, reg);
        std::cout << print(quantize(f, s, weyl), fmt(quantize_cmd.opt)) << "\n";
        return kExitOk;
    }
    if (dequantize_cmd.cmd->parsed()) {
        const CanonicalElement a = parse_weyl(dequantize_cmd.expr, weyl);
        const OrderParameter s = parse_order_parameter(dequantize_cmd.opt.s, reg);
        std::cout << print(dequantize(a, s), fmt(dequantize_cmd.opt)) << "\n";
        return kExitOk;
    }
    if (comm_cmd.cmd->parsed()) {
        const CanonicalElement a = parse_weyl(comm_cmd.lhs, weyl);
        const CanonicalElement b = parse_weyl(comm_cmd.rhs, weyl);
        std::cout << print(commutator(a, b), fmt(comm_cmd.opt)) << "\n";
        return kExitOk;
    }
    if (isp2_cmd->parsed()) {
        const OrderParameter s = parse_order_parameter(isp2_opt.s, reg);
        const auto gens = isp2_realization(isp2_realization_from_name(isp2_name), s);
        const PrintFormat f = fmt(isp2_opt);
        if (f == PrintFormat::Json) {
            nlohmann::json j;
            for (const auto& [name, op] : gens) j[name] = to_json(op);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const std::string name : {"N1", "N2", "B1", "B2", "J"})
                std::cout << name << " = " << print(gens.at(name), f) << "\n";
        }
        return kExitOk;
    }
    if (conv_cmd->parsed()) {
        const OrderParameter from = parse_order_parameter(conv_from, reg);
        const OrderParameter to = parse_order_parameter(conv_to, reg);
        const auto expansion = convert_order(conv_n, conv_m, from, to);
        const PrintFormat f = fmt(conv_opt);
        if (f == PrintFormat::Json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& [nm, c] : expansion)
                j.push_back({{"n", nm.first}, {"m", nm.second}, {"coeff", to_json(c)}});
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
                std::cout << "(" << it->first.first << "," << it->first.second
                          << "): " << print(it->second, f) << "\n";
        }
        return kExitOk;
    }
    if (table_cmd->parsed()) {
        const OrderParameter s = parse_order_parameter(table_opt.s, reg);
        const StructureTable table = build_structure_table(table_nmax, s, table_anti, table_jobs);
        if (table_opt.format == "json")
            std::cout << table_to_json(table);
        else if (table_opt.format == "csv")
            std::cout << table_to_csv(table);
        else
            std::cout << table_to_latex(table);
        std::cout.flush();
        return kExitOk;
    }
    if (verify_cmd->parsed()) {
        VerifyOptions options{parse_order_parameter(verify_opt.s, reg), verify_nmax, verify_seed,
                              verify_jobs};
        const SuiteReport report = run_suite(verify_suite, options);
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << report.suite << ": " << report.passed() << "/" << report.checks.size()
                  << " identities hold\n";
        return report.all_pass() ? kExitOk : kExitFailed;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const moyal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const moyal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
