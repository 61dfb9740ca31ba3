// bezout-reduce: batch front end for diagonal reduction and the ring-condition
// certificates.  Subcommands:
//   reduce    read a JSON matrix, emit P/Pinv/Q/Qinv/D/chain (re-verified)
//   check     condition queries (stable-range, adequate, pm-split, pm-witness,
//             feckly-clean, lam)
//   selftest  bundled invariant suites, deterministic under --seed
//
// Exit codes: 0 ok / verdict true; 1 verdict false; 2 parse or arity error;
// 3 unsupported ring/algorithm combination; 4 internal verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bezout/conditions.hpp"
#include "bezout/diagonal.hpp"
#include "bezout/json_io.hpp"

#include "selftest_suites.inc"

using namespace bezout;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitVerification = 4;

struct cli_exit {
    int code;
};

int max_matrix_size() {
    const char* env = std::getenv("BEZOUT_REDUCE_MAX_SIZE");
    if (!env) return 8;
    int v = std::atoi(env);
    return v > 0 ? v : 8;
}

json chain_to_json(const std::vector<RingElement>& chain) {
    json out = json::array();
    for (const auto& d : chain) out.push_back(to_string(d));
    return out;
}

int cmd_reduce(const std::string& ring_flag, const std::string& input,
               const std::string& algorithm, bool emit_transcript) {
    Matrix a = [&] {
        std::ifstream in(input);
        if (!in) throw parse_error("cannot open input file: " + input);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad JSON: ") + e.what());
        }
        return matrix_from_json(j);
    }();
    if (!ring_flag.empty() && RingDescriptor::parse(ring_flag) != a.ring)
        throw parse_error("--ring disagrees with the ring in the input file");
    int cap = max_matrix_size();
    if (a.rows > cap || a.cols > cap)
        throw parse_error("matrix exceeds BEZOUT_REDUCE_MAX_SIZE = " + std::to_string(cap));

    ReductionResult r;
    if (algorithm == "diagonal") {
        r = diagonal_reduce(a);
    } else if (algorithm == "mspec-loop") {
        if (a.rows != 2 || a.cols != 2) throw cli_exit{kExitUnsupported};
        r = mspec_pivot_loop(a).reduction;
    } else if (algorithm == "mod-jacobson") {
        if (a.ring.kind != RingKind::LocalizedIntegers) throw cli_exit{kExitUnsupported};
        r = reduce_mod_jacobson(a);
    } else {
        throw cli_exit{kExitUnsupported};
    }

    if (!verify_reduction(a, r)) return kExitVerification;
    json out{{"P", matrix_to_json(r.P)},     {"Pinv", matrix_to_json(r.Pinv)},
             {"Q", matrix_to_json(r.Q)},     {"Qinv", matrix_to_json(r.Qinv)},
             {"D", matrix_to_json(r.D)},     {"chain", chain_to_json(r.chain)},
             {"verified", true}};
    if (emit_transcript) out["transcript"] = transcript_to_json(r.transcript);
    std::cout << out.dump(2) << "\n";
    return 0;
}

RingElement arg_element(const RingDescriptor& ring, const std::string& s) {
    return parse_element(ring, s);
}

int cmd_check(const std::string& ring_flag, const std::string& condition,
              const std::vector<std::string>& args) {
    RingDescriptor ring = RingDescriptor::parse(
        ring_flag.empty() ? (condition == "feckly-clean" ? "zloc23" : "int") : ring_flag);
    auto need = [&](size_t n) {
        if (args.size() != n) throw cli_exit{kExitParse};
    };
    json out;
    int code = 0;
    try {
        if (condition == "stable-range") {
            need(1);
            auto cert = stable_range_one(std::stoll(args[0]));
            out["verdict"] = cert.verdict;
            if (!cert.verdict) {
                out["counterexample"] = {std::to_string(cert.counterexample->first),
                                         std::to_string(cert.counterexample->second)};
                code = 1;
            }
        } else if (condition == "adequate") {
            need(2);
            auto s = adequate_split(arg_element(ring, args[0]), arg_element(ring, args[1]));
            out["r"] = to_string(s.r);
            out["s"] = to_string(s.s);
        } else if (condition == "pm-split") {
            need(3);
            auto s = pm_split(arg_element(ring, args[0]), arg_element(ring, args[1]),
                              arg_element(ring, args[2]));
            out["r"] = to_string(s.r);
            out["s"] = to_string(s.s);
        } else if (condition == "pm-witness") {
            need(3);
            auto w = pm_witness(std::stoll(args[0]), std::stoll(args[1]), std::stoll(args[2]));
            out["r"] = std::to_string(w.r);
            out["s"] = std::to_string(w.s);
        } else if (condition == "feckly-clean") {
            need(1);
            auto w = feckly_clean_decompose(arg_element(ring, args[0]));
            out["e"] = to_string(w.e);
            out["unit"] = to_string(w.unit);
        } else if (condition == "lam") {
            need(1);
            bool v = lam_check(arg_element(ring, args[0]));
            out["verdict"] = v;
            if (!v) code = 1;
        } else {
            throw cli_exit{kExitParse};
        }
    } catch (const cli_exit&) {
        throw;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        // precondition violations on otherwise well-formed arguments
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    std::cout << out.dump(2) << "\n";
    return code;
}

// --- selftest suites ---------------------------------------------------------

int cmd_selftest(const std::string& suite, unsigned long long seed) {
    int total = 0, passed = 0;
    bool matched = false;
    for (const auto& s : selftest::suites()) {
        if (!suite.empty() && suite != s.name) continue;
        matched = true;
        ++total;
        bool ok = false;
        try {
            ok = s.run(seed);
        } catch (const std::exception& e) {
            std::cout << s.name << ": FAIL (" << e.what() << ")\n";
            continue;
        }
        std::cout << s.name << (ok ? ": pass" : ": FAIL") << "\n";
        if (ok) ++passed;
    }
    if (!matched) {
        std::cerr << "error: unknown suite: " << suite << "\n";
        return kExitParse;
    }
    std::cout << passed << "/" << total << " suites passed\n";
    return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal reduction and ring-condition certificates"};
    app.require_subcommand(1);

    std::string ring_flag, input, algorithm = "diagonal", condition, suite;
    std::vector<std::string> check_args;
    bool emit_transcript = false;
    unsigned long long seed = 1;

    auto* reduce = app.add_subcommand("reduce", "diagonally reduce a JSON matrix");
    reduce->add_option("--ring", ring_flag, "ring descriptor (must match the input file)");
    reduce->add_option("--input", input, "JSON matrix file")->required();
    reduce->add_option("--algorithm", algorithm, "diagonal | mspec-loop | mod-jacobson");
    reduce->add_flag("--emit-transcript", emit_transcript, "append the elementary-op list");

    auto* check = app.add_subcommand("check", "condition queries");
    check->add_option("--ring", ring_flag, "ring descriptor for element arguments");
    check->add_option("condition", condition,
                      "stable-range | adequate | pm-split | pm-witness | feckly-clean | lam")
        ->required();
    check->add_option("args", check_args, "condition arguments");

    auto* selftest = app.add_subcommand("selftest", "run the bundled invariant suites");
    selftest->add_option("--suite", suite, "run a single suite by name");
    selftest->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(ring_flag, input, algorithm, emit_transcript);
        if (check->parsed()) return cmd_check(ring_flag, condition, check_args);
        return cmd_selftest(suite, seed);
    } catch (const cli_exit& e) {
        return e.code;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const unsupported_operation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}
