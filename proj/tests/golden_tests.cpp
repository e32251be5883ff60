// Byte-stability checks for the shipped transcripts. Each case either runs
// the CLI and captures stdout or renders via the library, then compares
// against tests/golden/<name>. Set GOLDEN_WRITE=1 to regenerate.
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/semantics.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace vfl;

std::string run_command(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run: " + command);
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
    int status = pclose(pipe);
    if (status == -1) throw std::runtime_error("wait failed for: " + command);
    return output;
}

std::string shell_quote(const std::string& text) {
    std::string quoted = "'";
    for (char c : text)
        quoted += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return quoted + "'";
}

std::string identity_table() {
    Signature sig = std_signature();
    Model m = std_model();
    Term lhs = parse_term("*(2, S(x(0) ...x x(x)))", sig);
    Term rhs = parse_term("*(x, +(x,1))", sig);
    std::ostringstream out;
    for (std::uint64_t v = 0; v <= 20; ++v) {
        Assignment s(std::map<std::string, Nat>{{"x", Nat(v)}});
        Nat a = interp_syntactic(lhs, m, s);
        Nat b = interp_syntactic(rhs, m, s);
        out << "x=" << v << " doubled-sum=" << to_decimal(a) << " product=" << to_decimal(b)
            << " equal=" << (a == b ? "true" : "false") << "\n";
    }
    return out.str();
}

struct GoldenCase {
    std::string name;
    std::string actual;
};

int compare_or_write(const std::string& dir, const GoldenCase& gc, bool write) {
    std::string path = dir + "/" + gc.name;
    if (write) {
        std::ofstream out(path, std::ios::binary);
        out << gc.actual;
        std::cout << "wrote " << path << "\n";
        return 0;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cout << "[FAIL] " << gc.name << ": golden file missing\n";
        return 1;
    }
    std::stringstream expected;
    expected << in.rdbuf();
    if (expected.str() == gc.actual) {
        std::cout << "[PASS] " << gc.name << "\n";
        return 0;
    }
    std::cout << "[FAIL] " << gc.name << ": output drifted\n";
    std::cout << "--- expected ---\n" << expected.str();
    std::cout << "--- actual ---\n" << gc.actual;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: golden_tests <golden-dir> <cli-path>\n";
        return 2;
    }
    const std::string dir = argv[1];
    const std::string cli = shell_quote(argv[2]);
    const bool write = std::getenv("GOLDEN_WRITE") != nullptr;

    std::vector<GoldenCase> cases;
    cases.push_back({"eval_sums.txt",
                     run_command(cli + " eval " + shell_quote("S{x=0..100}(x)")) +
                         run_command(cli + " eval " + shell_quote("S{x=0..10}(*(x,x))"))});
    cases.push_back({"identity_table.txt", identity_table()});
    cases.push_back(
        {"non_substitutability.txt",
         run_command(cli + " subst --var x --term y " +
                     shell_quote("S(*(x,y)(0) ...y *(x,y)(10))"))});
    cases.push_back({"qelim_transcript.txt",
                     run_command(cli + " qelim --verify --values 3 " +
                                 shell_quote("exists x. (x <= y & =( +(x,x), y))"))});

    // the headline sums must stay distinct: rewriting ellipsis endpoints is
    // not value-preserving, and this file is the regression witness
    const std::string& sums = cases[0].actual;
    bool has5050 = sums.find("value: 5050\n") != std::string::npos;
    bool has385 = sums.find("value: 385\n") != std::string::npos;
    int failures = 0;
    if (!has5050 || !has385) {
        std::cout << "[FAIL] eval_sums.txt: expected values 5050 and 385, got:\n" << sums;
        ++failures;
    }

    for (const GoldenCase& gc : cases) failures += compare_or_write(dir, gc, write);
    if (write) return 0;
    std::cout << (failures == 0 ? "golden: all stable\n" : "golden: drift detected\n");
    return failures == 0 ? 0 : 1;
}
