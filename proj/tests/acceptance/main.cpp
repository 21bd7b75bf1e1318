// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <iostream>
#include <string>

#include "suites.hpp"

int main(int argc, char** argv) {
    strongpoly::suite::SuiteConfig cfg;
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    if (verbose) cfg.log = &std::cerr;
    bool ok = true;
    for (int id = 1; id <= 12; ++id) {
        auto r = strongpoly::suite::run_criterion(std::to_string(id), cfg);
        std::cout << strongpoly::suite::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
    return ok ? 0 : 1;
}
