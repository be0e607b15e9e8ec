#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string file;  // under tests/golden
    std::vector<std::string> args;
};

inline const char* const kFibonacciG = "(4+6*x^2+2*x*sqrt(4+5*x^2))/(4+5*x^2+x*sqrt(4+5*x^2))";

/// The flagship commands whose stdout is pinned byte for byte.
inline std::vector<Case> flagship() {
    return {
        {"half_vertical.txt", {"half", "--vertical", "-g", "1/(1-x)", "-f", "x*(1+x)/(1-x)", "--rows", "5"}},
        {"factor.txt", {"factor", "-g", "1/(1-x)", "-f", "x*(1+x)/(1-x)", "--rows", "4"}},
        {"antecedent_horizontal.json",
         {"antecedent", "--horizontal", "-psi", "1/(1-x)", "-phi", "x/(1-x)", "--rows", "6", "--format", "json"}},
        {"jfraction.txt", {"jfraction", "-expr", kFibonacciG, "--depth", "5"}},
        {"hankel.csv", {"hankel", "-expr", kFibonacciG, "--nmax", "6", "--format", "csv"}},
    };
}

inline std::filesystem::path dir() { return std::filesystem::path(RIORDAN_TEST_DATA_DIR) / "golden"; }

}  // namespace golden
