#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twoclub {

// Thrown when an operation would exceed a configured size/parameter budget
// (vertex budgets in generators, parameter caps in the XP/FPT solvers).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the modulator-parameterized solvers when the supplied vertex set
// does not put the remaining graph into the required class.
struct modulator_error : std::runtime_error {
    explicit modulator_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by build_cotree; carries one induced P4 as certificate.
struct not_a_cograph : std::runtime_error {
    explicit not_a_cograph(std::vector<int> p4)
        : std::runtime_error("graph contains an induced P4"), certificate(std::move(p4)) {}
    std::vector<int> certificate;  // four vertices forming an induced path
};

}  // namespace twoclub
