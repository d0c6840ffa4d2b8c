#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace affnc::cli {

struct SuiteResult {
    explicit SuiteResult(std::string name) : suite(std::move(name)) {}

    std::string suite;
    bool pass = true;
    long checks = 0;
    long failures = 0;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json counterexample;  // null when none

    void check(bool ok, const nlohmann::json& witness = nullptr) {
        ++checks;
        if (!ok) {
            ++failures;
            pass = false;
            if (counterexample.is_null()) counterexample = witness;
        }
    }
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    long long n = 4;
    std::uint64_t seed = 0;
    long long winding_bound = 2;
    int samples = 200;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace affnc::cli
