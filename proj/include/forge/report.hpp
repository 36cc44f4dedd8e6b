// SPDX-License-Identifier: Apache-2.0
/**
 * @file report.hpp
 * @brief Structured pass/fail reports for algebraic validation routines.
 *
 * Every checker in this library returns a Report rather than a bare bool, so
 * that a failing axiom comes with a witness (the basis indices or elements on
 * which it failed).  An empty failure list means the check passed.
 */
#pragma once

#include <string>
#include <vector>

namespace forge {

struct Report {
    struct Item {
        std::string check;    // short identifier of the axiom or property
        std::string witness;  // human-readable location of the failure
    };
    std::vector<Item> failures;
    /// Checks that were deliberately not run at this scale (e.g. deferred to
    /// another verification route).  A non-empty list never blocks ok(); it
    /// exists so callers cannot mistake "not run here" for "passed here".
    std::vector<std::string> skipped;
    long checks_run = 0;

    bool ok() const { return failures.empty(); }

    void fail(std::string check, std::string witness) {
        failures.push_back({std::move(check), std::move(witness)});
    }

    void skip(std::string check) { skipped.push_back(std::move(check)); }

    // Record one executed check; returns *this for chaining.
    void count(long n = 1) { checks_run += n; }

    void merge(const Report& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
        checks_run += other.checks_run;
    }

    std::string summary() const {
        if (ok()) {
            std::string s = "ok (" + std::to_string(checks_run) + " checks)";
            if (!skipped.empty())
                s += " [" + std::to_string(skipped.size()) + " deferred]";
            return s;
        }
        std::string s = std::to_string(failures.size()) + " failure(s): ";
        size_t shown = failures.size() < 8 ? failures.size() : 8;
        for (size_t i = 0; i < shown; ++i) {
            if (i) s += "; ";
            s += failures[i].check + " @ " + failures[i].witness;
        }
        if (shown < failures.size()) s += "; ...";
        return s;
    }
};

}  // namespace forge
