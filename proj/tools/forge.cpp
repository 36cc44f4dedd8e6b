// SPDX-License-Identifier: Apache-2.0
/**
 * @file forge.cpp
 * @brief Command-line driver: build the Hopf algebras, run their verification
 *        suites, and emit certificates.  Subcommands are wired up as the
 *        corresponding library modules land.
 */

#include <cstdio>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::puts("forge: subcommands not wired up yet");
    return 2;
}
