// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sc {

// Exit-code contract used by the CLI: input errors map to 2, precondition
// errors to 3, budget exhaustion to 4.

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
    precondition_error(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    // Human-readable description of the offending pair/slice, empty if none.
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sc
