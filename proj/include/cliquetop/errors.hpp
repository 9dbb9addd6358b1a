#pragma once

#include <stdexcept>
#include <string>

namespace cliquetop {

// Malformed textual input (graph6, edge lists, traces).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact the library relies on failed to hold at runtime.
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was reached; results are never truncated silently.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the guarded size range of an exact algorithm.
class size_limit_error : public std::invalid_argument {
public:
    explicit size_limit_error(const std::string& what) : std::invalid_argument(what) {}
};

// The empty graph is rejected by clique and homotopy operations.
class empty_graph_error : public std::invalid_argument {
public:
    explicit empty_graph_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cliquetop
