#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

// Base class for all errors raised by the library. The CLI maps any
// gentle::Error to exit code 2 (bad input).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax or reference error in a .gq / .hep file.
struct ParseError : Error {
    ParseError(std::string msg, int line, int column)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Local gentleness violated (degree bound or relation pattern).
struct NotGentleError : Error {
    explicit NotGentleError(std::string msg) : Error("not gentle: " + std::move(msg)) {}
};

// Gentle quiver that is not a gentle order (a permitted thread exists).
struct NotGentleOrderError : Error {
    NotGentleOrderError(std::string msg, std::vector<int> thread_arrows, int thread_vertex)
        : Error("not a gentle order: " + std::move(msg)),
          witness_arrows(std::move(thread_arrows)),
          witness_vertex(thread_vertex) {}
    // Arrow indices of a permitted-thread witness; empty for a trivial
    // thread, in which case witness_vertex names the vertex.
    std::vector<int> witness_arrows;
    int witness_vertex = -1;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct NotTransitionVertexError : Error {
    using Error::Error;
};

struct NotKappaStableError : Error {
    NotKappaStableError(std::string msg, int vertex)
        : Error("not kappa-stable: " + std::move(msg)), witness_vertex(vertex) {}
    int witness_vertex;
};

struct InstanceTooLargeError : Error {
    using Error::Error;
};

struct GenerationFailedError : Error {
    using Error::Error;
};

}  // namespace gentle
