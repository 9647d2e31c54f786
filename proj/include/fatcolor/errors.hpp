#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatcolor {

class FatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoopEdge : public FatError {
public:
    explicit LoopEdge(int v) : FatError("loop edge at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

class DuplicateEdge : public FatError {
public:
    DuplicateEdge(int a, int b)
        : FatError("duplicate edge " + std::to_string(a) + " " + std::to_string(b)), u(a), v(b) {}
    int u, v;
};

class VertexOutOfRange : public FatError {
public:
    using FatError::FatError;
};

class InvalidParams : public FatError {
public:
    using FatError::FatError;
};

class IsolatedVertex : public FatError {
public:
    explicit IsolatedVertex(int v)
        : FatError("vertex " + std::to_string(v) + " is isolated; normalized Laplacian undefined"), vertex(v) {}
    int vertex;
};

class NotRegular : public FatError {
public:
    NotRegular() : FatError("graph is not regular") {}
};

class DegenerateGraph : public FatError {
public:
    using FatError::FatError;
};

class TooLarge : public FatError {
public:
    using FatError::FatError;
};

class UnequalGroups : public FatError {
public:
    using FatError::FatError;
};

class NotAPartition : public FatError {
public:
    using FatError::FatError;
};

class ParseError : public FatError {
public:
    ParseError(std::size_t line_no, const std::string& what)
        : FatError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

} // namespace fatcolor
