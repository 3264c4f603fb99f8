#pragma once

#include <stdexcept>
#include <string>

namespace netmem {

// Scenario file problems: malformed document vs. violated invariant.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// MIP layer.
struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};
struct UnboundedQuadVariable : ModelError {
    explicit UnboundedQuadVariable(const std::string& msg) : ModelError(msg) {}
};

// Model building / solution extraction.
struct ModelBuildError : std::runtime_error {
    explicit ModelBuildError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ExtractionError : std::runtime_error {
    explicit ExtractionError(const std::string& msg) : std::runtime_error(msg) {}
};

// ADMM engine.
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};
struct ZeroBenchmark : std::runtime_error {
    explicit ZeroBenchmark(const std::string& msg) : std::runtime_error(msg) {}
};
struct SubproblemInfeasible : std::runtime_error {
    explicit SubproblemInfeasible(const std::string& msg) : std::runtime_error(msg) {}
};

// Agent transport.
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace netmem
