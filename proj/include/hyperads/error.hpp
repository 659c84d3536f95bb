#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperads {

/// Base class for every error raised by the solvers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters or data outside their documented domain.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Grid or run configuration that cannot work (stability, degenerate solves).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested too close to a singularity of an eigenvalue function.
class PoleError : public Error {
public:
    PoleError(const std::string& what, double alpha, double pole)
        : Error(what), alpha_(alpha), pole_(pole) {}
    double alpha() const noexcept { return alpha_; }
    double pole() const noexcept { return pole_; }

private:
    double alpha_;
    double pole_;
};

class BracketError : public Error {
public:
    using Error::Error;
};

/// Fewer roots could be resolved than requested. The resolved prefix is kept.
class PartialResult : public Error {
public:
    PartialResult(const std::string& what, std::vector<double> found)
        : Error(what), found_(std::move(found)) {}
    const std::vector<double>& found() const noexcept { return found_; }

private:
    std::vector<double> found_;
};

class DegenerateBasis : public Error {
public:
    using Error::Error;
};

class DegenerateMode : public Error {
public:
    using Error::Error;
};

/// Explicit time stepping produced a non-finite or runaway value.
class Instability : public Error {
public:
    Instability(const std::string& what, std::size_t step, std::size_t node, double lambda)
        : Error(what), step_(step), node_(node), lambda_(lambda) {}
    std::size_t step() const noexcept { return step_; }
    std::size_t node() const noexcept { return node_; }
    double lambda() const noexcept { return lambda_; }

private:
    std::size_t step_;
    std::size_t node_;
    double lambda_;
};

}  // namespace hyperads
