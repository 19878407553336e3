#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellcorr {

using Cx = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct PoleAt : Error {
    Cx at;
    explicit PoleAt(Cx u) : Error("rational function pole at u = " + std::to_string(u.real()) + "+" + std::to_string(u.imag()) + "i"), at(u) {}
};
struct DegenerateMobius : Error {
    DegenerateMobius() : Error("degenerate Mobius map (|det| <= 1e-12)") {}
};
struct ParseError : Error {
    std::size_t offset;
    std::vector<std::string> expected;
    ParseError(std::size_t off, std::vector<std::string> exp, const std::string& what_arg)
        : Error(what_arg), offset(off), expected(std::move(exp)) {}
    ParseError(std::size_t off, const std::string& exp)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off), expected{exp} {}
};
struct NonRational : Error {
    std::size_t offset;
    NonRational(std::size_t off, const std::string& what_arg) : Error(what_arg), offset(off) {}
    explicit NonRational(std::size_t off)
        : Error("exponent at offset " + std::to_string(off) + " does not reduce to a nonnegative integer"),
          offset(off) {}
};

// series
struct DivisionByZeroSeries : Error {
    DivisionByZeroSeries() : Error("series division by a series with vanishing leading coefficient") {}
};
struct EmptyTruncation : Error {
    EmptyTruncation() : Error("no provable coefficient in the result window") {}
};
struct ConstantSeries : Error {
    ConstantSeries() : Error("Schwarzian of a series whose derivative vanishes to truncation order") {}
};

// weierstrass
struct PoleProximity : Error {
    PoleProximity() : Error("evaluation point too close to a pole") {}
};
struct ReductionDepthExceeded : Error {
    ReductionDepthExceeded() : Error("argument reduction exceeded 40 halvings") {}
};

// schwarzian
struct CriticalPoint : Error {
    CriticalPoint() : Error("Schwarzian undefined: u' = 0 at the evaluation point") {}
};
struct UnstableStencil : Error {
    UnstableStencil() : Error("finite-difference extrapolation levels disagree") {}
};

// fuchs
struct NoBalanceFound : Error {
    NoBalanceFound() : Error("no dominant balance in u or in any pole chart") {}
};
struct ResonanceObstruction : Error {
    int level;
    explicit ResonanceObstruction(int j)
        : Error("resonance at integer level " + std::to_string(j) + " with failing solvability condition"), level(j) {}
};
struct InterpolationUnstable : Error {
    InterpolationUnstable() : Error("indicial interpolation disagrees with cross-check sample") {}
};

// briot_bouquet
struct NoExactFit : Error {
    double best_residual;
    explicit NoExactFit(double best)
        : Error("no exact binomial fit at the given degree bounds (best residual " + std::to_string(best) + ")"),
          best_residual(best) {}
};
struct ZeroL : Error {
    ZeroL() : Error("L = 0 degenerates the binomial equation") {}
};
struct CorrespondenceBroken : Error {
    int row;
    explicit CorrespondenceBroken(int r) : Error("correspondence certification failed for row " + std::to_string(r)), row(r) {}
};

struct SamplingExhausted : Error {
    SamplingExhausted() : Error("could not draw an admissible sample point in 100 tries") {}
};

} // namespace ellcorr
