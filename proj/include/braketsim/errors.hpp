// errors.hpp
// Error types shared across the engine.

#pragma once

#include <stdexcept>
#include <string>

namespace braketsim {

// A constructed state must have squared norm exactly 1 (exact backend) or
// within 1e-12 of 1 (floating backend). Carries the offending norm^2 as text.
class NonNormalizedError : public std::runtime_error {
public:
    explicit NonNormalizedError(std::string norm_sq_text)
        : std::runtime_error("state is not normalized: norm^2 = " + norm_sq_text),
          norm_sq_text_(std::move(norm_sq_text)) {}

    const std::string& norm_sq_text() const { return norm_sq_text_; }

private:
    std::string norm_sq_text_;
};

// Raised by factorization when the state is entangled across the requested cut.
class NotProductError : public std::runtime_error {
public:
    explicit NotProductError(int rank)
        : std::runtime_error("state is entangled across this bipartition (Schmidt rank " +
                             std::to_string(rank) + "), no tensor factorization exists"),
          rank_(rank) {}

    int rank() const { return rank_; }

private:
    int rank_;
};

}  // namespace braketsim
