#pragma once
#include <cstdint>
#include <random>
#include <string>

#include "reflectlab/linalg.hpp"

namespace reflectlab {

/// Seeded sampling helper. Every randomized check in the library goes through
/// one of these so that a run is reproducible from a single configured seed.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : gen_(seed) {}

    /// Derive a stream for a named sub-task; independent of call order.
    static Sampler derive(uint64_t seed, const std::string& tag) {
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return Sampler(seed ^ h);
    }

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen_);
    }
    int uniform_int(int a, int b) {
        return std::uniform_int_distribution<int>(a, b)(gen_);
    }
    double normal(double sigma = 1.0) {
        return std::normal_distribution<double>(0.0, sigma)(gen_);
    }

    Vec box(int dim, double a, double b) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = uniform(a, b);
        return v;
    }

    /// Uniform direction, length scaled to `radius` at most (uniform volume).
    Vec ball(int dim, double radius) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = normal();
        double n = v.norm();
        if (n == 0) return Vec::Zero(dim);
        double r = radius * std::pow(uniform(0.0, 1.0), 1.0 / dim);
        return v * (r / n);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace reflectlab
