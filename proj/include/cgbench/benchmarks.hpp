#ifndef CGBENCH_BENCHMARKS_HPP
#define CGBENCH_BENCHMARKS_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgbench/encoding.hpp"

namespace cgbench {

enum class Modality { unimodal, multimodal, highly_multimodal };

inline const char* modality_label(Modality m) {
    switch (m) {
        case Modality::unimodal: return "Unimodal";
        case Modality::multimodal: return "Multimodal";
        case Modality::highly_multimodal: return "Highly Multimodal";
    }
    return "?";
}

struct BenchmarkSpec {
    std::string name;
    int dimension;
    Bounds bounds;
    std::function<double(std::span<const double>)> evaluate;
    double optimum_value;
    DecodedVector optimum_location;
    Modality modality;
    double default_epsilon; // termination proximity used unless overridden
};

inline double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

inline double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return s;
}

inline double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
           std::numbers::e;
}

inline double modified_sinusoidal(std::span<const double> x) {
    double s = static_cast<double>(x.size());
    for (double v : x) s += std::sin(v);
    return s;
}

// Exponent is i+1 with i the 1-based variable index (powers 2..11).
inline double sum_of_different_powers(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::pow(std::fabs(x[i]), static_cast<double>(i + 2));
    return s;
}

inline double schwefel_2_22(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        sum += std::fabs(v);
        prod *= std::fabs(v);
    }
    return sum + prod;
}

namespace detail {

inline DecodedVector uniform_vector(double v) {
    DecodedVector x{};
    x.fill(v);
    return x;
}

inline std::vector<BenchmarkSpec> make_registry() {
    const double three_half_pi = 1.5 * std::numbers::pi;
    std::vector<BenchmarkSpec> specs;
    specs.push_back({"sphere", num_variables, Bounds(-100.0, 100.0), sphere, 0.0,
                     uniform_vector(0.0), Modality::unimodal, 1e-6});
    specs.push_back({"rastrigin", num_variables, Bounds(-5.12, 5.12), rastrigin, 0.0,
                     uniform_vector(0.0), Modality::highly_multimodal, 1e-2});
    specs.push_back({"ackley", num_variables, Bounds(-32.0, 32.0), ackley, 0.0,
                     uniform_vector(0.0), Modality::multimodal, 1e-3});
    // Optimum at 3*pi/2 per coordinate (4.714 is the rounded form).
    specs.push_back({"modified-sinusoidal", num_variables, Bounds(0.0, 6.0),
                     modified_sinusoidal, 0.0, uniform_vector(three_half_pi),
                     Modality::highly_multimodal, 1e-3});
    specs.push_back({"sum-of-powers", num_variables, Bounds(-2.048, 2.048),
                     sum_of_different_powers, 0.0, uniform_vector(0.0), Modality::unimodal,
                     1e-5});
    specs.push_back({"schwefel-2-22", num_variables, Bounds(-10.0, 10.0), schwefel_2_22, 0.0,
                     uniform_vector(0.0), Modality::multimodal, 1e-3});
    return specs;
}

} // namespace detail

inline const std::vector<BenchmarkSpec>& all_benchmarks() {
    static const std::vector<BenchmarkSpec> registry = detail::make_registry();
    return registry;
}

inline const BenchmarkSpec& lookup(std::string_view name) {
    for (const auto& spec : all_benchmarks())
        if (spec.name == name) return spec;
    std::string msg = "unknown benchmark '" + std::string(name) + "'; valid names:";
    for (const auto& spec : all_benchmarks()) msg += " " + spec.name;
    throw std::invalid_argument(msg);
}

} // namespace cgbench

#endif
