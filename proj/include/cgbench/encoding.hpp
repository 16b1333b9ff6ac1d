#ifndef CGBENCH_ENCODING_HPP
#define CGBENCH_ENCODING_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "cgbench/rng.hpp"

namespace cgbench {

inline constexpr int num_variables = 10;
inline constexpr int bits_per_variable = 20;
inline constexpr int genome_bits = num_variables * bits_per_variable;
inline constexpr std::uint32_t segment_max = (1u << bits_per_variable) - 1; // 2^20 - 1

struct Bounds {
    double lo;
    double hi;

    Bounds(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw std::invalid_argument("Bounds: lo must be < hi");
    }
};

using DecodedVector = std::array<double, num_variables>;

// 200-bit genome; bit j of variable v lives at index 20*v + j, j = 0 being
// the most significant bit of the segment.
class Genome {
public:
    Genome() { bits_.fill(0); }

    std::uint8_t bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
    void set_bit(int i, bool v) { bits_[static_cast<std::size_t>(i)] = v ? 1 : 0; }
    void flip_bit(int i) { bits_[static_cast<std::size_t>(i)] ^= 1; }

    std::span<const std::uint8_t, bits_per_variable> segment(int v) const {
        assert(v >= 0 && v < num_variables);
        return std::span<const std::uint8_t, bits_per_variable>(
            bits_.data() + v * bits_per_variable, bits_per_variable);
    }

    std::string to_string() const {
        std::string s(genome_bits, '0');
        for (int i = 0; i < genome_bits; ++i)
            if (bits_[static_cast<std::size_t>(i)]) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    static Genome from_string(const std::string& s) {
        if (s.size() != genome_bits)
            throw std::invalid_argument("Genome: expected 200 characters, got " +
                                        std::to_string(s.size()));
        Genome g;
        for (int i = 0; i < genome_bits; ++i) {
            char c = s[static_cast<std::size_t>(i)];
            if (c != '0' && c != '1')
                throw std::invalid_argument("Genome: character other than 0/1 at position " +
                                            std::to_string(i));
            g.bits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c - '0');
        }
        return g;
    }

    bool operator==(const Genome&) const = default;

private:
    std::array<std::uint8_t, genome_bits> bits_;
};

// Segment bits as an unsigned integer, most significant bit first.
inline std::uint32_t segment_value(std::span<const std::uint8_t> segment) {
    assert(segment.size() == bits_per_variable);
    std::uint32_t u = 0;
    for (std::uint8_t b : segment) u = (u << 1) | b;
    return u;
}

inline double decode_code(std::uint32_t u, const Bounds& b) {
    return b.lo + (static_cast<double>(u) / static_cast<double>(segment_max)) * (b.hi - b.lo);
}

inline double decode_variable(std::span<const std::uint8_t> segment, const Bounds& b) {
    assert(segment.size() == bits_per_variable);
    return decode_code(segment_value(segment), b);
}

inline DecodedVector decode_genome(const Genome& g, const Bounds& b) {
    DecodedVector x{};
    for (int v = 0; v < num_variables; ++v)
        x[static_cast<std::size_t>(v)] = decode_variable(g.segment(v), b);
    return x;
}

inline Genome random_genome(Rng& rng) {
    Genome g;
    for (int i = 0; i < genome_bits; ++i) g.set_bit(i, (rng() & 1) != 0);
    return g;
}

} // namespace cgbench

#endif
