#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mimlab
{
    /// Seeded generator whose derived draws are identical on every standard
    /// library: only the raw mt19937_64 stream is used, distributions are done
    /// by hand.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform in [0, 1) with 53 bits.
        auto uniform() -> double { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

        auto bernoulli(double p) -> bool { return uniform() < p; }

        /// Uniform in [0, bound), bound > 0.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
            std::uint64_t x;
            do
                x = _engine();
            while (x >= limit);
            return x % bound;
        }

        template <typename T>
        auto shuffle(std::span<T> items) -> void
        {
            for (std::size_t i = items.size(); i > 1; --i)
                std::swap(items[i - 1], items[below(i)]);
        }

    private:
        std::mt19937_64 _engine;
    };
}
