#ifndef CSS_GUARD_RNG_HH
#define CSS_GUARD_RNG_HH 1

#include <cstdint>

namespace css
{
    /* SplitMix64 (Steele, Lea and Flood), the generator every seeded
     * operation in this library draws from. The constants are fixed so that
     * any reimplementation reproduces our streams exactly:
     *
     *   state += 0x9e3779b97f4a7c15
     *   z = state
     *   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
     *   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
     *   return z ^ (z >> 31)
     *
     * uniform() takes the top 53 bits as a double in [0, 1); bernoulli(p) is
     * uniform() < p; below(k) uses rejection on the low bits. The generator is
     * caller-owned and not thread safe. */
    class SplitMix64
    {
        private:
            std::uint64_t _state;

        public:
            explicit SplitMix64(std::uint64_t seed) :
                _state(seed)
            {
            }

            auto next() -> std::uint64_t
            {
                std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
                z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
                return z ^ (z >> 31);
            }

            auto uniform() -> double
            {
                return double(next() >> 11) * 0x1.0p-53;
            }

            auto bernoulli(double p) -> bool
            {
                return uniform() < p;
            }

            /// Uniform integer in [0, k); k must be positive.
            auto below(std::uint64_t k) -> std::uint64_t
            {
                std::uint64_t threshold = (0 - k) % k;
                while (true) {
                    std::uint64_t r = next();
                    if (r >= threshold)
                        return r % k;
                }
            }
    };
}

#endif
