#pragma once

#include <cstdint>
#include <vector>

namespace eh {

// splitmix64: tiny, portable, and stable across standard libraries, which
// keeps seeded outputs byte-identical everywhere. std::shuffle and the
// <random> distributions are implementation-defined and are avoided in any
// output-determining path.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here and
    // the result is platform-stable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace eh
