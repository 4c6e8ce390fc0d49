#include "diffelim/random.hpp"

#include "diffelim/error.hpp"

namespace diffelim {

Integer Rng::uniform_below(const Integer& n) {
  if (n < 1) throw PreconditionError("uniform_below: empty range");
  if (n == 1) return 0;
  const std::size_t bits = bit_length(Integer(n - 1));
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  while (true) {
    Integer v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = next();
      if (w == 0 && top_bits < 64) x &= (std::uint64_t{1} << top_bits) - 1;
      v <<= 64;
      Integer word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
      v += word;
    }
    if (v < n) return v;
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("uniform_int: empty range");
  Integer span = Integer(std::to_string(hi), 10) - Integer(std::to_string(lo), 10) + 1;
  Integer v = uniform_below(span) + Integer(std::to_string(lo), 10);
  return v.get_si();
}

std::uint64_t Rng::entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace diffelim
