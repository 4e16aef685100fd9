#include "sympair/random.hpp"

namespace sympair {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational Rng::rational(unsigned bound) {
  const auto b = static_cast<std::int64_t>(bound);
  const long num = static_cast<long>(uniform_int(-b, b));
  const long den = static_cast<long>(uniform_int(1, b));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(unsigned bound) {
  while (true) {
    Rational q = rational(bound);
    if (q != 0) return q;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
  // FNV-1a over the tag.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master ^ h) + index);
}

}  // namespace sympair
