// Counts permutations p of {1..n} with |p(i) - i| > d by a DP over the set of
// used values. Prints "n count" for n = 1..N. Used only to produce fixtures.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 23;
  const int d = argc > 2 ? std::atoi(argv[2]) : 3;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<unsigned __int128> dp(std::size_t{1} << n, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (dp[mask] == 0) continue;
      const int pos = __builtin_popcount(mask);
      if (pos == n) continue;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) continue;
        if (std::abs(v - pos) <= d) continue;
        dp[mask | (1u << v)] += dp[mask];
      }
    }
    std::cout << n << ' ' << to_string(dp[(std::size_t{1} << n) - 1]) << '\n';
  }
}
