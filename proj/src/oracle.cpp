#include "digitdrift/oracle.hpp"

#include "digitdrift/bitstring.hpp"
#include "digitdrift/parallel.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace digitdrift {

namespace {

void check_window(CountingWindow window) {
    if (window.M > 30) throw std::domain_error("oracle: M > 30 exceeds the desk-scale guard");
}

// Differences stay within +-63 of 0 once offset by a's popcount; a dense
// array per worker keeps the hot loop branch-free
constexpr long kOffset = 128;
constexpr std::size_t kSlots = 257;

std::map<long, uint64_t> fast_histogram(uint64_t a, unsigned M) {
    uint64_t total = uint64_t{1} << M;
    std::mutex merge_guard;
    std::map<long, uint64_t> merged;
    parallel_for(total, [&](unsigned, uint64_t begin, uint64_t end) {
        std::vector<uint64_t> local(kSlots, 0);
        for (uint64_t n = begin; n < end; ++n) {
            int d = __builtin_popcountll(n + a) - __builtin_popcountll(n);
            ++local[static_cast<std::size_t>(d + kOffset)];
        }
        std::lock_guard<std::mutex> lock(merge_guard);
        for (std::size_t s = 0; s < kSlots; ++s)
            if (local[s]) merged[static_cast<long>(s) - kOffset] += local[s];
    });
    return merged;
}

std::map<long, uint64_t> big_histogram(const BigInt& a, unsigned M) {
    uint64_t total = uint64_t{1} << M;
    std::mutex merge_guard;
    std::map<long, uint64_t> merged;
    parallel_for(total, [&](unsigned, uint64_t begin, uint64_t end) {
        std::map<long, uint64_t> local;
        BigInt sum;
        for (uint64_t n = begin; n < end; ++n) {
            sum = a + n;
            long d = static_cast<long>(mpz_popcount(sum.get_mpz_t())) -
                     static_cast<long>(__builtin_popcountll(n));
            ++local[d];
        }
        std::lock_guard<std::mutex> lock(merge_guard);
        for (const auto& [d, c] : local) merged[d] += c;
    });
    return merged;
}

} // namespace

std::map<long, uint64_t> brute_histogram(const BigInt& a, CountingWindow window) {
    check_window(window);
    if (sgn(a) < 0) throw std::domain_error("oracle: a must be non-negative");
    // n + a must stay below 2^63 for the branch-free path
    if (a.fits_ulong_p() && mpz_sizeinbase(a.get_mpz_t(), 2) <= 62)
        return fast_histogram(a.get_ui(), window.M);
    return big_histogram(a, window.M);
}

Rat brute_density(const BigInt& a, long d, CountingWindow window) {
    auto hist = brute_histogram(a, window);
    auto it = hist.find(d);
    uint64_t count = it == hist.end() ? 0 : it->second;
    return Rat(BigInt(count)) / Rat(pow2_int(window.M));
}

Rat brute_moment(const BigInt& a, unsigned k, CountingWindow window) {
    auto hist = brute_histogram(a, window);
    Rat total(0);
    for (const auto& [d, c] : hist) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), BigInt(d).get_mpz_t(), k);
        total += Rat(p * BigInt(c));
    }
    return total / Rat(pow2_int(window.M));
}

Rat brute_cusick(const BigInt& a, CountingWindow window) {
    auto hist = brute_histogram(a, window);
    BigInt count = 0;
    for (const auto& [d, c] : hist)
        if (d >= 0) count += BigInt(c);
    return Rat(count) / Rat(pow2_int(window.M));
}

} // namespace digitdrift
