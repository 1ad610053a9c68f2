#pragma once
// cylinder.hpp - Suffix-word sets describing { n : s2(n+a) - s2(n) = d }
//
// A word w (most significant character first) names the cylinder [w] of
// integers n with n mod 2^|w| = int(w), i.e. bin(n) left-zero-padded ends
// with w. Each set E_{a,d} is a finite disjoint union of such cylinders;
// the word family is produced by recursion on the bits of a:
//     even a: P_{a,d}   = { w+'0', w+'1' : w in P_{a/2,d} }
//     odd  a: P_{a,d}   = { w+'0' : w in P_{(a-1)/2, d-1} }
//                       u { w+'1' : w in P_{(a+1)/2, d+1} }
// (appended characters sit next to the least significant end), then
// simplified by the sound sibling merge [0w] u [1w] = [w] on the most
// significant side. Disjointness = no word is a suffix of another.

#include "digitdrift/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitdrift {

// Raised when a word family violates pairwise suffix-incomparability
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Word {
    std::string chars;  // '0'/'1', most significant first; empty = epsilon

    std::size_t length() const { return chars.size(); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

struct WordSet {
    std::vector<Word> words;  // sorted by (length, chars), no duplicates
    BigInt a;
    long d = 0;
};

// Memoized solver; confine one instance to one thread (shared memo table)
class CylinderSolver {
public:
    WordSet solve(const BigInt& a, long d);

private:
    using WordList = std::vector<std::string>;
    const WordList& solve_words(const BigInt& a, long d);
    std::map<std::pair<BigInt, long>, std::shared_ptr<const WordList>> memo_;
};

// One-shot convenience wrapper (fresh solver per call)
WordSet solve(const BigInt& a, long d);
WordSet solve(unsigned long a, long d);

// Trie over the low bits of n for bulk membership tests. Construction
// validates suffix-incomparability and throws IntegrityError on violation.
class SuffixMatcher {
public:
    explicit SuffixMatcher(const WordSet& ws);

    bool member(uint64_t n) const;
    bool member(const BigInt& n) const;

private:
    struct Node {
        int32_t child[2] = {-1, -1};
        bool terminal = false;
    };
    std::vector<Node> nodes_;
    std::size_t depth_ = 0;
};

// sum_w 2^{-|w|}; validates suffix-incomparability first (IntegrityError)
Rat density(const WordSet& ws);

// True iff bin(n), left-zero-padded, ends with some word of ws.
// Builds a matcher per call; bulk loops should hold a SuffixMatcher.
bool member(const BigInt& n, const WordSet& ws);
bool member(uint64_t n, const WordSet& ws);

} // namespace digitdrift
