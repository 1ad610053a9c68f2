#include "digitdrift/cylinder.hpp"

#include <algorithm>
#include <set>

namespace digitdrift {

namespace {

// Cascaded sibling merge: whenever both '0'+t and '1'+t are present replace
// them by t (the union of their cylinders is exactly [t])
void simplify(std::set<std::string>& words) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = words.begin(); it != words.end(); ++it) {
            if (it->empty() || (*it)[0] != '0') continue;
            std::string sibling = *it;
            sibling[0] = '1';
            auto sib = words.find(sibling);
            if (sib == words.end()) continue;
            std::string merged = it->substr(1);
            words.erase(sib);
            words.erase(it);
            words.insert(std::move(merged));
            changed = true;
            break;
        }
    }
}

std::vector<std::string> sorted_by_length(const std::set<std::string>& words) {
    std::vector<std::string> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

} // namespace

const CylinderSolver::WordList& CylinderSolver::solve_words(const BigInt& a, long d) {
    auto key = std::make_pair(a, d);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

    std::set<std::string> words;
    if (sgn(a) == 0) {
        if (d == 0) words.insert("");  // E_{0,0} is everything
    } else if (a == 1) {
        // n ending in 0 gains one bit; a low block of k ones then a 0 carries
        // through to a net change 1-k
        if (d <= 1) words.insert("0" + std::string(static_cast<std::size_t>(1 - d), '1'));
    } else if (mpz_even_p(a.get_mpz_t())) {
        for (const auto& w : solve_words(a / 2, d)) {
            words.insert(w + '0');
            words.insert(w + '1');
        }
    } else {
        BigInt b = (a - 1) / 2;
        for (const auto& w : solve_words(b, d - 1)) words.insert(w + '0');
        for (const auto& w : solve_words(b + 1, d + 1)) words.insert(w + '1');
    }
    simplify(words);

    auto stored = std::make_shared<const WordList>(sorted_by_length(words));
    return *memo_.emplace(std::move(key), std::move(stored)).first->second;
}

WordSet CylinderSolver::solve(const BigInt& a, long d) {
    if (sgn(a) < 0) throw std::domain_error("solve: a must be non-negative");
    WordSet ws;
    ws.a = a;
    ws.d = d;
    for (const auto& w : solve_words(a, d)) ws.words.push_back(Word{w});
    return ws;
}

WordSet solve(const BigInt& a, long d) {
    CylinderSolver solver;
    return solver.solve(a, d);
}

WordSet solve(unsigned long a, long d) {
    return solve(BigInt(a), d);
}

SuffixMatcher::SuffixMatcher(const WordSet& ws) {
    nodes_.emplace_back();
    // Insert characters least significant first, i.e. from the back of each
    // word; a terminal met on the way (or children below a new terminal)
    // means one word is a suffix of another.
    for (const auto& word : ws.words) {
        int32_t node = 0;
        for (auto it = word.chars.rbegin(); it != word.chars.rend(); ++it) {
            if (nodes_[node].terminal)
                throw IntegrityError("word set: \"" + word.chars + "\" extends a shorter word");
            int bit = *it - '0';
            if (bit != 0 && bit != 1)
                throw IntegrityError("word set: character outside {0,1} in \"" + word.chars + "\"");
            if (nodes_[node].child[bit] < 0) {
                nodes_[node].child[bit] = static_cast<int32_t>(nodes_.size());
                nodes_.emplace_back();
            }
            node = nodes_[node].child[bit];
        }
        if (nodes_[node].terminal)
            throw IntegrityError("word set: duplicate word \"" + word.chars + "\"");
        if (nodes_[node].child[0] >= 0 || nodes_[node].child[1] >= 0)
            throw IntegrityError("word set: \"" + word.chars + "\" is a suffix of a longer word");
        nodes_[node].terminal = true;
        depth_ = std::max(depth_, word.length());
    }
}

bool SuffixMatcher::member(uint64_t n) const {
    int32_t node = 0;
    for (std::size_t i = 0;; ++i) {
        if (nodes_[node].terminal) return true;
        if (i >= depth_) return false;
        int bit = i < 64 ? static_cast<int>((n >> i) & 1u) : 0;  // implicit zero-padding
        node = nodes_[node].child[bit];
        if (node < 0) return false;
    }
}

bool SuffixMatcher::member(const BigInt& n) const {
    int32_t node = 0;
    for (std::size_t i = 0;; ++i) {
        if (nodes_[node].terminal) return true;
        if (i >= depth_) return false;
        int bit = mpz_tstbit(n.get_mpz_t(), i);  // 0 beyond the top bit
        node = nodes_[node].child[bit];
        if (node < 0) return false;
    }
}

Rat density(const WordSet& ws) {
    SuffixMatcher validate(ws);  // throws IntegrityError on comparable pairs
    Rat total(0);
    for (const auto& w : ws.words) total += pow2_rat(-static_cast<long>(w.length()));
    return total;
}

bool member(const BigInt& n, const WordSet& ws) {
    return SuffixMatcher(ws).member(n);
}

bool member(uint64_t n, const WordSet& ws) {
    return SuffixMatcher(ws).member(n);
}

} // namespace digitdrift
