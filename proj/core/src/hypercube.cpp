#include "tsperfect/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tsperfect {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxDimension) + "]");
    }
}

BitVector::BitVector(int n, word_t bits) : n_(n), bits_(bits) {
    check_dimension(n);
    if (bits & ~full_mask(n)) {
        throw std::invalid_argument("bit word has bits above dimension " + std::to_string(n));
    }
}

BitVector BitVector::unit_vector(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
    return {n, unit(i)};
}

BitVector BitVector::from_support(int n, std::initializer_list<int> coords) {
    word_t w = 0;
    for (int i : coords) {
        if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
        w |= unit(i);
    }
    return {n, w};
}

BitVector BitVector::parse(std::string_view text) {
    const int n = static_cast<int>(text.size());
    check_dimension(n);
    word_t w = 0;
    for (int i = 0; i < n; ++i) {
        if (text[i] == '1') {
            w |= word_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("vector text must contain only '0' and '1': \"" +
                                        std::string(text) + "\"");
        }
    }
    return {n, w};
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) {
        if ((bits_ >> i) & 1u) s[i] = '1';
    }
    return s;
}

std::vector<int> support(const BitVector& v) {
    std::vector<int> out;
    for (int i = 1; i <= v.dim(); ++i) {
        if (v.test(i)) out.push_back(i);
    }
    return out;
}

int hamming_weight(word_t bits) noexcept { return std::popcount(bits); }
int hamming_weight(const BitVector& v) { return std::popcount(v.bits()); }

BitVector add(const BitVector& u, const BitVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in add");
    return {u.dim(), u.bits() ^ v.bits()};
}

BitVector operator+(const BitVector& u, const BitVector& v) { return add(u, v); }

BitVector concat(const BitVector& x, const BitVector& y) {
    return {x.dim() + y.dim(), x.bits() | (y.bits() << x.dim())};
}

// ---------------------------------------------------------------------------

VectorSet::VectorSet(int n) : n_(n) { check_dimension(n); }

VectorSet::VectorSet(int n, std::vector<word_t> words) : n_(n), words_(std::move(words)) {
    check_dimension(n);
    const word_t mask = full_mask(n);
    for (word_t w : words_) {
        if (w & ~mask) throw std::invalid_argument("set member exceeds dimension");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

VectorSet::VectorSet(int n, std::initializer_list<word_t> words)
    : VectorSet(n, std::vector<word_t>(words)) {}

VectorSet VectorSet::from_strings(const std::vector<std::string>& texts) {
    if (texts.empty()) throw std::invalid_argument("cannot infer dimension of an empty vector list");
    const int n = static_cast<int>(texts.front().size());
    std::vector<word_t> words;
    words.reserve(texts.size());
    for (const auto& t : texts) {
        const BitVector v = BitVector::parse(t);
        if (v.dim() != n) throw std::invalid_argument("vectors of different lengths in one set");
        words.push_back(v.bits());
    }
    return {n, std::move(words)};
}

VectorSet VectorSet::whole_space(int n) {
    check_dimension(n);
    std::vector<word_t> words(std::size_t{1} << n);
    std::iota(words.begin(), words.end(), word_t{0});
    return {n, std::move(words)};
}

bool VectorSet::contains(word_t w) const noexcept {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool VectorSet::contains(const BitVector& v) const {
    if (v.dim() != n_) throw std::invalid_argument("dimension mismatch in membership test");
    return contains(v.bits());
}

std::vector<BitVector> VectorSet::vectors() const {
    std::vector<BitVector> out;
    out.reserve(words_.size());
    for (word_t w : words_) out.emplace_back(n_, w);
    return out;
}

std::vector<std::string> VectorSet::to_strings() const {
    std::vector<std::string> out;
    out.reserve(words_.size());
    for (word_t w : words_) out.push_back(BitVector(n_, w).to_string());
    return out;
}

VectorSet translate(const VectorSet& s, word_t c) {
    std::vector<word_t> out;
    out.reserve(s.size());
    for (word_t w : s) out.push_back(w ^ c);
    return {s.dim(), std::move(out)};
}

VectorSet concat(const VectorSet& a, const VectorSet& b) {
    const int n = a.dim() + b.dim();
    check_dimension(n);
    std::vector<word_t> out;
    out.reserve(a.size() * b.size());
    for (word_t y : b) {
        for (word_t x : a) out.push_back(x | (y << a.dim()));
    }
    return {n, std::move(out)};
}

VectorSet embed(const VectorSet& s, int n) {
    if (n < s.dim()) throw std::invalid_argument("cannot embed into a smaller dimension");
    return {n, std::vector<word_t>(s.begin(), s.end())};
}

std::vector<DownwardWitness> downward_closure_violations(const VectorSet& s, std::size_t limit) {
    std::vector<DownwardWitness> out;
    // Checking maximal proper submasks suffices: closure under those implies
    // closure under all submasks by induction on weight.
    for (word_t x : s) {
        for (word_t rest = x; rest; rest &= rest - 1) {
            const word_t y = x ^ (rest & -rest);
            if (!s.contains(y)) {
                out.push_back({x, y});
                if (out.size() >= limit) return out;
            }
        }
    }
    return out;
}

bool is_downward_closed(const VectorSet& s) { return downward_closure_violations(s, 1).empty(); }

bool geodesic_within(const VectorSet& s, const BitVector& x, const BitVector& y) {
    if (!s.contains(x) || !s.contains(y)) {
        throw std::invalid_argument("geodesic endpoints must belong to the set");
    }
    const word_t diff = x.bits() ^ y.bits();
    if (diff == 0) return true;

    // Walk the interval sub-cube: a state is the subset of `diff` already
    // flipped. Compress to a dense index so visited marks fit in 2^d bits.
    std::vector<word_t> coords;
    for (word_t rest = diff; rest; rest &= rest - 1) coords.push_back(rest & -rest);
    const std::size_t d = coords.size();
    const std::size_t goal = (std::size_t{1} << d) - 1;

    std::vector<bool> seen(goal + 1, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t state = stack.back();
        stack.pop_back();
        if (state == goal) return true;
        word_t point = x.bits();
        for (std::size_t k = 0; k < d; ++k) {
            if ((state >> k) & 1u) point ^= coords[k];
        }
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t next = state | (std::size_t{1} << k);
            if (next == state || seen[next]) continue;
            if (!s.contains(point ^ coords[k])) continue;
            seen[next] = true;
            stack.push_back(next);
        }
    }
    return false;
}

bool is_polyhedromino(const VectorSet& s) {
    if (s.empty()) throw std::invalid_argument("polyhedromino test on an empty set");
    const auto members = s.vectors();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!geodesic_within(s, members[i], members[j])) return false;
        }
    }
    return true;
}

int rank(std::span<const word_t> words) {
    // basis[b] holds a reduced vector whose highest set bit is b
    word_t basis[32] = {};
    int r = 0;
    for (word_t w : words) {
        for (int b = 31; b >= 0 && w; --b) {
            if (!((w >> b) & 1u)) continue;
            if (!basis[b]) {
                basis[b] = w;
                ++r;
                break;
            }
            w ^= basis[b];
        }
    }
    return r;
}

int rank(const VectorSet& s) { return rank(s.words()); }

// ---------------------------------------------------------------------------

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
}

word_t Permutation::apply(word_t w) const noexcept {
    word_t out = 0;
    for (word_t rest = w; rest; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        out |= word_t{1} << (image[i] - 1);
    }
    return out;
}

VectorSet Permutation::apply(const VectorSet& s) const {
    if (size() != s.dim()) throw std::invalid_argument("permutation size does not match dimension");
    std::vector<word_t> out;
    out.reserve(s.size());
    for (word_t w : s) out.push_back(apply(w));
    return {s.dim(), std::move(out)};
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

CanonicalForm canonicalize(const VectorSet& s) {
    const int n = s.dim();
    if (n > kMaxCanonicalDimension) {
        throw std::invalid_argument("canonical form is brute force and limited to n <= " +
                                    std::to_string(kMaxCanonicalDimension));
    }
    Permutation perm = Permutation::identity(n);
    std::vector<word_t> best(s.begin(), s.end());
    Permutation best_perm = perm;
    std::vector<word_t> image(s.size());
    while (std::next_permutation(perm.image.begin(), perm.image.end())) {
        std::size_t k = 0;
        for (word_t w : s) image[k++] = perm.apply(w);
        std::sort(image.begin(), image.end());
        if (image < best) {
            best = image;
            best_perm = perm;
        }
    }
    return {VectorSet(n, std::move(best)), std::move(best_perm)};
}

VectorSet canonical_form(const VectorSet& s) { return canonicalize(s).form; }

std::string to_e_notation(word_t w) {
    if (w == 0) return "0";
    std::string out;
    for (word_t rest = w; rest; rest &= rest - 1) {
        if (!out.empty()) out += '+';
        out += 'e';
        out += std::to_string(std::countr_zero(rest) + 1);
    }
    return out;
}

}  // namespace tsperfect
