#ifndef TSPERFECT_HYPERCUBE_HPP
#define TSPERFECT_HYPERCUBE_HPP

// Bit-level core of the binary cube F_2^n.
//
// Coordinate i (1-based, as users see it) lives in bit (i-1) of the word, so
// e_i == 1u << (i-1). The text form is a '0'/'1' string whose leftmost
// character is coordinate 1.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsperfect {

using word_t = std::uint32_t;

inline constexpr int kMaxDimension = 24;

/// Throws std::invalid_argument unless 1 <= n <= kMaxDimension.
void check_dimension(int n);

constexpr word_t full_mask(int n) noexcept {
    return n >= 32 ? ~word_t{0} : (word_t{1} << n) - 1;
}

constexpr word_t unit(int i) noexcept { return word_t{1} << (i - 1); }

/// An element of F_2^n.
class BitVector {
public:
    BitVector() = default;
    BitVector(int n, word_t bits);

    static BitVector zero(int n) { return {n, 0}; }
    /// e_i, 1-based.
    static BitVector unit_vector(int n, int i);
    static BitVector from_support(int n, std::initializer_list<int> coords);
    static BitVector parse(std::string_view text);

    int dim() const noexcept { return n_; }
    word_t bits() const noexcept { return bits_; }
    bool test(int i) const noexcept { return (bits_ >> (i - 1)) & 1u; }
    bool is_zero() const noexcept { return bits_ == 0; }

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    int n_ = 1;
    word_t bits_ = 0;
};

std::vector<int> support(const BitVector& v);
int hamming_weight(const BitVector& v);
int hamming_weight(word_t bits) noexcept;

/// Coordinatewise XOR. Throws on dimension mismatch.
BitVector add(const BitVector& u, const BitVector& v);
BitVector operator+(const BitVector& u, const BitVector& v);

/// x | y: the first x.dim() coordinates come from x.
BitVector concat(const BitVector& x, const BitVector& y);

/// A finite subset of F_2^n. Members are kept sorted as integers, unique.
class VectorSet {
public:
    VectorSet() = default;
    explicit VectorSet(int n);
    VectorSet(int n, std::vector<word_t> words);
    VectorSet(int n, std::initializer_list<word_t> words);

    static VectorSet from_strings(const std::vector<std::string>& texts);
    static VectorSet whole_space(int n);

    int dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    std::span<const word_t> words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(word_t w) const noexcept;
    bool contains(const BitVector& v) const;

    std::vector<BitVector> vectors() const;
    std::vector<std::string> to_strings() const;

    friend bool operator==(const VectorSet&, const VectorSet&) = default;
    /// Total order: dimension, then the sorted member sequence.
    friend auto operator<=>(const VectorSet&, const VectorSet&) = default;

private:
    int n_ = 1;
    std::vector<word_t> words_;
};

/// c + S.
VectorSet translate(const VectorSet& s, word_t c);

/// A | B = {a | b}.
VectorSet concat(const VectorSet& a, const VectorSet& b);

/// S | {0_extra}: embeds S in a higher dimension.
VectorSet embed(const VectorSet& s, int n);

/// True iff every vector whose support lies inside the support of a member
/// is itself a member.
bool is_downward_closed(const VectorSet& s);

/// First pair (x in S, y not in S) with supp(y) a maximal proper subset of
/// supp(x), members scanned in increasing order. Empty result if S is
/// downward closed.
struct DownwardWitness {
    word_t member;
    word_t missing;
};
std::vector<DownwardWitness> downward_closure_violations(const VectorSet& s, std::size_t limit = 1);

/// True iff some geodesic (monotone single-coordinate flips) from x to y stays
/// inside S. Throws if x or y is not in S.
bool geodesic_within(const VectorSet& s, const BitVector& x, const BitVector& y);

/// Every pair of members is joined by a geodesic inside S. Throws if S is empty.
bool is_polyhedromino(const VectorSet& s);

/// Dimension of the F_2-span.
int rank(const VectorSet& s);
int rank(std::span<const word_t> words);

/// A coordinate permutation: image[i-1] is where coordinate i goes (1-based).
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n);
    int size() const noexcept { return static_cast<int>(image.size()); }
    word_t apply(word_t w) const noexcept;
    VectorSet apply(const VectorSet& s) const;
    Permutation inverse() const;
};

inline constexpr int kMaxCanonicalDimension = 8;

struct CanonicalForm {
    VectorSet form;
    /// Maps the input onto `form`.
    Permutation perm;
};

/// Lexicographically least image of S over all coordinate permutations.
/// Brute force; throws if n > kMaxCanonicalDimension.
CanonicalForm canonicalize(const VectorSet& s);
VectorSet canonical_form(const VectorSet& s);

/// Coordinate list written e_1+e_3 style, "0" for the zero vector.
std::string to_e_notation(word_t w);

}  // namespace tsperfect

#endif  // TSPERFECT_HYPERCUBE_HPP
