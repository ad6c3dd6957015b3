// weyl.hpp -- exact Weyl group elements and coset machinery.
//
// Elements are identified with their action on root-lattice coordinates: a
// rank x rank unimodular integer matrix whose column j is w(alpha_j). Words
// list simple indices and compose right-to-left, so the product
// s_{i_1} s_{i_2} ... s_{i_k} is written [i_1, i_2, ..., i_k] and the
// rightmost letter acts first. Equality and hashing go through the matrix
// alone; a cached word is advisory.

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schubaut/errors.hpp"
#include "schubaut/matrix.hpp"
#include "schubaut/root_system.hpp"

namespace schubaut {

using Word = std::vector<int>;  // simple indices, 1-based

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(IntMatrix m) : mat_(std::move(m)) {}
    WeylElement(IntMatrix m, Word w) : mat_(std::move(m)), word_(std::move(w)) {}

    static WeylElement identity_element(int rank) { return WeylElement(IntMatrix::identity(rank)); }

    int rank() const { return mat_.n(); }
    const IntMatrix& matrix() const { return mat_; }
    const std::optional<Word>& cached_word() const { return word_; }
    bool is_identity() const { return mat_.is_identity(); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat_ == b.mat_; }
    friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.mat_ <=> b.mat_; }

private:
    IntMatrix mat_;
    std::optional<Word> word_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 200'000;

WeylElement simple_reflection(const RootSystem& rs, int i);

// Ordered reflection product; the input word is cached verbatim (not reduced).
WeylElement from_word(const RootSystem& rs, const Word& word);

// w(beta); validates that beta and its image are roots of rs.
Root apply(const RootSystem& rs, const WeylElement& w, const Root& beta);

// w(lambda) on fundamental-weight coordinates (via a reduced word of w).
Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

// Number of positive roots sent negative; equals reduced-word length.
int length(const RootSystem& rs, const WeylElement& w);

// The inversion set R^+(w) = {beta > 0 : w(beta) < 0} in table order.
std::vector<Root> inversions(const RootSystem& rs, const WeylElement& w);

// Greedy descent: while w != e strip the smallest i with w(alpha_i) < 0 from
// the right. Output has exactly length(w) letters and composes back to w.
Word reduced_word(const RootSystem& rs, const WeylElement& w);

WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// Matrix product; cached words concatenate when both factors carry one.
WeylElement product(const WeylElement& a, const WeylElement& b);

// Longest element w_{0,J} of the parabolic subgroup W_J (greedy ascent).
WeylElement longest_element(const RootSystem& rs, const Parabolic& J);

bool in_min_coset_reps(const RootSystem& rs, const WeylElement& w, const Parabolic& J);

// Unique factorisation w = w^J * w_J with w^J in W^J, w_J in W_J and
// additive lengths; returned as (w^J, w_J).
std::pair<WeylElement, WeylElement> coset_decompose(const RootSystem& rs, const WeylElement& w,
                                                    const Parabolic& J);

// Streaming enumeration of W^J by breadth-first search from the identity,
// extending by s_i * w whenever the length grows and the product stays in
// W^J. Yields each element exactly once in (length, lexicographic matrix)
// order. Exceeding the cap raises EnumerationTooLarge with the partial count.
class MinRepStream {
public:
    MinRepStream(const RootSystem& rs, Parabolic J, std::size_t cap = kDefaultEnumerationCap);

    struct Node {
        IntMatrix mat;
        IntMatrix inv;
        Word word;  // reduced
    };

    // nullptr once exhausted; the pointer stays valid until the next call.
    const Node* next();

    std::size_t produced() const { return produced_; }

private:
    void advance_level();

    const RootSystem& rs_;
    Parabolic J_;
    std::size_t cap_;
    std::vector<Node> level_;
    std::size_t pos_ = 0;
    std::unordered_set<IntMatrix, IntMatrixHash> seen_;
    std::size_t produced_ = 0;
    bool done_ = false;
};

std::vector<WeylElement> min_reps(const RootSystem& rs, const Parabolic& J,
                                  std::size_t cap = kDefaultEnumerationCap);

// Full enumeration of the parabolic subgroup W_J (not the quotient).
std::vector<WeylElement> parabolic_elements(const RootSystem& rs, const Parabolic& J,
                                            std::size_t cap = kDefaultEnumerationCap);

// The permutation sigma with alpha_{sigma(i)} = -w_0(alpha_i); identity when
// w_0 = -1. Returned as a 1-based lookup table (entry i-1 holds sigma(i)).
std::vector<int> diagram_automorphism(const RootSystem& rs);

}  // namespace schubaut
