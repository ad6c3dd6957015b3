// weyl.cpp -- Weyl group arithmetic: words, lengths, cosets, enumeration.

#include "schubaut/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace schubaut {

namespace {

// Sign of a root vector (every root has coordinates of one sign).
bool column_positive(const IntMatrix& m, int c) {
    for (int r = 0; r < m.n(); ++r) {
        if (m.at(r, c) > 0) return true;
        if (m.at(r, c) < 0) return false;
    }
    return false;
}

bool vec_positive(const std::vector<int>& v) {
    for (int x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

// In-place m := s_i * m (only row i-1 changes):
// new row = old row - (Cartan row i) * m.
void left_mul_simple(const RootSystem& rs, IntMatrix& m, int i) {
    const int n = m.n();
    std::vector<int> row(n, 0);
    for (int j = 0; j < n; ++j) {
        int acc = m.at(i - 1, j);
        for (int t = 0; t < n; ++t) acc -= rs.cartan(i, t + 1) * m.at(t, j);
        row[j] = acc;
    }
    for (int j = 0; j < n; ++j) m.at(i - 1, j) = row[j];
}

// In-place m := m * s_i (column update: col_j -= C[i][j] * col_i).
void right_mul_simple(const RootSystem& rs, IntMatrix& m, int i) {
    const int n = m.n();
    const std::vector<int> coli = m.column(i - 1);
    for (int j = 0; j < n; ++j) {
        const int c = rs.cartan(i, j + 1);
        if (c == 0) continue;
        for (int r = 0; r < n; ++r) m.at(r, j) -= c * coli[r];
    }
}

int smallest_negated_simple(const IntMatrix& m, const std::vector<int>& candidates) {
    for (int j : candidates)
        if (!column_positive(m, j - 1)) return j;
    return 0;
}

}  // namespace

WeylElement simple_reflection(const RootSystem& rs, int i) {
    rs.require_simple_index(i);
    IntMatrix m = IntMatrix::identity(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) m.at(i - 1, j) -= rs.cartan(i, j + 1);
    return WeylElement(std::move(m), Word{i});
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
    IntMatrix m = IntMatrix::identity(rs.rank());
    for (int letter : word) {
        rs.require_simple_index(letter);
        right_mul_simple(rs, m, letter);
    }
    return WeylElement(std::move(m), word);
}

Root apply(const RootSystem& rs, const WeylElement& w, const Root& beta) {
    rs.require_root(beta);
    Root image(w.matrix().apply(beta.coords));
    if (!rs.is_root(image))
        throw std::logic_error("Weyl element does not preserve the root table of " +
                               rs.type().name() + " (corrupted element)");
    return image;
}

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    Word rw = reduced_word(rs, w);
    Weight out = lambda;
    for (auto it = rw.rbegin(); it != rw.rend(); ++it) out = rs.reflect(*it, out);
    return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
    int len = 0;
    for (const Root& beta : rs.positives())
        if (!vec_positive(w.matrix().apply(beta.coords))) ++len;
    return len;
}

std::vector<Root> inversions(const RootSystem& rs, const WeylElement& w) {
    std::vector<Root> inv;
    for (const Root& beta : rs.positives())
        if (!vec_positive(w.matrix().apply(beta.coords))) inv.push_back(beta);
    return inv;
}

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i + 1;
    IntMatrix cur = w.matrix();
    Word rev;
    while (!cur.is_identity()) {
        const int i = smallest_negated_simple(cur, all);
        if (i == 0) throw std::logic_error("matrix is not a Weyl group element");
        right_mul_simple(rs, cur, i);
        rev.push_back(i);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    Word rw = reduced_word(rs, w);
    std::reverse(rw.begin(), rw.end());
    return from_word(rs, rw);
}

WeylElement product(const WeylElement& a, const WeylElement& b) {
    IntMatrix m = a.matrix() * b.matrix();
    if (a.cached_word() && b.cached_word()) {
        Word w = *a.cached_word();
        w.insert(w.end(), b.cached_word()->begin(), b.cached_word()->end());
        return WeylElement(std::move(m), std::move(w));
    }
    return WeylElement(std::move(m));
}

WeylElement longest_element(const RootSystem& rs, const Parabolic& J) {
    for (int j : J.simples()) rs.require_simple_index(j);
    IntMatrix m = IntMatrix::identity(rs.rank());
    Word word;
    // Greedy ascent: while some alpha_j (j in J) stays positive, append s_j.
    // Each step raises the length, so the accumulated word is reduced.
    while (true) {
        int j = 0;
        for (int cand : J.simples())
            if (column_positive(m, cand - 1)) {
                j = cand;
                break;
            }
        if (j == 0) break;
        right_mul_simple(rs, m, j);
        word.push_back(j);
    }
    return WeylElement(std::move(m), std::move(word));
}

bool in_min_coset_reps(const RootSystem&, const WeylElement& w, const Parabolic& J) {
    for (int j : J.simples())
        if (!column_positive(w.matrix(), j - 1)) return false;
    return true;
}

std::pair<WeylElement, WeylElement> coset_decompose(const RootSystem& rs, const WeylElement& w,
                                                    const Parabolic& J) {
    for (int j : J.simples()) rs.require_simple_index(j);
    IntMatrix rep = w.matrix();
    std::vector<int> stripped;
    while (true) {
        const int j = smallest_negated_simple(rep, J.simples());
        if (j == 0) break;
        right_mul_simple(rs, rep, j);
        stripped.push_back(j);
    }
    std::reverse(stripped.begin(), stripped.end());
    WeylElement wJ = from_word(rs, stripped);
    return {WeylElement(std::move(rep)), std::move(wJ)};
}

MinRepStream::MinRepStream(const RootSystem& rs, Parabolic J, std::size_t cap)
    : rs_(rs), J_(std::move(J)), cap_(cap) {
    for (int j : J_.simples()) rs.require_simple_index(j);
    if (cap_ < 1) throw std::invalid_argument("enumeration cap must be >= 1");
    Node e{IntMatrix::identity(rs.rank()), IntMatrix::identity(rs.rank()), {}};
    seen_.insert(e.mat);
    produced_ = 1;
    level_.push_back(std::move(e));
}

const MinRepStream::Node* MinRepStream::next() {
    if (pos_ == level_.size() && !done_) advance_level();
    if (done_ && pos_ == level_.size()) return nullptr;
    return &level_[pos_++];
}

void MinRepStream::advance_level() {
    std::vector<Node> next;
    for (const Node& node : level_) {
        for (int i = 1; i <= rs_.rank(); ++i) {
            // l(s_i w) = l(w) + 1 iff w^{-1}(alpha_i) > 0
            if (!column_positive(node.inv, i - 1)) continue;
            IntMatrix cand = node.mat;
            left_mul_simple(rs_, cand, i);
            bool in_WJ = true;
            for (int j : J_.simples())
                if (!column_positive(cand, j - 1)) {
                    in_WJ = false;
                    break;
                }
            if (!in_WJ) continue;
            if (seen_.count(cand)) continue;
            if (produced_ + 1 > cap_)
                throw EnumerationTooLarge("W^" + J_.to_string() + " for " + rs_.type().name(),
                                          produced_, cap_);
            seen_.insert(cand);
            ++produced_;
            IntMatrix inv = node.inv;
            right_mul_simple(rs_, inv, i);
            Word word;
            word.reserve(node.word.size() + 1);
            word.push_back(i);
            word.insert(word.end(), node.word.begin(), node.word.end());
            next.push_back(Node{std::move(cand), std::move(inv), std::move(word)});
        }
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.mat < b.mat; });
    level_ = std::move(next);
    pos_ = 0;
    if (level_.empty()) done_ = true;
}

std::vector<WeylElement> min_reps(const RootSystem& rs, const Parabolic& J, std::size_t cap) {
    MinRepStream stream(rs, J, cap);
    std::vector<WeylElement> out;
    while (const auto* node = stream.next()) out.emplace_back(node->mat, node->word);
    return out;
}

std::vector<WeylElement> parabolic_elements(const RootSystem& rs, const Parabolic& J,
                                            std::size_t cap) {
    std::vector<WeylElement> out;
    std::map<IntMatrix, bool> seen;
    std::vector<WeylElement> level{WeylElement::identity_element(rs.rank())};
    seen[level.front().matrix()] = true;
    out.push_back(level.front());
    while (!level.empty()) {
        std::vector<WeylElement> next;
        for (const WeylElement& w : level) {
            for (int j : J.simples()) {
                // extend upward within W_J only
                WeylElement cand = product(simple_reflection(rs, j), w);
                if (seen.count(cand.matrix())) continue;
                if (length(rs, cand) != length(rs, w) + 1) continue;
                if (out.size() + next.size() + 1 > cap)
                    throw EnumerationTooLarge("W_" + J.to_string() + " for " + rs.type().name(),
                                              out.size() + next.size(), cap);
                seen[cand.matrix()] = true;
                next.push_back(std::move(cand));
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<int> diagram_automorphism(const RootSystem& rs) {
    const WeylElement w0 = longest_element(rs, Parabolic::full(rs.rank()));
    std::vector<int> sigma(rs.rank(), 0);
    for (int i = 1; i <= rs.rank(); ++i) {
        std::vector<int> image = w0.matrix().column(i - 1);
        for (int& x : image) x = -x;
        int target = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            if (image[j] == 0) continue;
            if (image[j] != 1 || target != 0) {
                target = -1;
                break;
            }
            target = j + 1;
        }
        if (target <= 0) throw std::logic_error("-w_0 does not permute the simple roots");
        sigma[i - 1] = target;
    }
    return sigma;
}

}  // namespace schubaut
