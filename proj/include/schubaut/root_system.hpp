// root_system.hpp -- exact finite crystallographic root systems.
//
// Admitted Cartan types: A_n (n>=1), D_n (n>=4), E6, E7, E8 and B2. Roots are
// integer vectors in the simple-root basis, weights integer vectors in the
// fundamental-weight basis; every query is exact integer arithmetic. Node
// numbering follows the usual Dynkin diagram conventions: A_n/D_n chains are
// numbered along the chain with the D_n fork at nodes n-1, n; E-types carry
// the branch node at alpha_4 attached to alpha_2; B2 has alpha_1 long.
//
// A RootSystem is immutable after build() and safe to share across threads.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubaut/matrix.hpp"

namespace schubaut {

struct CartanType {
    char family = 0;  // 'A', 'B', 'D' or 'E'
    int rank = 0;

    // Parses identifiers like "E6", "d5", "B2"; rejects anything the engine
    // does not support, naming the offending family/rank.
    static CartanType parse(std::string_view text);

    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

// A root in simple-root coordinates (beta = sum k_i alpha_i). All coordinates
// of a genuine root share one sign.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}

    Root operator-() const {
        Root r = *this;
        for (int& x : r.coords) x = -x;
        return r;
    }
    friend Root operator+(const Root& a, const Root& b) {
        Root r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

// A weight in fundamental-weight coordinates (entry i = <lambda, alpha_i^vee>).
struct Weight {
    std::vector<int> fw;

    Weight() = default;
    explicit Weight(std::vector<int> f) : fw(std::move(f)) {}

    Weight operator-() const {
        Weight w = *this;
        for (int& x : w.fw) x = -x;
        return w;
    }
    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight w = a;
        for (std::size_t i = 0; i < w.fw.size(); ++i) w.fw[i] += b.fw[i];
        return w;
    }
    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

// A subset J of the simple indices {1..rank}, kept sorted and unique.
class Parabolic {
public:
    Parabolic() = default;
    explicit Parabolic(std::vector<int> simples);

    static Parabolic full(int rank);
    // S minus the listed indices.
    static Parabolic all_but(int rank, std::initializer_list<int> removed);
    static Parabolic all_but(int rank, const std::vector<int>& removed);

    const std::vector<int>& simples() const { return simples_; }
    bool contains(int i) const;
    bool empty() const { return simples_.empty(); }
    std::size_t size() const { return simples_.size(); }
    std::string to_string() const;

    friend bool operator==(const Parabolic&, const Parabolic&) = default;
    friend auto operator<=>(const Parabolic&, const Parabolic&) = default;

private:
    std::vector<int> simples_;
};

class RootSystem {
public:
    // Generates the full positive system by height induction with root
    // strings over the Cartan matrix. Throws std::invalid_argument for
    // unsupported types.
    static RootSystem build(const CartanType& type);
    static RootSystem build(std::string_view identifier) { return build(CartanType::parse(identifier)); }

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }

    // Cartan matrix entry <alpha_j, alpha_i^vee>; i, j are 1-based.
    int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

    // Positive roots sorted by (height, lexicographic coordinates).
    const std::vector<Root>& positives() const { return positives_; }
    const Root& highest() const { return highest_; }
    const Weight& rho() const { return rho_; }

    Root simple_root(int i) const;
    Weight fundamental_weight(int i) const;

    bool is_root(const Root& beta) const;
    // Throws std::invalid_argument when beta is not a root of this system.
    void require_root(const Root& beta) const;

    bool is_positive(const Root& beta) const;

    int height(const Root& beta) const;
    std::vector<int> support(const Root& beta) const;

    // <beta, alpha_i^vee> resp. <lambda, alpha_i^vee>, exact.
    int pair(const Root& beta, int i) const;
    int pair(const Weight& lambda, int i) const;

    // true iff support(beta) is contained in J (beta lies in the Levi R_J).
    bool in_subsystem(const Root& beta, const Parabolic& J) const;

    Weight to_weight(const Root& beta) const;

    // Coefficients of beta^vee in the simple-coroot basis. Equals coords for
    // simply-laced types; differs for B2 where root lengths split.
    std::vector<int> coroot_coords(const Root& beta) const;

    // Simple reflections; no membership checks, usable on arbitrary vectors.
    Root reflect(int i, const Root& beta) const;
    Weight reflect(int i, const Weight& lambda) const;

    // All roots: positives in table order followed by their negatives.
    const std::vector<Root>& all_roots() const { return all_roots_; }
    std::optional<int> root_index(const Root& beta) const;

    // Half squared length d_i = (alpha_i, alpha_i)/2, normalised to 1 for
    // simply-laced types (B2: d = {2, 1}).
    int symmetrizer(int i) const { return dsym_[i - 1]; }

    void require_simple_index(int i) const;

private:
    RootSystem() = default;

    CartanType type_;
    std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>
    std::vector<int> dsym_;
    std::vector<Root> positives_;
    std::vector<Root> all_roots_;
    Root highest_;
    Weight rho_;
    std::map<std::vector<int>, int> root_ids_;  // coords -> index into all_roots_
};

}  // namespace schubaut
