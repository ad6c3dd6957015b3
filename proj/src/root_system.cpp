// root_system.cpp -- Cartan data and positive-root generation.

#include "schubaut/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace schubaut {

namespace {

[[noreturn]] void reject_type(const std::string& name, const std::string& why) {
    throw std::invalid_argument("unsupported Cartan type " + name + ": " + why);
}

// Off-diagonal Cartan entries from the Dynkin diagram edges. For the
// simply-laced families every edge contributes -1 on both sides; B2 is
// entered directly with alpha_1 long (<alpha_1, alpha_2^vee> = -2).
std::vector<std::vector<int>> make_cartan(const CartanType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](int a, int b) {  // 1-based simple indices
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    switch (t.family) {
        case 'A':
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            break;
        case 'D':
            for (int i = 1; i + 1 <= n - 2; ++i) bond(i, i + 1);
            bond(n - 2, n - 1);
            bond(n - 2, n);
            break;
        case 'E':
            // chain 1-3-4-5-6[-7[-8]] with 2 attached to 4
            bond(1, 3);
            bond(3, 4);
            bond(4, 5);
            bond(5, 6);
            if (n >= 7) bond(6, 7);
            if (n >= 8) bond(7, 8);
            bond(2, 4);
            break;
        case 'B':
            c[0][1] = -1;  // <alpha_2, alpha_1^vee>
            c[1][0] = -2;  // <alpha_1, alpha_2^vee>
            break;
        default:
            assert(false);
    }
    return c;
}

}  // namespace

CartanType CartanType::parse(std::string_view text) {
    if (text.size() < 2) reject_type(std::string(text), "expected a family letter followed by a rank");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            reject_type(std::string(text), "rank must be decimal digits");
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000) reject_type(std::string(text), "rank out of range");
    }
    const std::string name = std::string(1, fam) + std::to_string(rank);
    switch (fam) {
        case 'A':
            if (rank < 1) reject_type(name, "family A needs rank >= 1");
            break;
        case 'D':
            if (rank < 4) reject_type(name, "family D needs rank >= 4");
            break;
        case 'E':
            if (rank < 6 || rank > 8) reject_type(name, "family E admits ranks 6, 7, 8 only");
            break;
        case 'B':
            if (rank != 2) reject_type(name, "family B is admitted at rank 2 only");
            break;
        case 'C':
            reject_type(name, "family C is not admitted");
        default:
            reject_type(name, "unknown family letter");
    }
    return CartanType{fam, rank};
}

Parabolic::Parabolic(std::vector<int> simples) : simples_(std::move(simples)) {
    std::sort(simples_.begin(), simples_.end());
    simples_.erase(std::unique(simples_.begin(), simples_.end()), simples_.end());
}

Parabolic Parabolic::full(int rank) {
    std::vector<int> s(rank);
    for (int i = 0; i < rank; ++i) s[i] = i + 1;
    return Parabolic(std::move(s));
}

Parabolic Parabolic::all_but(int rank, std::initializer_list<int> removed) {
    return all_but(rank, std::vector<int>(removed));
}

Parabolic Parabolic::all_but(int rank, const std::vector<int>& removed) {
    std::vector<int> s;
    for (int i = 1; i <= rank; ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) s.push_back(i);
    return Parabolic(std::move(s));
}

bool Parabolic::contains(int i) const {
    return std::binary_search(simples_.begin(), simples_.end(), i);
}

std::string Parabolic::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < simples_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(simples_[i]);
    }
    return out + "}";
}

RootSystem RootSystem::build(const CartanType& type) {
    RootSystem rs;
    rs.type_ = type;
    rs.cartan_ = make_cartan(type);
    const int n = type.rank;

    rs.dsym_.assign(n, 1);
    if (type.family == 'B') rs.dsym_ = {2, 1};

    // Height induction with root strings: beta + alpha_i is a root iff q > 0
    // where p - q = <beta, alpha_i^vee> and p counts how far the string
    // through beta extends downward (all lower roots are already known).
    std::map<std::vector<int>, bool> known;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        known[e] = true;
        frontier.push_back(e);
        rs.positives_.push_back(Root(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                // skip beta proportional to alpha_i (2 alpha_i is never a root)
                bool is_alpha_i = beta[i] != 0;
                for (int j = 0; j < n && is_alpha_i; ++j)
                    if (j != i && beta[j] != 0) is_alpha_i = false;
                if (is_alpha_i) continue;

                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * beta[j];
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                const int q = p - pairing;
                if (q > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (!known.count(up)) {
                        known[up] = true;
                        next.push_back(up);
                        rs.positives_.push_back(Root(up));
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    std::sort(rs.positives_.begin(), rs.positives_.end(), [](const Root& a, const Root& b) {
        int ha = 0, hb = 0;
        for (int x : a.coords) ha += x;
        for (int x : b.coords) hb += x;
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });

    // The highest root is the unique positive root beta with beta + alpha_i
    // never a root.
    std::vector<Root> maximal;
    for (const Root& beta : rs.positives_) {
        bool top = true;
        for (int i = 0; i < n && top; ++i) {
            std::vector<int> up = beta.coords;
            up[i] += 1;
            if (known.count(up)) top = false;
        }
        if (top) maximal.push_back(beta);
    }
    if (maximal.size() != 1)
        throw std::logic_error("root system " + type.name() + " is not irreducible");
    rs.highest_ = maximal.front();

    rs.rho_ = Weight(std::vector<int>(n, 1));

    rs.all_roots_ = rs.positives_;
    for (const Root& beta : rs.positives_) rs.all_roots_.push_back(-beta);
    for (std::size_t id = 0; id < rs.all_roots_.size(); ++id)
        rs.root_ids_[rs.all_roots_[id].coords] = static_cast<int>(id);

    return rs;
}

Root RootSystem::simple_root(int i) const {
    require_simple_index(i);
    std::vector<int> e(rank(), 0);
    e[i - 1] = 1;
    return Root(std::move(e));
}

Weight RootSystem::fundamental_weight(int i) const {
    require_simple_index(i);
    std::vector<int> e(rank(), 0);
    e[i - 1] = 1;
    return Weight(std::move(e));
}

bool RootSystem::is_root(const Root& beta) const {
    if (static_cast<int>(beta.coords.size()) != rank()) return false;
    return root_ids_.count(beta.coords) > 0;
}

void RootSystem::require_root(const Root& beta) const {
    if (!is_root(beta)) {
        std::string s = "[";
        for (std::size_t i = 0; i < beta.coords.size(); ++i)
            s += (i ? "," : "") + std::to_string(beta.coords[i]);
        s += "]";
        throw std::invalid_argument("not a root of " + type_.name() + ": " + s);
    }
}

bool RootSystem::is_positive(const Root& beta) const {
    for (int x : beta.coords) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

int RootSystem::height(const Root& beta) const {
    require_root(beta);
    int h = 0;
    for (int x : beta.coords) h += x;
    return h;
}

std::vector<int> RootSystem::support(const Root& beta) const {
    require_root(beta);
    std::vector<int> s;
    for (int i = 0; i < rank(); ++i)
        if (beta.coords[i] != 0) s.push_back(i + 1);
    return s;
}

int RootSystem::pair(const Root& beta, int i) const {
    require_simple_index(i);
    int v = 0;
    for (int j = 0; j < rank(); ++j) v += cartan_[i - 1][j] * beta.coords[j];
    return v;
}

int RootSystem::pair(const Weight& lambda, int i) const {
    require_simple_index(i);
    return lambda.fw[i - 1];
}

bool RootSystem::in_subsystem(const Root& beta, const Parabolic& J) const {
    for (int i : support(beta))
        if (!J.contains(i)) return false;
    return true;
}

Weight RootSystem::to_weight(const Root& beta) const {
    std::vector<int> fw(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) fw[i] += cartan_[i][j] * beta.coords[j];
    return Weight(std::move(fw));
}

std::vector<int> RootSystem::coroot_coords(const Root& beta) const {
    require_root(beta);
    // (beta, beta) = sum_{i,j} k_i k_j d_i C[i][j]; the coroot coefficients
    // are k_i d_i / d_beta and are always integral for crystallographic data.
    long long norm2 = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            norm2 += static_cast<long long>(beta.coords[i]) * beta.coords[j] * dsym_[i] * cartan_[i][j];
    const long long d_beta = norm2 / 2;
    std::vector<int> out(rank());
    for (int i = 0; i < rank(); ++i) {
        const long long num = static_cast<long long>(beta.coords[i]) * dsym_[i];
        assert(num % d_beta == 0);
        out[i] = static_cast<int>(num / d_beta);
    }
    return out;
}

Root RootSystem::reflect(int i, const Root& beta) const {
    require_simple_index(i);
    int k = 0;
    for (int j = 0; j < rank(); ++j) k += cartan_[i - 1][j] * beta.coords[j];
    Root out = beta;
    out.coords[i - 1] -= k;
    return out;
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
    require_simple_index(i);
    const int k = lambda.fw[i - 1];
    Weight out = lambda;
    // fw coordinates of alpha_i are the i-th Cartan column
    for (int r = 0; r < rank(); ++r) out.fw[r] -= k * cartan_[r][i - 1];
    return out;
}

std::optional<int> RootSystem::root_index(const Root& beta) const {
    auto it = root_ids_.find(beta.coords);
    if (it == root_ids_.end()) return std::nullopt;
    return it->second;
}

void RootSystem::require_simple_index(int i) const {
    if (i < 1 || i > rank())
        throw std::invalid_argument("simple index " + std::to_string(i) + " out of range for " +
                                    type_.name());
}

}  // namespace schubaut
