#pragma once

// Permutations of {0, ..., m-1} and symmetric-group class bookkeeping.
//
// Tree relabelings use the full domain {0..n}; generator permutations in the
// Lie modules use the 0-based domain {0..n-1} standing for generators
// x_1, ..., x_n.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace treespace {

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        if (!is_bijection(img_)) throw std::invalid_argument("Perm: images are not a bijection");
    }

    static Perm identity(int m) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    /// Product of disjoint cycles, e.g. from_cycles(4, {{0,1},{2,3}}).
    static Perm from_cycles(int m, std::initializer_list<std::initializer_list<int>> cycles) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 0);
        for (const auto& c : cycles) {
            std::vector<int> cy(c);
            for (std::size_t i = 0; i < cy.size(); ++i) v[cy[i]] = cy[(i + 1) % cy.size()];
        }
        return Perm(std::move(v));
    }

    static Perm transposition(int m, int i, int j) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 0);
        std::swap(v[i], v[j]);
        return Perm(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// Standard composition: (a.after(b))(i) = a(b(i)).
    Perm after(const Perm& b) const {
        if (size() != b.size()) throw std::invalid_argument("Perm: size mismatch");
        std::vector<int> v(img_.size());
        for (int i = 0; i < size(); ++i) v[i] = img_[b(i)];
        return Perm(std::move(v));
    }

    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 0; i < size(); ++i) v[img_[i]] = i;
        return Perm(std::move(v));
    }

    /// +1 for even, -1 for odd.
    int sign() const {
        std::vector<bool> seen(img_.size(), false);
        int s = 1;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    /// Cycle lengths in decreasing order; an integer partition of size().
    std::vector<int> cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<int> type;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    bool fixes(int i) const { return img_[i] == i; }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }

private:
    static bool is_bijection(const std::vector<int>& v) {
        std::vector<bool> hit(v.size(), false);
        for (int x : v) {
            if (x < 0 || x >= static_cast<int>(v.size()) || hit[x]) return false;
            hit[x] = true;
        }
        return true;
    }

    std::vector<int> img_;
};

/// Standard composition a after b, so compose(a, b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) { return a.after(b); }

/// All m! permutations of {0..m-1} in lexicographic image order.
inline std::vector<Perm> all_perms(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Adjacent transpositions (i, i+1), the Coxeter generators of Sigma_m.
inline std::vector<Perm> coxeter_generators(int m) {
    std::vector<Perm> out;
    for (int i = 0; i + 1 < m; ++i) out.push_back(Perm::transposition(m, i, i + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Integer partitions (cycle types) of m.
// ---------------------------------------------------------------------------

/// All partitions of m, parts decreasing, in reverse-lexicographic order
/// starting from (m) and ending at (1,...,1).
std::vector<std::vector<int>> partitions_of(int m);

/// "3+1" style key for a decreasing partition.
std::string partition_key(const std::vector<int>& parts);

std::vector<int> parse_partition_key(const std::string& key);

/// Canonical representative: consecutive cycles (0..p1-1)(p1..p1+p2-1)...
Perm class_representative(int m, const std::vector<int>& parts);

/// Centralizer order z_mu = prod k^{m_k} m_k!; class size is m!/z_mu.
long long centralizer_order(const std::vector<int>& parts);

/// Sign character evaluated on a cycle type.
int sign_of_class(const std::vector<int>& parts);

long long factorial(int m);

/// (2n-3)!! — the count of binary trees with leaves {0..n}.
long long double_factorial_odd(int n);

}  // namespace treespace
