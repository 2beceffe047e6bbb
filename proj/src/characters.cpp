#include "treespace/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace treespace {

Int Character::dimension() const {
    std::vector<int> ones(m, 1);
    return at(ones);
}

Character trivial_character(int m) {
    Character chi;
    chi.m = m;
    for (const auto& type : partitions_of(m)) chi.values[partition_key(type)] = Int(1);
    return chi;
}

Character sign_character(int m) {
    Character chi;
    chi.m = m;
    for (const auto& type : partitions_of(m)) chi.values[partition_key(type)] = Int(sign_of_class(type));
    return chi;
}

Character regular_character(int m) {
    Character chi;
    chi.m = m;
    for (const auto& type : partitions_of(m)) {
        bool is_id = std::all_of(type.begin(), type.end(), [](int p) { return p == 1; });
        chi.values[partition_key(type)] = is_id ? Int(factorial(m)) : Int(0);
    }
    return chi;
}

Character tensor_sign(const Character& chi) {
    Character out;
    out.m = chi.m;
    for (const auto& [key, v] : chi.values)
        out.values[key] = Int(sign_of_class(parse_partition_key(key))) * v;
    return out;
}

Character restrict_character(const Character& chi) {
    if (chi.m < 1) throw std::invalid_argument("restrict_character: nothing to restrict to");
    Character out;
    out.m = chi.m - 1;
    for (const auto& type : partitions_of(chi.m - 1)) {
        std::vector<int> up = type;
        up.push_back(1);
        std::sort(up.rbegin(), up.rend());
        out.values[partition_key(type)] = chi.at(up);
    }
    return out;
}

Character induce_character(const Character& chi) {
    Character out;
    out.m = chi.m + 1;
    for (const auto& type : partitions_of(chi.m + 1)) {
        int fixed = static_cast<int>(std::count(type.begin(), type.end(), 1));
        if (fixed == 0) {
            out.values[partition_key(type)] = Int(0);
            continue;
        }
        std::vector<int> down = type;
        down.erase(std::find(down.begin(), down.end(), 1));
        out.values[partition_key(type)] = Int(fixed) * chi.at(down);
    }
    return out;
}

Character induce_character_bruteforce(const Character& chi) {
    const int m = chi.m;
    const int g = m + 1;
    Character out;
    out.m = g;
    std::vector<Perm> group = all_perms(g);
    const long long h_order = factorial(m);
    for (const auto& type : partitions_of(g)) {
        Perm rep = class_representative(g, type);
        Int total(0);
        for (const Perm& x : group) {
            Perm conj = compose(compose(x.inverse(), rep), x);
            if (!conj.fixes(g - 1)) continue;  // outside the point stabilizer
            std::vector<int> restricted(conj.images().begin(), conj.images().end() - 1);
            total += chi.at(Perm(restricted).cycle_type());
        }
        if ((total % Int(h_order)) != Int(0))
            throw std::logic_error("induce_character_bruteforce: non-integral coset sum");
        out.values[partition_key(type)] = total / Int(h_order);
    }
    return out;
}

Character lie_character(int n, Flavor flavor) {
    // Basis words: all orderings of {1..n-1}.
    std::vector<std::vector<int>> words;
    std::vector<int> w(n - 1);
    std::iota(w.begin(), w.end(), 1);
    do {
        words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    Character chi;
    chi.m = n;
    for (const auto& type : partitions_of(n)) {
        Perm rep = class_representative(n, type);
        Int trace(0);
        for (const auto& word : words) {
            SuperLieElement img =
                permute_generators(SuperLieElement::basis(n, flavor, word), rep);
            auto it = img.coeffs().find(word);
            if (it != img.coeffs().end()) trace += it->second;
        }
        chi.values[partition_key(type)] = trace;
    }
    return chi;
}

}  // namespace treespace
