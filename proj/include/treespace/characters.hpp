#pragma once

// Integer-valued symmetric-group characters indexed by cycle type, with
// restriction, induction, sign twists, and the characters of the multilinear
// Lie modules computed from traces on the left-regulated basis.

#include <map>
#include <string>
#include <vector>

#include "treespace/int.hpp"
#include "treespace/perm.hpp"
#include "treespace/superlie.hpp"

namespace treespace {

struct Character {
    int m = 0;                          // character of Sigma_m
    std::map<std::string, Int> values;  // partition key -> value

    const Int& at(const std::vector<int>& type) const { return values.at(partition_key(type)); }
    Int dimension() const;

    bool operator==(const Character& o) const { return m == o.m && values == o.values; }
    bool operator!=(const Character& o) const { return !(*this == o); }
};

Character trivial_character(int m);
Character sign_character(int m);
Character regular_character(int m);

/// Pointwise product with the sign character; an involution.
Character tensor_sign(const Character& chi);

/// Restriction along a point stabilizer Sigma_{m-1} < Sigma_m.
Character restrict_character(const Character& chi);

/// Induction to Sigma_{m+1}: on a type with f fixed points the value is
/// f times the value at the type with one fixed point removed, zero when
/// there is no fixed point. (The cycle-type form of the coset sum.)
Character induce_character(const Character& chi);

/// Reference implementation of induction as the explicit coset sum over the
/// full group; intended for cross-validation at small m.
Character induce_character_bruteforce(const Character& chi);

/// Character of Sigma_n on the multilinear module of the chosen flavor,
/// via traces of permute_generators on the left-regulated basis.
Character lie_character(int n, Flavor flavor);

}  // namespace treespace
