#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecom/group.hpp"

namespace ecom {

// One syllable gen^exp with exp != 0; adjacent syllables of a normalized word
// use different generators.
struct Syllable {
    int gen = 0;
    long exp = 0;
    bool operator==(const Syllable&) const = default;
};

struct Word {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    bool operator==(const Word&) const = default;

    Word inverse() const;
    static Word concat(const Word& a, const Word& b);  // normalizes the seam
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

// Grammar:  < gens | relations >
//   relation  := word ('=' word)*        a lone word means word = 1; a chain
//                                        w1=..=wk expands to the adjacent
//                                        pairs w1*w2^-1, ..., w(k-1)*wk^-1
//   word      := '1' | term (['*'] term)*
//   term      := atom ['^' exponent]
//   atom      := generator | '(' word ')'
//   exponent  := integer | conjugator    conjugation (w)^g = g^-1*w*g needs a
//                                        parenthesized base; integers may be
//                                        negative and may be parenthesized
// Relators that normalize to the empty word are dropped.
Presentation parse_presentation(std::string_view text);

// Inverse of parse_presentation up to normalization: parse(print(p)) == p.
std::string print_presentation(const Presentation& p);
std::string print_word(const Presentation& p, const Word& w);

struct RealizedGroup {
    FiniteGroup group;
    std::vector<int> generator_ids;  // element id of each generator
};

// Coset enumeration over the trivial subgroup (HLT strategy with full
// deduction filling and union-find coincidence processing). Closing with n
// live cosets yields the regular representation of the presented group, which
// has order n. New cosets are defined in scan order at the first undefined
// slot, so equal inputs yield identical tables.
RealizedGroup todd_coxeter(const Presentation& p, int max_cosets = 100000);

// True iff every relator evaluates to the identity when generator i is sent
// to assignment[i].
bool verify_relators(const FiniteGroup& g, const Presentation& p,
                     const std::vector<int>& assignment);

}  // namespace ecom
