#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bbdec/gf2.hpp"

namespace bbdec {

/// A bivariate polynomial given as a list of (x exponent, y exponent) terms
/// over the cyclic dimensions (l, m). Terms must be distinct.
struct PolyTerms {
    std::vector<std::pair<int, int>> terms;

    std::size_t weight() const { return terms.size(); }
    bool same_terms_as(const PolyTerms& other) const;
};

/// Permutation matrix of the shift x^a y^b on the torus index space
/// i = r*m + c, mapping (r, c) -> ((r+a) mod l, (c+b) mod m).
Gf2Matrix monomial_matrix(int a, int b, int l, int m);

/// Sum (XOR) of the monomial matrices of all terms.
Gf2Matrix poly_matrix(const PolyTerms& poly, int l, int m);

/// Bivariate bicycle code: Hx = [A | B], Hz = [B^T | A^T].
struct BBCode {
    std::string name;
    int l = 0;
    int m = 0;
    PolyTerms A;
    PolyTerms B;
    Gf2Matrix Hx;
    Gf2Matrix Hz;
    std::size_t n = 0;         // physical qubits, 2*l*m
    std::size_t n_checks = 0;  // checks per type, l*m
    std::size_t w = 0;         // column weight
    std::size_t k = 0;         // logical qubits, computed from rank
    bool degenerate = false;   // A == B as term sets
    std::string provenance;    // literature vs implementer-constructed
};

/// Builds and validates a BB code. Throws on invalid terms, on
/// |A.terms| != |B.terms|, and on a CSS violation (internal assertion).
BBCode build_bb_code(int l, int m, const PolyTerms& A, const PolyTerms& B,
                     const std::string& name, const std::string& provenance = "");

/// Built-in code registry: four w=3 codes (n = 72, 108, 144, 180), one w=4
/// code (n = 144) and one w=2 code. Each entry carries a provenance note.
const std::vector<BBCode>& registry();

/// Registry lookup by name; throws when the name is unknown.
const BBCode& find_code(const std::string& name);

/// Parses a code definition from a text config of the form
///   name <label>
///   l <int>
///   m <int>
///   A a,b a,b ...
///   B a,b a,b ...
/// Lines starting with '#' are comments.
BBCode load_code_config(const std::string& path);

}  // namespace bbdec
