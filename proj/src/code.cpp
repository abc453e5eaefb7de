#include "bbdec/code.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bbdec {

bool PolyTerms::same_terms_as(const PolyTerms& other) const {
    std::set<std::pair<int, int>> a(terms.begin(), terms.end());
    std::set<std::pair<int, int>> b(other.terms.begin(), other.terms.end());
    return a == b;
}

Gf2Matrix monomial_matrix(int a, int b, int l, int m) {
    if (l <= 0 || m <= 0) {
        throw std::invalid_argument("monomial_matrix: l and m must be positive");
    }
    if (a < 0 || a >= l || b < 0 || b >= m) {
        throw std::invalid_argument("monomial_matrix: exponent out of range");
    }
    const std::size_t dim = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    Gf2Matrix mat(dim, dim);
    for (int r = 0; r < l; ++r) {
        for (int c = 0; c < m; ++c) {
            const std::size_t from = static_cast<std::size_t>(r) * m + c;
            const std::size_t to = static_cast<std::size_t>((r + a) % l) * m + (c + b) % m;
            mat.set(to, from, true);
        }
    }
    return mat;
}

Gf2Matrix poly_matrix(const PolyTerms& poly, int l, int m) {
    if (poly.terms.empty()) {
        throw std::invalid_argument("poly_matrix: polynomial must have at least one term");
    }
    std::set<std::pair<int, int>> distinct(poly.terms.begin(), poly.terms.end());
    if (distinct.size() != poly.terms.size()) {
        throw std::invalid_argument("poly_matrix: terms must be distinct");
    }
    const std::size_t dim = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    Gf2Matrix acc(dim, dim);
    for (auto [a, b] : poly.terms) {
        const Gf2Matrix mono = monomial_matrix(a, b, l, m);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                if (mono.get(r, c)) {
                    acc.flip(r, c);
                }
            }
        }
    }
    return acc;
}

BBCode build_bb_code(int l, int m, const PolyTerms& A, const PolyTerms& B,
                     const std::string& name, const std::string& provenance) {
    if (A.weight() != B.weight()) {
        throw std::invalid_argument("build_bb_code: A and B must have the same term count");
    }
    BBCode code;
    code.name = name;
    code.l = l;
    code.m = m;
    code.A = A;
    code.B = B;
    code.n_checks = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    code.n = 2 * code.n_checks;
    code.w = A.weight();
    code.degenerate = A.same_terms_as(B);
    code.provenance = provenance;

    const Gf2Matrix a_mat = poly_matrix(A, l, m);
    const Gf2Matrix b_mat = poly_matrix(B, l, m);
    code.Hx = a_mat.hstack(b_mat);
    code.Hz = b_mat.transposed().hstack(a_mat.transposed());

    // CSS condition Hx Hz^T = 0; cannot fail for this construction.
    if (!code.Hx.multiplied_by(code.Hz.transposed()).is_zero()) {
        throw std::logic_error("build_bb_code: CSS condition violated");
    }
    for (std::size_t c = 0; c < code.n; ++c) {
        if (code.Hx.column_weight(c) != code.w || code.Hz.column_weight(c) != code.w) {
            throw std::logic_error("build_bb_code: nonuniform column weight");
        }
    }

    const std::size_t rx = rank(code.Hx);
    const std::size_t rz = rank(code.Hz);
    code.k = code.n - rx - rz;

    code.Hx.build_adjacency();
    code.Hz.build_adjacency();
    return code;
}

namespace {

PolyTerms poly(std::initializer_list<std::pair<int, int>> terms) {
    return PolyTerms{std::vector<std::pair<int, int>>(terms)};
}

std::vector<BBCode> make_registry() {
    std::vector<BBCode> codes;
    // The x^3 + y + y^2 / y^3 + x + x^2 family at increasing lattice sizes.
    codes.push_back(build_bb_code(6, 6, poly({{3, 0}, {0, 1}, {0, 2}}),
                                  poly({{0, 3}, {1, 0}, {2, 0}}), "bb72",
                                  "published family polynomials"));
    codes.push_back(build_bb_code(9, 6, poly({{3, 0}, {0, 1}, {0, 2}}),
                                  poly({{0, 3}, {1, 0}, {2, 0}}), "bb108",
                                  "published family polynomials"));
    codes.push_back(build_bb_code(12, 6, poly({{3, 0}, {0, 1}, {0, 2}}),
                                  poly({{0, 3}, {1, 0}, {2, 0}}), "gross",
                                  "published family polynomials"));
    codes.push_back(build_bb_code(15, 6, poly({{3, 0}, {0, 1}, {0, 2}}),
                                  poly({{0, 3}, {1, 0}, {2, 0}}), "bb180",
                                  "constructed here: family polynomials on a 15x6 torus"));
    // Weight-4 and weight-2 companions used for the column-weight study.
    codes.push_back(build_bb_code(12, 6, poly({{0, 0}, {3, 0}, {0, 1}, {0, 2}}),
                                  poly({{0, 0}, {0, 3}, {1, 0}, {2, 0}}), "bb144w4",
                                  "constructed here: four-term polynomials, validated non-degenerate"));
    codes.push_back(build_bb_code(6, 6, poly({{0, 0}, {1, 0}}),
                                  poly({{0, 0}, {0, 1}}), "bb72w2",
                                  "constructed here: two-term polynomials, validated non-degenerate"));
    return codes;
}

}  // namespace

const std::vector<BBCode>& registry() {
    static const std::vector<BBCode> codes = make_registry();
    return codes;
}

const BBCode& find_code(const std::string& name) {
    for (const auto& code : registry()) {
        if (code.name == name) {
            return code;
        }
    }
    throw std::invalid_argument("find_code: unknown code '" + name + "'");
}

BBCode load_code_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_code_config: cannot open " + path);
    }
    std::string name;
    int l = 0;
    int m = 0;
    PolyTerms a_terms;
    PolyTerms b_terms;

    auto parse_terms = [](std::istringstream& iss) {
        PolyTerms p;
        std::string tok;
        while (iss >> tok) {
            const auto comma = tok.find(',');
            if (comma == std::string::npos) {
                throw std::runtime_error("load_code_config: term must be 'a,b', got " + tok);
            }
            p.terms.emplace_back(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
        }
        return p;
    };

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream iss(line);
        std::string key;
        iss >> key;
        if (key == "name") {
            iss >> name;
        } else if (key == "l") {
            iss >> l;
        } else if (key == "m") {
            iss >> m;
        } else if (key == "A") {
            a_terms = parse_terms(iss);
        } else if (key == "B") {
            b_terms = parse_terms(iss);
        } else {
            throw std::runtime_error("load_code_config: unknown key '" + key + "'");
        }
    }
    if (name.empty() || l <= 0 || m <= 0 || a_terms.terms.empty() || b_terms.terms.empty()) {
        throw std::runtime_error("load_code_config: incomplete definition in " + path);
    }
    return build_bb_code(l, m, a_terms, b_terms, name, "loaded from " + path);
}

}  // namespace bbdec
