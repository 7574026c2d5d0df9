#include "wallx/freelie.hpp"

#include <numeric>

#include <json.hpp>

namespace wallx {

std::vector<Permutation> all_permutations(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Permutation> permutations_fixing_first(int n) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(n))
        if (p[0] == 1) out.push_back(p);
    return out;
}

IntAssocPoly left_nested_expand(const Permutation& sigma) {
    if (sigma.empty()) throw domain_error("nested bracket: empty permutation");
    IntAssocPoly acc{{IntWord{sigma[0]}, Rational(1)}};
    for (size_t i = 1; i < sigma.size(); ++i)
        acc = freelie::commutator(acc, IntAssocPoly{{IntWord{sigma[i]}, Rational(1)}});
    return acc;
}

IntAssocPoly dynkin(const IntAssocPoly& f) {
    size_t degree = 0;
    bool first = true;
    for (const auto& [w, c] : f) {
        if (first) {
            degree = w.size();
            first = false;
        } else if (w.size() != degree) {
            throw domain_error("dynkin: input is not homogeneous");
        }
    }
    IntAssocPoly out;
    for (const auto& [w, c] : f) {
        IntAssocPoly acc{{IntWord{w[0]}, Rational(1)}};
        for (size_t i = 1; i < w.size(); ++i)
            acc = freelie::commutator(acc, IntAssocPoly{{IntWord{w[i]}, Rational(1)}});
        out = freelie::assoc_add(out, freelie::assoc_scale(acc, c));
    }
    return out;
}

namespace {

void check_permutation(const Permutation& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw domain_error("coefficient table: wrong permutation length");
    Permutation sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1)
            throw domain_error("coefficient table: key is not a permutation of 1..n");
}

IntAssocPoly assoc_from_table(const PermTable& table, int n) {
    IntAssocPoly lhs;
    for (const auto& [sigma, c] : table) {
        check_permutation(sigma, n);
        IntWord w(sigma.begin(), sigma.end());
        freelie::add_term(lhs, w, c);
    }
    return lhs;
}

}  // namespace

PermTable utilde_solve(const PermTable& u_table, int n) {
    if (n < 1) throw domain_error("coefficient solving: n must be >= 1");
    IntAssocPoly lhs = assoc_from_table(u_table, n);
    if (lhs.empty()) return {};

    // Left-normed brackets with first letter 1 form a basis of the
    // multilinear Lie component; the coefficient on the basis element
    // indexed by sigma can be read off the word e_1 e_{sigma(2)} ... ,
    // since that is the only word starting with e_1 in its expansion.
    PermTable result;
    IntAssocPoly reconstructed;
    for (const auto& sigma : permutations_fixing_first(n)) {
        IntWord w(sigma.begin(), sigma.end());
        auto it = lhs.find(w);
        if (it == lhs.end()) continue;
        result[sigma] = it->second;
        reconstructed = freelie::assoc_add(
            reconstructed, freelie::assoc_scale(left_nested_expand(sigma), it->second));
    }
    if (!(reconstructed == lhs))
        throw domain_error(
            "coefficient solving: the associative element is not a Lie element");
    return result;
}

bool verify_identity(const PermTable& u_table, const PermTable& utilde_table, int n) {
    IntAssocPoly lhs = assoc_from_table(u_table, n);
    IntAssocPoly rhs;
    for (const auto& [sigma, c] : utilde_table)
        rhs = freelie::assoc_add(rhs, freelie::assoc_scale(left_nested_expand(sigma), c));
    return lhs == rhs;
}

IntLiePoly nested_bracket_lie(const PermTable& table, int n) {
    IntAssocPoly acc;
    for (const auto& [sigma, c] : table) {
        if (static_cast<int>(sigma.size()) != n)
            throw domain_error("coefficient table: wrong permutation length");
        acc = freelie::assoc_add(acc, freelie::assoc_scale(left_nested_expand(sigma), c));
    }
    return freelie::lyndon_decompose(acc);
}

std::string lie_poly_to_json(const IntLiePoly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, c] : p) {
        nlohmann::json entry;
        entry["lyndon_word"] = w;
        entry["coefficient"] = c.to_string();
        j.push_back(std::move(entry));
    }
    return j.dump();
}

}  // namespace wallx
