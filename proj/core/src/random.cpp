#include "hopfrg/random.hpp"

namespace hopfrg {

LaurentPoly Rng::laurent(int min_exp, int max_exp) {
    LaurentPoly v;
    for (int k = min_exp; k <= max_exp; ++k)
        if (flip()) v += LaurentPoly::z_power(k) * small_rational();
    return v;
}

namespace {

std::map<Tree, LaurentPoly> random_generators(Rng& rng, Alg tag, int max_degree, bool a_plus,
                                              bool constant) {
    std::map<Tree, LaurentPoly> gens;
    const int max_vertices = tag == Alg::H ? max_degree : max_degree + 1;
    for (const Tree& t : enumerate_trees(max_vertices)) {
        if (tag == Alg::K && t.edge_count() < 1) continue;
        const int deg = tag == Alg::H ? t.vertex_count() : t.edge_count();
        if (deg > max_degree) continue;
        LaurentPoly v;
        if (constant)
            v = LaurentPoly(rng.small_rational());
        else
            v = rng.laurent(a_plus ? 0 : -deg, 2);
        if (!v.is_zero()) gens.emplace(t, v);
    }
    return gens;
}

} // namespace

Character random_character(Rng& rng, Alg tag, int max_degree, bool a_plus) {
    return Character::from_generators(tag, random_generators(rng, tag, max_degree, a_plus, false));
}

InfChar random_infchar(Rng& rng, Alg tag, int max_degree, bool a_plus, bool constant) {
    return InfChar::from_generators(tag,
                                    random_generators(rng, tag, max_degree, a_plus, constant));
}

} // namespace hopfrg
