#include "qmrat/action.hpp"

#include "qmrat/error.hpp"

namespace qmrat {

namespace {

bool constant_in_variables(const RatFunc& f) {
    const TowerSpec& t = f.tower();
    for (int v = t.generator_count(); v < t.symbol_count(); ++v) {
        if (f.num().max_exponent(v) > 0 || f.den().max_exponent(v) > 0) return false;
    }
    return true;
}

bool is_rational_number(const RatFunc& f) {
    return f.num().is_constant() && f.den().is_constant();
}

} // namespace

Substitution monomial_substitution(const TowerSpec& tower, const IntMatrix2& m,
                                   const RatFunc& c1, const RatFunc& c2,
                                   const std::map<std::string, RatFunc>& field_images) {
    if (tower.variable_count() != 2)
        fail(ErrorKind::Internal, "monomial substitution needs two variables");
    int vx = tower.generator_count();
    int vy = vx + 1;
    RatFunc x = RatFunc::symbol(tower, vx);
    RatFunc y = RatFunc::symbol(tower, vy);

    Substitution s(tower);
    for (const auto& [name, image] : field_images) s.set(name, image);
    // sigma(x_j) = c_j * prod x_i^{a_{i,j}}: column j of the matrix.
    s.set(vx, c1 * x.pow(m.a) * y.pow(m.c));
    s.set(vy, c2 * x.pow(m.b) * y.pow(m.d));
    return s;
}

QuasiMonomialAction build_action(const TowerSpec& tower,
                                 const std::vector<GeneratorData>& gens,
                                 const BuildOptions& opts) {
    std::vector<IntMatrix2> mats;
    for (const GeneratorData& g : gens) mats.push_back(g.matrix);
    FiniteMatrixGroup group = close_group(mats);

    std::vector<Substitution> gen_subs;
    for (const GeneratorData& g : gens) {
        if (g.c1.is_zero() || g.c2.is_zero())
            fail(ErrorKind::ZeroCoefficient, "monomial coefficient is zero");
        if (!constant_in_variables(g.c1) || !constant_in_variables(g.c2))
            fail(ErrorKind::InvalidInstance, "coefficients must be constant in x, y");
        if (opts.coefficients_in_base_field &&
            (!is_rational_number(g.c1) || !is_rational_number(g.c2)))
            fail(ErrorKind::CoefficientOutsideBaseField,
                 "main-theorem mode requires coefficients in Q");
        Substitution s =
            monomial_substitution(tower, g.matrix, g.c1, g.c2, g.field_images);
        s.validate();
        gen_subs.push_back(std::move(s));
    }

    // Extend along words, then check the whole multiplication table: the
    // group is tiny, so the O(|G|^2) comparison is cheap and presentation
    // free.
    std::vector<Substitution> subs;
    subs.reserve(group.elements.size());
    for (size_t i = 0; i < group.elements.size(); ++i) {
        Substitution s = Substitution::identity(tower);
        for (int gi : group.words[i]) s = compose(s, gen_subs[gi]);
        subs.push_back(std::move(s));
    }
    for (size_t i = 0; i < group.elements.size(); ++i) {
        for (size_t j = 0; j < group.elements.size(); ++j) {
            IntMatrix2 prod = group.elements[i] * group.elements[j];
            int k = group.index_of(prod);
            if (k < 0) fail(ErrorKind::Internal, "group not closed");
            Substitution composed = compose(subs[i], subs[j]);
            if (!substitutions_equal(composed, subs[static_cast<size_t>(k)]))
                fail(ErrorKind::RelationViolation,
                     "substitution table violates the group law at " +
                         group.elements[i].str() + " * " + group.elements[j].str());
        }
    }

    QuasiMonomialAction a;
    a.tower_ = &tower;
    a.group_ = std::move(group);
    a.substitutions_ = std::move(subs);
    return a;
}

const Substitution& QuasiMonomialAction::of(const IntMatrix2& m) const {
    int i = group_.index_of(m);
    if (i < 0) fail(ErrorKind::Internal, "element not in group");
    return substitutions_[static_cast<size_t>(i)];
}

KernelReport kernel_H(const QuasiMonomialAction& a) {
    std::vector<IntMatrix2> kern;
    for (size_t i = 0; i < a.group().elements.size(); ++i) {
        if (a.of(static_cast<int>(i)).fixes_all_generators())
            kern.push_back(a.group().elements[i]);
    }
    FiniteMatrixGroup h = close_group(kern.empty() ? std::vector<IntMatrix2>{kIdentity} : kern);
    if (h.order() != static_cast<int>(kern.size()))
        fail(ErrorKind::Internal, "kernel is not closed");
    if (!is_normal_in(h, a.group()))
        fail(ErrorKind::Internal, "kernel is not normal");
    KernelReport r;
    r.quotient_order = a.group().order() / h.order();
    r.H = std::move(h);
    return r;
}

bool is_invariant(const RatFunc& f, const QuasiMonomialAction& a) {
    for (size_t i = 0; i < a.group().elements.size(); ++i) {
        if (!rf_equal(substitute(f, a.of(static_cast<int>(i))), f)) return false;
    }
    return true;
}

} // namespace qmrat
