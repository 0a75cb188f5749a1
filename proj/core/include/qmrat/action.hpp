#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmrat/group.hpp"
#include "qmrat/ratfunc.hpp"

namespace qmrat {

// Data attached to one group generator: monomial coefficients for the two
// variables and the field automorphism on tower generators.  Coefficients
// are rational functions constant in the variables (elements of K); the
// main-theorem mode additionally requires them to be rational numbers.
struct GeneratorData {
    IntMatrix2 matrix;
    RatFunc c1, c2;
    std::map<std::string, RatFunc> field_images; // tower generator -> image
};

struct BuildOptions {
    // Enforce c_j(sigma) in Q \ {0} (the main theorem's hypothesis).
    bool coefficients_in_base_field = false;
};

// A quasi-monomial action: group + per-element substitution on K(x,y).
class QuasiMonomialAction {
  public:
    const TowerSpec& tower() const { return *tower_; }
    const FiniteMatrixGroup& group() const { return group_; }

    const Substitution& of(const IntMatrix2& m) const;
    const Substitution& of(int element_index) const { return substitutions_[element_index]; }

    friend QuasiMonomialAction build_action(const TowerSpec& tower,
                                            const std::vector<GeneratorData>& gens,
                                            const BuildOptions& opts);

  private:
    const TowerSpec* tower_ = nullptr;
    FiniteMatrixGroup group_;
    std::vector<Substitution> substitutions_; // aligned with group_.elements
};

// Builds the action from generator data, extends it to every element along
// generator words, and validates the extension against the multiplication
// table.  Throws RelationViolation when the cocycle data is inconsistent,
// ZeroCoefficient / CoefficientOutsideBaseField per the contract.
QuasiMonomialAction build_action(const TowerSpec& tower,
                                 const std::vector<GeneratorData>& gens,
                                 const BuildOptions& opts = {});

struct KernelReport {
    FiniteMatrixGroup H;
    int quotient_order = 0;
};

// H = elements acting trivially on every tower generator; always normal.
KernelReport kernel_H(const QuasiMonomialAction& a);

// True iff substitute(f, sigma) == f for every sigma in the group.
bool is_invariant(const RatFunc& f, const QuasiMonomialAction& a);

// The substitution induced on the variables by a matrix and coefficients:
// x_j -> c_j * x^m[1][j] * y^m[2][j].
Substitution monomial_substitution(const TowerSpec& tower, const IntMatrix2& m,
                                   const RatFunc& c1, const RatFunc& c2,
                                   const std::map<std::string, RatFunc>& field_images);

} // namespace qmrat
