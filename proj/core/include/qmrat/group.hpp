#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmrat/matrix.hpp"

namespace qmrat {

// The 13 GL2(Z)-conjugacy classes of finite subgroups.
enum class ConjugacyLabel {
    C1,
    C2_1, // <-I>
    C2_2, // <lambda>
    C2_3, // <tau>
    C3,   // <rho^2>
    C4,   // <sigma>
    C6,   // <rho>
    V4_1, // <lambda, -I>
    V4_2, // <tau, -I>
    S3_1, // <rho^2, tau>
    S3_2, // <rho^2, -tau>
    D4,   // <sigma, tau>
    D6,   // <rho, tau>
};

inline constexpr int kLabelCount = 13;

const char* label_name(ConjugacyLabel l) noexcept;
std::optional<ConjugacyLabel> label_from_name(const std::string& name);
std::vector<ConjugacyLabel> all_labels();

// Finite subgroup of GL2(Z): sorted element list closed under product and
// inverse, containing the identity.  For groups built by close_group each
// element also carries a word in the generators (generator indices).
struct FiniteMatrixGroup {
    std::vector<IntMatrix2> elements;   // sorted, unique
    std::vector<IntMatrix2> generators;
    std::vector<std::vector<int>> words; // words[i] spells elements[i]
    std::optional<ConjugacyLabel> label;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const IntMatrix2& m) const;
    int index_of(const IntMatrix2& m) const; // -1 if absent
    bool set_equals(const FiniteMatrixGroup& o) const { return elements == o.elements; }
};

// Saturates the generator set.  Throws NotUnimodular for det not in {+-1}
// and InfiniteGroup if the closure exceeds order 12 (no finite subgroup of
// GL2(Z) is larger).
FiniteMatrixGroup close_group(const std::vector<IntMatrix2>& gens);

// Positive definite G-invariant form sum g^T g, as [[A,B],[B,C]].
struct SymForm {
    int64_t A, B, C;
};
SymForm invariant_form(const FiniteMatrixGroup& g);

// Conjugacy class and a verified conjugator P with P G P^-1 equal to the
// class representative as a set.  Representatives classify to themselves
// with P = I.
struct Classification {
    ConjugacyLabel label;
    IntMatrix2 conjugator;
};
Classification classify(const FiniteMatrixGroup& g);

// The representative group of a label.
const FiniteMatrixGroup& representative(ConjugacyLabel l);

// Conjugate of g by p: p g p^-1, saturated (element words preserved).
FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& g, const IntMatrix2& p);

// All normal subgroups of the representative group, in the canonical table
// order (trivial subgroup first, the full group last).
std::vector<FiniteMatrixGroup> normal_subgroups(ConjugacyLabel l);

// Canonical display names of each normal subgroup (e.g. "1", "<-I>").
std::vector<std::string> normal_subgroup_names(ConjugacyLabel l);

bool is_normal_in(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);

} // namespace qmrat
