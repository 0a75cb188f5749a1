#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmrat/expr.hpp"
#include "qmrat/ratfunc.hpp"

namespace qmrat {

// ---------------------------------------------------------------------------
// Explicit fixed-field generator pairs
// ---------------------------------------------------------------------------

// A pair of rational functions certified invariant (or omega-eigen) under a
// finite substitution group, with a Jacobian independence check.  Generation
// of the full fixed field is cited, not re-proved.
struct GeneratorPair {
    std::shared_ptr<const TowerSpec> field;
    RatFunc u, v;
    std::string invariant_under;
    bool eigen = false; // u, v are omega-eigenvectors rather than invariants
    bool independent = false;
};

// k(x,y)^<-I> for -I: x -> a/x, y -> a/y:  s = (xy+a)/(x+y), t = (xy-a)/(x-y).
GeneratorPair lemma21_basis(const std::optional<Rat>& a = std::nullopt);

// k(x,y)^<-I> for -I: x -> a/x, y -> b/y with b = c(x + a/x) + d, (c,d) != (0,0).
GeneratorPair lemma22_basis(const std::optional<Rat>& a = std::nullopt,
                            const std::optional<Rat>& c = std::nullopt,
                            const std::optional<Rat>& d = std::nullopt);

// k(x,y)^<sigma> for the 3-cycle x -> y -> b/(xy) -> x (degree-4 pair).
GeneratorPair lemma23_basis(const std::optional<Rat>& b = std::nullopt);

// Eigenbasis u -> omega u, v -> omega^-1 v for x -> y -> 1/(xy) -> x.
GeneratorPair lemma24_eigenbasis();

// Conic-bundle coordinates for sigma: sqrt_a -> -sqrt_a, x -> x, y -> f(x)/y:
// z1 = (y + f/y)/2, z2 = (y - f/y)/(2 sqrt_a), with z1^2 - a z2^2 = f(x).
// (The y-free variant printed elsewhere fails the invariance check; this is
// the form the checks pass.)
struct ConicBundlePair {
    std::shared_ptr<const TowerSpec> field;
    RatFunc z1, z2, f;
};
ConicBundlePair conic_bundle_zpair(const std::string& f_expr_in_x,
                                   const std::optional<Rat>& a = std::nullopt);

// ---------------------------------------------------------------------------
// Change-of-variables regression chains
// ---------------------------------------------------------------------------

struct SymbolDecl {
    std::string name;
    RelKind kind = RelKind::Free;
    std::string rhs; // for Sqrt / Cbrt
};

struct ActorSpec {
    std::string name;
    std::vector<std::pair<std::string, std::string>> images; // symbol -> expr
};

// Expected images of defined quantities under an actor (or a '*'-word of
// actors, rightmost applied first).
struct ExpectedSpec {
    std::string actor;
    std::vector<std::pair<std::string, std::string>> images; // target -> expr
};

// One verification block over its own coefficient field: declared action,
// new quantities, and the displayed images they must satisfy.
struct StepSpec {
    std::string title;
    std::vector<SymbolDecl> gens;
    std::vector<std::string> vars;
    std::vector<ActorSpec> actors;
    std::vector<std::pair<std::string, std::string>> defs;
    std::vector<ExpectedSpec> expected;
    std::vector<std::pair<std::string, std::string>> equalities;
    std::vector<std::pair<std::string, int>> order_checks;  // actor word, order
    std::vector<std::pair<std::string, std::string>> word_checks; // word == word|"id"
};

struct CaseSpec {
    std::string tag;
    std::string summary;
    std::vector<std::string> params; // names bindable to numeric values
    std::vector<StepSpec> steps;
};

struct IdentityCheck {
    std::string description;
    bool passed = false;
};

struct ChainReport {
    std::string tag;
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const IdentityCheck& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// The registered verification chains, one per dispatch sub-case.
const std::vector<CaseSpec>& case_registry();
std::vector<std::string> all_case_tags();
const CaseSpec& find_case(const std::string& tag);

ChainReport run_case(const std::string& tag, const ParamMap* params = nullptr);
ChainReport run_case_spec(const CaseSpec& spec, const ParamMap* params = nullptr);

// Throws VerificationFailure naming the first failing identity.
void verify_case_or_throw(const std::string& tag, const ParamMap* params = nullptr);

} // namespace qmrat
