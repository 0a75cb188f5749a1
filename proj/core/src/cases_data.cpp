// Registry of the change-of-variables verification chains, one entry per
// dispatch sub-case of the two-dimensional quasi-monomial classification.
// Every step lists the acting substitutions over its own coefficient field,
// the new quantities, and the images they must satisfy; the chain runner
// checks each line exactly.

#include "qmrat/fixedfield.hpp"

namespace qmrat {

namespace {

SymbolDecl F(const char* n) { return {n, RelKind::Free, {}}; }
SymbolDecl SQ(const char* n, const char* rhs) { return {n, RelKind::Sqrt, rhs}; }
SymbolDecl CB(const char* n, const char* rhs) { return {n, RelKind::Cbrt, rhs}; }
SymbolDecl OM(const char* n) { return {n, RelKind::Omega, {}}; }

using Images = std::vector<std::pair<std::string, std::string>>;

// Shared building blocks ----------------------------------------------------

// Lemma-2.4 eigenvector pair in the variables X, Y.
const char* kEigenU = "(1+w^2*X+w*X*Y)/(1+X+X*Y)";
const char* kEigenV = "(1+w*X+w^2*X*Y)/(1+X+X*Y)";

// Degree-4 invariants of the 3-cycle x -> y -> c/(xy).
const char* kCycleDen = "(y^2*x^4-y^3*x^3+y^4*x^2-c*y*x^2-c*y^2*x+c^2)";
std::string cycle_inv_x() {
    return "y*(y^3*x^3+c*x^3-3*c*y*x^2+c^2)/" + std::string(kCycleDen);
}
std::string cycle_inv_y() {
    return "x*(x^3*y^3+c*y^3-3*c*x*y^2+c^2)/" + std::string(kCycleDen);
}

// C2_1: the group <-I> acting with sqrt(a) -> -sqrt(a), x -> b/x, y -> c/y.
CaseSpec case_c2_1() {
    CaseSpec c;
    c.tag = "c2_1";
    c.summary = "order-2 inversion on both variables; fixed field carried by "
                "two conics s_i^2 - a t_i^2 = b_i";
    c.params = {"a", "b", "c"};
    StepSpec s;
    s.title = "conic coordinates";
    s.gens = {F("a"), F("b"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {{"mI", {{"sa", "-sa"}, {"x", "b/x"}, {"y", "c/y"}}}};
    s.order_checks = {{"mI", 2}};
    s.defs = {{"s1", "(x+b/x)/2"},
              {"t1", "(x-b/x)/(2*sa)"},
              {"s2", "(y+c/y)/2"},
              {"t2", "(y-c/y)/(2*sa)"}};
    s.expected = {{"mI", {{"s1", "s1"}, {"t1", "t1"}, {"s2", "s2"}, {"t2", "t2"}}}};
    s.equalities = {{"s1^2-a*t1^2", "b"}, {"s2^2-a*t2^2", "c"}};
    c.steps = {s};
    return c;
}

CaseSpec case_c2_2() {
    CaseSpec c;
    c.tag = "c2_2";
    c.summary = "reflection fixing x; sign on x absorbed into sqrt(a)x, then "
                "a single conic bundle over k(x)";
    c.params = {"a", "b"};
    StepSpec s1;
    s1.title = "sign absorption";
    s1.gens = {F("a"), F("b"), SQ("sa", "a")};
    s1.vars = {"x", "y"};
    s1.actors = {{"lam", {{"sa", "-sa"}, {"x", "-x"}, {"y", "b/y"}}}};
    s1.defs = {{"X", "sa*x"}};
    s1.expected = {{"lam", {{"X", "X"}}}};
    s1.order_checks = {{"lam", 2}};

    StepSpec s2;
    s2.title = "conic-bundle coordinates";
    s2.gens = {F("a"), F("b"), SQ("sa", "a")};
    s2.vars = {"x", "y"};
    s2.actors = {{"lam", {{"sa", "-sa"}, {"y", "b/y"}}}};
    s2.defs = {{"z1", "(y+b/y)/2"}, {"z2", "(y-b/y)/(2*sa)"}};
    s2.expected = {{"lam", {{"z1", "z1"}, {"z2", "z2"}, {"x", "x"}}}};
    s2.equalities = {{"z1^2-a*z2^2", "b"}};
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_c2_3() {
    CaseSpec c;
    c.tag = "c2_3";
    c.summary = "variable swap with coefficient b; rescaling y makes the "
                "action purely quasi-monomial";
    c.params = {"a", "b"};
    StepSpec s;
    s.title = "coefficient absorption";
    s.gens = {F("a"), F("b"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {{"tau", {{"sa", "-sa"}, {"x", "b*y"}, {"y", "x/b"}}}};
    s.order_checks = {{"tau", 2}};
    s.defs = {{"Y", "b*y"}};
    s.expected = {{"tau", {{"x", "Y"}, {"Y", "x"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_c3_absorb() {
    CaseSpec c;
    c.tag = "c3";
    c.summary = "order-3 action x -> by, y -> c/(xy); b absorbed, c scaled "
                "to b^2 c";
    c.params = {"b", "c"};
    StepSpec s;
    s.title = "coefficient absorption";
    s.gens = {F("b"), F("c")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2", {{"x", "b*y"}, {"y", "c/(x*y)"}}}};
    s.order_checks = {{"rho2", 3}};
    s.defs = {{"Y", "b*y"}, {"C", "b^2*c"}};
    s.expected = {{"rho2", {{"x", "Y"}, {"Y", "C/(x*Y)"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_c3_omega() {
    CaseSpec c;
    c.tag = "c3-omega";
    c.summary = "cubic Kummer case: omega in the base field, K = k(cbrt a)";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "action consistency";
    s.gens = {F("a"), F("c"), OM("w"), CB("ra", "a")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2", {{"ra", "w*ra"}, {"x", "y"}, {"y", "c/(x*y)"}}}};
    s.order_checks = {{"rho2", 3}};
    c.steps = {s};
    return c;
}

CaseSpec case_c3_cbrt() {
    CaseSpec c;
    c.tag = "c3-cbrt";
    c.summary = "cbrt(c) rational: rescaling by it yields a purely "
                "quasi-monomial order-3 action";
    StepSpec s;
    s.title = "rescale by the cube root";
    s.gens = {F("a0"), F("a1"), F("a2"), F("rc")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2",
                 {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}, {"x", "y"},
                  {"y", "rc^3/(x*y)"}}}};
    s.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}}};
    s.order_checks = {{"rho2", 3}};
    c.steps = {s};
    return c;
}

CaseSpec case_c3_generic() {
    CaseSpec c;
    c.tag = "c3-generic";
    c.summary = "cyclic cubic K without omega, cbrt(c) irrational: full "
                "descent chain through the omega-eigenbasis to the norm-one "
                "torus coordinates";
    c.params = {"c"};

    StepSpec s1;
    s1.title = "rescale by cbrt(c)";
    s1.gens = {F("a0"), F("a1"), F("a2"), OM("w"), F("c"), CB("rc", "c")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"rho2",
         {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}, {"x", "y"}, {"y", "c/(x*y)"}}},
        {"phc", {{"rc", "w*rc"}}},
        {"phw", {{"w", "w^2"}}}};
    s1.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s1.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                   {"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}},
                   {"phw", {{"X", "X"}, {"Y", "Y"}}}};

    StepSpec s2;
    s2.title = "omega-eigenbasis";
    s2.gens = {OM("w")};
    s2.vars = {"X", "Y"};
    s2.actors = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                 {"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}},
                 {"phw", {{"w", "w^2"}}}};
    s2.defs = {{"u", kEigenU}, {"v", kEigenV}};
    s2.expected = {{"rho2", {{"u", "w*u"}, {"v", "w^2*v"}}},
                   {"phc", {{"u", "v/u"}, {"v", "1/u"}}},
                   {"phw", {{"u", "v"}, {"v", "u"}}}};

    StepSpec s3;
    s3.title = "common-eigenvalue coordinates";
    s3.gens = {OM("w")};
    s3.vars = {"u", "v"};
    s3.actors = {{"rho2", {{"u", "w*u"}, {"v", "w^2*v"}}},
                 {"phc", {{"u", "v/u"}, {"v", "1/u"}}},
                 {"phw", {{"w", "w^2"}, {"u", "v"}, {"v", "u"}}}};
    s3.defs = {{"s", "(u-v^2)/(v*(u*v-1))"}, {"t", "u*(u*v-1)/(v-u^2)"}};
    s3.expected = {{"rho2", {{"s", "w^2*s"}, {"t", "w^2*t"}}},
                   {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}},
                   {"phw", {{"s", "1/t"}, {"t", "1/s"}}}};

    StepSpec s4;
    s4.title = "resolvent coordinates on K";
    s4.gens = {F("a0"), F("a1"), F("a2"), OM("w")};
    s4.actors = {{"rho2", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}}},
                 {"phc", {}},
                 {"phw", {{"w", "w^2"}}}};
    s4.defs = {{"A", "a0+w^2*a1+w*a2"}, {"B", "a0+w*a1+w^2*a2"}};
    s4.expected = {{"rho2", {{"A", "w*A"}, {"B", "w^2*B"}}},
                   {"phc", {{"A", "A"}, {"B", "B"}}},
                   {"phw", {{"A", "B"}, {"B", "A"}}}};

    StepSpec s5;
    s5.title = "descend to the kernel-invariant pair";
    s5.gens = {F("A"), F("B"), OM("w")};
    s5.vars = {"s", "t"};
    s5.actors = {
        {"rho2", {{"A", "w*A"}, {"B", "w^2*B"}, {"s", "w^2*s"}, {"t", "w^2*t"}}},
        {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}},
        {"phw", {{"w", "w^2"}, {"A", "B"}, {"B", "A"}, {"s", "1/t"}, {"t", "1/s"}}}};
    s5.defs = {{"S", "A*s"}, {"T", "A*t"}, {"alpha", "A^3"}, {"bb", "A*B"}};
    s5.expected = {
        {"rho2", {{"S", "S"}, {"T", "T"}, {"alpha", "alpha"}}},
        {"phc", {{"S", "T"}, {"T", "alpha/(S*T)"}, {"alpha", "alpha"}}},
        {"phw", {{"S", "bb/T"}, {"T", "bb/S"}, {"alpha", "bb^3/alpha"}}}};

    StepSpec s6;
    s6.title = "normalize to alpha' = (B/A)^3";
    s6.gens = {F("A"), F("B"), OM("w")};
    s6.vars = {"S", "T"};
    s6.actors = {
        {"phc", {{"S", "T"}, {"T", "A^3/(S*T)"}}},
        {"phw",
         {{"w", "w^2"}, {"A", "B"}, {"B", "A"}, {"S", "A*B/T"}, {"T", "A*B/S"}}}};
    s6.defs = {{"Sp", "B*S/A^2"}, {"Tp", "B*T/A^2"}, {"ap", "B^3/A^3"}};
    s6.expected = {
        {"phc", {{"Sp", "Tp"}, {"Tp", "ap/(Sp*Tp)"}, {"ap", "ap"}}},
        {"phw", {{"Sp", "1/Tp"}, {"Tp", "1/Sp"}, {"ap", "1/ap"}}}};

    StepSpec s7;
    s7.title = "norm-split coordinates (vanishing-symbol branch)";
    s7.gens = {F("d0"), F("d1"), F("d2"), F("d3"), F("d4"), F("d5"), OM("w")};
    s7.vars = {"Sp", "Tp"};
    s7.actors = {
        {"phc",
         {{"d0", "d1"}, {"d1", "d2"}, {"d2", "d0"}, {"d3", "d4"}, {"d4", "d5"},
          {"d5", "d3"}, {"Sp", "Tp"}, {"Tp", "d0*d1*d2/(Sp*Tp)"}}},
        {"phw",
         {{"d0", "d3"}, {"d1", "d5"}, {"d2", "d4"}, {"d3", "d0"}, {"d4", "d2"},
          {"d5", "d1"}, {"w", "w^2"}, {"Sp", "1/Tp"}, {"Tp", "1/Sp"}}}};
    s7.defs = {{"p", "Sp/(d0*d2*d4)"},
               {"q", "Tp/(d0*d1*d5)"},
               {"P", "d0*d1*d2*d3*d4*d5"}};
    s7.expected = {{"phc", {{"p", "q"}, {"q", "1/(P*p*q)"}}},
                   {"phw", {{"p", "1/(P*q)"}, {"q", "1/(P*p)"}}}};

    c.steps = {s1, s2, s3, s4, s5, s6, s7};
    return c;
}

CaseSpec case_c4_absorb() {
    CaseSpec c;
    c.tag = "c4";
    c.summary = "order-4 action x -> by, y -> c/x; b absorbed into y, c "
                "scaled to bc";
    c.params = {"b", "c"};
    StepSpec s;
    s.title = "coefficient absorption";
    s.gens = {F("b"), F("c")};
    s.vars = {"x", "y"};
    s.actors = {{"sig", {{"x", "b*y"}, {"y", "c/x"}}}};
    s.order_checks = {{"sig", 4}};
    s.defs = {{"Y", "b*y"}, {"C", "b*c"}};
    s.expected = {{"sig", {{"x", "Y"}, {"Y", "C/x"}}}};
    c.steps = {s};
    return c;
}

// Moebius coordinates used throughout the C4/D4 quartic cases.
const char* kMoebX = "(x+rc)/(x-rc)";
const char* kMoebY = "(y+rc)/(y-rc)";

CaseSpec case_c4_k() {
    CaseSpec c;
    c.tag = "c4-k";
    c.summary = "C4 with quartic K and rational sqrt(c): twisted coordinates "
                "u = alpha X, v = beta Y become a swap";
    StepSpec s1;
    s1.title = "Moebius twist";
    s1.gens = {F("al"), F("be"), F("rc")};
    s1.vars = {"x", "y"};
    s1.actors = {{"sig", {{"al", "be"}, {"be", "-al"}, {"x", "y"}, {"y", "rc^2/x"}}},
                 {"sig2",
                  {{"al", "-al"}, {"be", "-be"}, {"x", "rc^2/x"}, {"y", "rc^2/y"}}}};
    s1.defs = {{"u", "al*" + std::string(kMoebX)}, {"v", "be*" + std::string(kMoebY)}};
    s1.expected = {{"sig", {{"u", "v"}, {"v", "u"}}},
                   {"sig2", {{"u", "u"}, {"v", "v"}}}};
    s1.word_checks = {{"sig*sig", "sig2"}};

    StepSpec s2;
    s2.title = "quadratic subfield coordinates";
    s2.gens = {F("al"), F("be")};
    s2.actors = {{"sig", {{"al", "be"}, {"be", "-al"}}}};
    s2.defs = {{"A", "al*be"}, {"B", "al/be"}};
    s2.expected = {{"sig", {{"A", "-A"}, {"B", "-1/B"}}}};

    StepSpec s3;
    s3.title = "invariants of the swap";
    s3.gens = {F("A"), F("B")};
    s3.vars = {"u", "v"};
    s3.actors = {{"sig", {{"A", "-A"}, {"B", "-1/B"}, {"u", "v"}, {"v", "u"}}}};
    s3.defs = {{"a", "A*(B+1/B)"}, {"b", "B-1/B"}, {"U", "u+v"}, {"V", "A*(u-v)"}};
    s3.expected = {{"sig", {{"a", "a"}, {"b", "b"}, {"U", "U"}, {"V", "V"}}}};

    c.steps = {s1, s2, s3};
    return c;
}

CaseSpec case_c4_quad() {
    CaseSpec c;
    c.tag = "c4-quad";
    c.summary = "C4 with sqrt(c) in the quadratic subfield: conjugated "
                "Moebius twist still swaps u and v'";
    StepSpec s;
    s.title = "conjugated Moebius twist";
    s.gens = {F("al"), F("be"), F("c"), SQ("rc", "c")};
    s.vars = {"x", "y"};
    s.actors = {{"sig",
                 {{"al", "be"}, {"be", "-al"}, {"rc", "-rc"}, {"x", "y"},
                  {"y", "c/x"}}},
                {"sig2", {{"al", "-al"}, {"be", "-be"}, {"x", "c/x"}, {"y", "c/y"}}}};
    s.defs = {{"u", "al*" + std::string(kMoebX)}, {"vp", "be*(y-rc)/(y+rc)"}};
    s.expected = {{"sig", {{"u", "vp"}, {"vp", "u"}}},
                  {"sig2", {{"u", "u"}, {"vp", "vp"}}}};
    s.word_checks = {{"sig*sig", "sig2"}};
    c.steps = {s};
    return c;
}

CaseSpec case_c4_out() {
    CaseSpec c;
    c.tag = "c4-out";
    c.summary = "C4 with sqrt(c) outside K: Galois twist phi_c and the "
                "induced involution on (U,V), then on (s,t)";

    StepSpec s1;
    s1.title = "Moebius twist with Galois conjugation";
    s1.gens = {F("al"), F("be"), F("c"), SQ("rc", "c")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"sig", {{"al", "be"}, {"be", "-al"}, {"x", "y"}, {"y", "c/x"}}},
        {"phc", {{"rc", "-rc"}}}};
    s1.defs = {{"u", "al*" + std::string(kMoebX)}, {"v", "be*" + std::string(kMoebY)}};
    s1.expected = {{"sig", {{"u", "v"}, {"v", "u"}}},
                   {"phc", {{"u", "al^2/u"}, {"v", "be^2/v"}}}};

    StepSpec s2;
    s2.title = "involution on the swap invariants";
    s2.gens = {F("al"), F("be")};
    s2.vars = {"u", "v"};
    s2.actors = {{"phc", {{"u", "al^2/u"}, {"v", "be^2/v"}}}};
    s2.defs = {{"A", "al*be"},
               {"a", "al^2+be^2"},
               {"b", "(al^2-be^2)/(al*be)"},
               {"U", "u+v"},
               {"V", "al*be*(u-v)"}};
    s2.expected = {{"phc",
                    {{"U", "2*a^2*(a*U-b*V)/(a^2*U^2-b^2*V^2-4*V^2)"},
                     {"V",
                      "2*a^3*(a*b*U-b^2*V-4*V)/((b^2+4)*(a^2*U^2-b^2*V^2-4*V^2))"}}}};

    StepSpec s3;
    s3.title = "twisted-involution normal form";
    s3.gens = {F("a"), F("b")};
    s3.vars = {"U", "V"};
    s3.actors = {{"phc",
                  {{"U", "2*a^2*(a*U-b*V)/(a^2*U^2-b^2*V^2-4*V^2)"},
                   {"V",
                    "2*a^3*(a*b*U-b^2*V-4*V)/((b^2+4)*(a^2*U^2-b^2*V^2-4*V^2))"}}}};
    s3.defs = {{"s", "(a*b*U-b^2*V-4*V)/(2*V)"},
               {"t", "b*(a^2*U^2-b^2*V^2-4*V^2)/(4*a*V)"}};
    s3.expected = {{"phc",
                    {{"s", "(b^2+4)/s"},
                     {"t", "(a*(s+(b^2+4)/s)+a*(b^2+4))/t"}}}};

    c.steps = {s1, s2, s3};
    return c;
}

CaseSpec case_c4_kernel() {
    CaseSpec c;
    c.tag = "c4-kernel";
    c.summary = "C4 with kernel <sigma^2>: invariants of -I give u -> c/u, "
                "v -> -c/v";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "kernel invariants";
    s.gens = {F("a"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {{"sig", {{"sa", "-sa"}, {"x", "y"}, {"y", "c/x"}}}};
    s.order_checks = {{"sig", 4}};
    s.defs = {{"u", "(x*y+c)/(x+y)"}, {"v", "(x*y-c)/(x-y)"}};
    s.expected = {{"sig", {{"u", "c/u"}, {"v", "-c/v"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_c6() {
    CaseSpec c;
    c.tag = "c6";
    c.summary = "order-6 action; both coefficients absorb into variable "
                "rescalings";
    c.params = {"b", "c"};
    StepSpec s;
    s.title = "coefficient absorption";
    s.gens = {F("b"), F("c")};
    s.vars = {"x", "y"};
    s.actors = {{"rho", {{"x", "b*x*y"}, {"y", "c/x"}}}};
    s.order_checks = {{"rho", 6}};
    s.defs = {{"X", "x/(b*c)"}, {"Y", "b*y"}};
    s.expected = {{"rho", {{"X", "X*Y"}, {"Y", "1/X"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4a_h1() {
    CaseSpec c;
    c.tag = "v4a-h1";
    c.summary = "V4 (diagonal type), trivial kernel: signs absorbed, then "
                "two independent conics via the biquadratic field";
    StepSpec s1;
    s1.title = "sign absorption";
    s1.gens = {F("a"), F("b"), F("c"), F("d"), SQ("sa", "a"), SQ("sb", "b")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"lam", {{"sa", "-sa"}, {"x", "-x"}, {"y", "-d/y"}}},
        {"mI", {{"sb", "-sb"}, {"x", "c/x"}, {"y", "d/y"}}}};
    s1.defs = {{"X", "sa*x"}, {"Y", "sa*y"}, {"C", "a*c"}, {"D", "a*d"}};
    s1.expected = {{"lam", {{"X", "X"}, {"Y", "D/Y"}}},
                   {"mI", {{"X", "C/X"}, {"Y", "D/Y"}}}};

    StepSpec s2;
    s2.title = "split into two conics";
    s2.gens = {F("a"), F("b"), F("c"), F("d"), SQ("sa", "a"), SQ("sb", "b")};
    s2.vars = {"x", "y"};
    s2.actors = {
        {"lam", {{"sa", "-sa"}, {"y", "d/y"}}},
        {"mI", {{"sb", "-sb"}, {"x", "c/x"}, {"y", "d/y"}}},
        {"mlam", {{"sa", "-sa"}, {"sb", "-sb"}, {"x", "c/x"}}}};
    s2.word_checks = {{"lam*mI", "mlam"}};
    s2.defs = {{"s1", "(y+d/y)/2"},
               {"t1", "(y-d/y)/(2*sa*sb)"},
               {"s2", "(x+c/x)/2"},
               {"t2", "(x-c/x)/(2*sb)"}};
    s2.expected = {
        {"lam", {{"s1", "s1"}, {"t1", "t1"}, {"s2", "s2"}, {"t2", "t2"}}},
        {"mlam", {{"s1", "s1"}, {"t1", "t1"}, {"s2", "s2"}, {"t2", "t2"}}}};
    s2.equalities = {{"s1^2-a*b*t1^2", "d"}, {"s2^2-b*t2^2", "c"}};
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_v4a_hm() {
    CaseSpec c;
    c.tag = "v4a-hm";
    c.summary = "V4 (diagonal type), kernel <-I>: invariants u, v of the "
                "inversion and the induced conic bundle in (U,V)";
    c.params = {"a", "c", "d"};
    StepSpec s;
    s.title = "inversion invariants and bundle coordinates";
    s.gens = {F("a"), F("c"), F("d"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {
        {"lam", {{"sa", "-sa"}, {"y", "d/y"}}},
        {"mI", {{"x", "c/x"}, {"y", "d/y"}}}};
    s.defs = {{"u", "y*(x^2-c)/(x^2*y^2-c*d)"},
              {"v", "x*(y^2-d)/(x^2*y^2-c*d)"},
              {"U", "sa*y*(x^2-c)/(x*(y^2-d))"},
              {"V", "(c-d*(sa*y*(x^2-c)/(x*(y^2-d)))^2)*x*(y^2-d)/(x^2*y^2-c*d)"}};
    s.expected = {{"mI", {{"u", "u"}, {"v", "v"}}},
                  {"lam", {{"U", "U"}, {"V", "-d*(U^2-c/d)/V"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4a_hl(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "v4a-hl-e1" : "v4a-hl-em1";
    c.summary = eps_plus
                    ? "V4 (diagonal type), kernel <lambda>, epsilon = +1: "
                      "Y = y + d/y descends to a plain conic"
                    : "V4 (diagonal type), kernel <lambda>, epsilon = -1: "
                      "u = x(y - d/y) gives a conic bundle over k(v)";
    c.params = {"a", "c", "d"};
    StepSpec s;
    s.title = "kernel invariants";
    s.gens = {F("a"), F("c"), F("d"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    if (eps_plus) {
        s.actors = {{"lam", {{"y", "d/y"}}},
                    {"mI", {{"sa", "-sa"}, {"x", "c/x"}, {"y", "d/y"}}}};
        s.defs = {{"Y", "y+d/y"}};
        s.expected = {{"lam", {{"x", "x"}, {"Y", "Y"}}},
                      {"mI", {{"x", "c/x"}, {"Y", "Y"}}}};
    } else {
        s.actors = {{"lam", {{"x", "-x"}, {"y", "d/y"}}},
                    {"mI", {{"sa", "-sa"}, {"x", "c/x"}, {"y", "d/y"}}}};
        s.defs = {{"u", "x*(y-d/y)"}, {"v", "y+d/y"}};
        s.expected = {{"lam", {{"u", "u"}, {"v", "v"}}},
                      {"mI", {{"u", "-c*(v^2-4*d)/u"}, {"v", "v"}}}};
    }
    c.steps = {s};
    return c;
}

CaseSpec case_v4a_hml() {
    CaseSpec c;
    c.tag = "v4a-hml";
    c.summary = "V4 (diagonal type), kernel <-lambda>: swapping the "
                "variables carries the action onto the <lambda> case with "
                "c and d exchanged";
    c.params = {"a", "c", "d"};
    StepSpec s;
    s.title = "variable swap";
    s.gens = {F("a"), F("c"), F("d"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {{"mlam", {{"x", "c/x"}, {"y", "-y"}}},
                {"mI", {{"sa", "-sa"}, {"x", "c/x"}, {"y", "d/y"}}}};
    s.defs = {{"X", "y"}, {"Y", "x"}};
    s.expected = {{"mlam", {{"X", "-X"}, {"Y", "c/Y"}}},
                  {"mI", {{"X", "d/X"}, {"Y", "c/Y"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4b_h1() {
    CaseSpec c;
    c.tag = "v4b-h1";
    c.summary = "V4 (swap type), trivial kernel: swap invariants, then a "
                "conic bundle over k(U)";
    c.params = {"a", "b", "c"};
    StepSpec s;
    s.title = "swap invariants and bundle coordinates";
    s.gens = {F("a"), F("b"), F("c"), SQ("sa", "a"), SQ("sb", "b")};
    s.vars = {"x", "y"};
    s.actors = {
        {"tau", {{"sa", "-sa"}, {"x", "y"}, {"y", "x"}}},
        {"mI", {{"sb", "-sb"}, {"x", "c/x"}, {"y", "c/y"}}}};
    s.defs = {{"u", "x+y"},
              {"v", "sa*(x-y)"},
              {"U", "sb*(x+y)/(sa*(x-y))"},
              {"V", "((sb*(x+y)/(sa*(x-y)))^2-1/a)*sa*(x-y)/2"}};
    s.expected = {{"tau", {{"u", "u"}, {"v", "v"}, {"U", "U"}, {"V", "V"}}},
                  {"mI", {{"U", "U"}, {"V", "-c*(U^2-1/a)/V"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4b_hm() {
    CaseSpec c;
    c.tag = "v4b-hm";
    c.summary = "V4 (swap type), kernel <-I>: inversion invariants X, Y and "
                "the explicit rational pair (X, sqrt(a) Y)";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "inversion invariants";
    s.gens = {F("a"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {
        {"tau", {{"sa", "-sa"}, {"x", "y"}, {"y", "x"}}},
        {"mI", {{"x", "c/x"}, {"y", "c/y"}}}};
    s.defs = {{"X", "(x*y+c)/(x+y)"},
              {"Y", "(x*y-c)/(x-y)"},
              {"g1", "(x*y+c)/(x+y)"},
              {"g2", "sa*(x*y-c)/(x-y)"}};
    s.expected = {{"mI", {{"X", "X"}, {"Y", "Y"}}},
                  {"tau", {{"X", "X"}, {"Y", "-Y"}, {"g1", "g1"}, {"g2", "g2"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4b_ht() {
    CaseSpec c;
    c.tag = "v4b-ht";
    c.summary = "V4 (swap type), kernel <tau>: symmetric functions u, v and "
                "the induced purely quasi-monomial inversion";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "symmetric invariants";
    s.gens = {F("a"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {
        {"tau", {{"x", "y"}, {"y", "x"}}},
        {"mI", {{"sa", "-sa"}, {"x", "c/x"}, {"y", "c/y"}}}};
    s.defs = {{"u", "x*y/c"}, {"v", "x+y"}};
    s.expected = {{"tau", {{"u", "u"}, {"v", "v"}}},
                  {"mI", {{"u", "1/u"}, {"v", "v/u"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_v4b_hmt() {
    CaseSpec c;
    c.tag = "v4b-hmt";
    c.summary = "V4 (swap type), kernel <-tau>: explicit invariant pair "
                "(u, v + 4ac/((a u^2 - 1) v))";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "kernel invariants";
    s.gens = {F("a"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {
        {"tau", {{"sa", "-sa"}, {"x", "y"}, {"y", "x"}}},
        {"mI", {{"sa", "-sa"}, {"x", "c/x"}, {"y", "c/y"}}}};
    s.defs = {{"u", "(x+y)/(sa*(x-y))"},
              {"v", "sa*(x-y)"},
              {"g", "sa*(x-y)+4*a*c/((a*((x+y)/(sa*(x-y)))^2-1)*sa*(x-y))"}};
    s.expected = {{"tau", {{"u", "u"}, {"v", "v"}, {"g", "g"}}},
                  {"mI", {{"u", "u"}, {"v", "4*a*c/((a*u^2-1)*v)"}, {"g", "g"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_s3a_absorb() {
    CaseSpec c;
    c.tag = "s3a";
    c.summary = "S3 (plain type): coefficient absorption b -> 1 with c, d, e "
                "rescaled";
    c.params = {"b", "c", "d", "e"};
    StepSpec s;
    s.title = "coefficient absorption";
    s.gens = {F("b"), F("c"), F("d"), F("e")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2", {{"x", "b*y"}, {"y", "c/(x*y)"}}},
                {"tau", {{"x", "d*y"}, {"y", "e*x"}}}};
    s.defs = {{"Y", "b*y"}, {"C", "b^2*c"}, {"D", "d/b"}, {"E", "b*e"}};
    s.expected = {{"rho2", {{"x", "Y"}, {"Y", "C/(x*Y)"}}},
                  {"tau", {{"x", "D*Y"}, {"Y", "E*x"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_s3a_cbrt_k() {
    CaseSpec c;
    c.tag = "s3a-cbrt-k";
    c.summary = "S3 (plain type) with rational cbrt(c): rescaling gives the "
                "purely quasi-monomial S3 action";
    StepSpec s;
    s.title = "rescale by the cube root";
    s.gens = {F("a0"), F("a1"), F("a2"), F("rc")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2",
                 {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}, {"x", "y"},
                  {"y", "rc^3/(x*y)"}}},
                {"tau", {{"a1", "a2"}, {"a2", "a1"}, {"x", "y"}, {"y", "x"}}}};
    s.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                  {"tau", {{"X", "Y"}, {"Y", "X"}}}};
    s.word_checks = {{"tau*rho2*tau", "rho2*rho2"}};
    c.steps = {s};
    return c;
}

CaseSpec case_s3a_cbrt_gal() {
    CaseSpec c;
    c.tag = "s3a-cbrt-gal";
    c.summary = "S3 (plain type) with K = k(omega, cbrt c): root conventions "
                "chosen so the rescaled action is purely quasi-monomial "
                "(the y-coordinate carries an omega twist)";
    c.params = {"c"};
    StepSpec s;
    s.title = "rescale by the cube root";
    s.gens = {OM("w"), F("c"), CB("rc", "c")};
    s.vars = {"x", "y"};
    s.actors = {{"rho2", {{"rc", "w^2*rc"}, {"x", "y"}, {"y", "c/(x*y)"}}},
                {"tau", {{"w", "w^2"}, {"rc", "w^2*rc"}, {"x", "y"}, {"y", "x"}}}};
    s.order_checks = {{"tau", 2}, {"rho2", 3}};
    s.word_checks = {{"tau*rho2*tau", "rho2*rho2"}};
    s.defs = {{"X", "x/rc"}, {"Yw", "w*y/rc"}};
    s.expected = {{"rho2", {{"X", "Yw"}, {"Yw", "1/(X*Yw)"}}},
                  {"tau", {{"X", "Yw"}, {"Yw", "X"}}}};
    c.steps = {s};
    return c;
}

// Steps shared by the three cbrt(c)-outside S3 cases.

StepSpec s3_eigen_step(bool tau_plain_swap, bool tau_fixes_w) {
    // tau_plain_swap: tau acts as X <-> Y; the resulting images of u, v
    // depend on whether tau inverts omega.
    StepSpec s;
    s.title = "omega-eigenbasis";
    s.gens = {OM("w")};
    s.vars = {"X", "Y"};
    ActorSpec rho2{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}};
    ActorSpec tau{"tau", {{"X", "Y"}, {"Y", "X"}}};
    if (!tau_fixes_w) tau.images.push_back({"w", "w^2"});
    ActorSpec phc{"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}};
    s.actors = {rho2, tau, phc};
    s.defs = {{"u", kEigenU}, {"v", kEigenV}};
    s.expected = {{"rho2", {{"u", "w*u"}, {"v", "w^2*v"}}},
                  {"phc", {{"u", "v/u"}, {"v", "1/u"}}}};
    if (tau_fixes_w) {
        s.expected.push_back(
            {"tau",
             {{"u", "w*(v-u^2)/(u*v-1)"}, {"v", "w^2*(u-v^2)/(u*v-1)"}}});
    } else {
        s.expected.push_back(
            {"tau",
             {{"u", "w^2*(u-v^2)/(u*v-1)"}, {"v", "w*(v-u^2)/(u*v-1)"}}});
    }
    (void)tau_plain_swap;
    return s;
}

StepSpec s3_st_step(bool tau_fixes_w) {
    // (s,t) = omega^-1-scaled quotients; tau's image depends on the case.
    StepSpec s;
    s.title = "common-eigenvalue coordinates";
    s.gens = {OM("w")};
    s.vars = {"u", "v"};
    ActorSpec rho2{"rho2", {{"u", "w*u"}, {"v", "w^2*v"}}};
    ActorSpec tau{"tau", {}};
    if (tau_fixes_w) {
        tau.images = {{"u", "w*(v-u^2)/(u*v-1)"}, {"v", "w^2*(u-v^2)/(u*v-1)"}};
    } else {
        tau.images = {{"w", "w^2"},
                      {"u", "w^2*(u-v^2)/(u*v-1)"},
                      {"v", "w*(v-u^2)/(u*v-1)"}};
    }
    ActorSpec phc{"phc", {{"u", "v/u"}, {"v", "1/u"}}};
    s.actors = {rho2, tau, phc};
    s.defs = {{"s", "w^2*(u-v^2)/(v*(u*v-1))"}, {"t", "w^2*u*(u*v-1)/(v-u^2)"}};
    s.expected = {{"rho2", {{"s", "w^2*s"}, {"t", "w^2*t"}}},
                  {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}}};
    if (tau_fixes_w) {
        s.expected.push_back({"tau", {{"s", "1/s"}, {"t", "1/t"}}});
    } else {
        s.expected.push_back({"tau", {{"s", "t"}, {"t", "s"}}});
    }
    return s;
}

CaseSpec case_s3a_w_in_k() {
    CaseSpec c;
    c.tag = "s3a-w-in-k";
    c.summary = "S3 (plain type), cbrt(c) irrational, omega rational: "
                "resolvent descent through (S,T) to the norm-one torus, plus "
                "the non-vanishing branch normal form";
    c.params = {"c"};

    StepSpec s1;
    s1.title = "resolvent coordinates on K";
    s1.gens = {F("a0"), F("a1"), F("a2"), OM("w")};
    s1.actors = {{"rho2", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}}},
                 {"tau", {{"a1", "a2"}, {"a2", "a1"}}}};
    s1.defs = {{"A", "a0+w^2*a1+w*a2"}, {"B", "a0+w*a1+w^2*a2"}};
    s1.expected = {{"rho2", {{"A", "w*A"}, {"B", "w^2*B"}}},
                   {"tau", {{"A", "B"}, {"B", "A"}}}};

    StepSpec s2;
    s2.title = "rescale by cbrt(c)";
    s2.gens = {F("A"), F("B"), OM("w"), F("c"), CB("rc", "c")};
    s2.vars = {"x", "y"};
    s2.actors = {
        {"rho2", {{"A", "w*A"}, {"B", "w^2*B"}, {"x", "y"}, {"y", "c/(x*y)"}}},
        {"tau", {{"A", "B"}, {"B", "A"}, {"x", "y"}, {"y", "x"}}},
        {"phc", {{"rc", "w*rc"}}}};
    s2.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s2.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                   {"tau", {{"X", "Y"}, {"Y", "X"}}},
                   {"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}}};

    StepSpec s3 = s3_eigen_step(true, /*tau_fixes_w=*/true);
    StepSpec s4 = s3_st_step(/*tau_fixes_w=*/true);

    StepSpec s5;
    s5.title = "descend to the kernel-invariant pair";
    s5.gens = {F("A"), F("B"), OM("w")};
    s5.vars = {"s", "t"};
    s5.actors = {
        {"rho2", {{"A", "w*A"}, {"B", "w^2*B"}, {"s", "w^2*s"}, {"t", "w^2*t"}}},
        {"tau", {{"A", "B"}, {"B", "A"}, {"s", "1/s"}, {"t", "1/t"}}},
        {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}}};
    s5.defs = {{"S", "A*s"}, {"T", "A*t"}, {"alpha", "A^3"}, {"bb", "A*B"}};
    s5.expected = {
        {"rho2", {{"S", "S"}, {"T", "T"}}},
        {"tau", {{"S", "bb/S"}, {"T", "bb/T"}, {"alpha", "bb^3/alpha"}}},
        {"phc", {{"S", "T"}, {"T", "alpha/(S*T)"}, {"alpha", "alpha"}}}};

    StepSpec s6;
    s6.title = "normalize to alpha' = (B/A)^3";
    s6.gens = {F("A"), F("B"), OM("w")};
    s6.vars = {"S", "T"};
    s6.actors = {
        {"tau", {{"A", "B"}, {"B", "A"}, {"S", "A*B/S"}, {"T", "A*B/T"}}},
        {"phc", {{"S", "T"}, {"T", "A^3/(S*T)"}}}};
    s6.defs = {{"Sp", "B*S/A^2"}, {"Tp", "B*T/A^2"}, {"ap", "B^3/A^3"}};
    s6.expected = {
        {"tau", {{"Sp", "1/Sp"}, {"Tp", "1/Tp"}, {"ap", "1/ap"}}},
        {"phc", {{"Sp", "Tp"}, {"Tp", "ap/(Sp*Tp)"}, {"ap", "ap"}}}};

    StepSpec s7;
    s7.title = "norm-split coordinates (vanishing-symbol branch)";
    s7.gens = {F("d0"), F("d1"), F("d2"), F("d3"), F("d4"), F("d5")};
    s7.vars = {"Sp", "Tp"};
    s7.actors = {
        {"tau",
         {{"d0", "d3"}, {"d1", "d4"}, {"d2", "d5"}, {"d3", "d0"}, {"d4", "d1"},
          {"d5", "d2"}, {"Sp", "1/Sp"}, {"Tp", "1/Tp"}}},
        {"phc",
         {{"d0", "d1"}, {"d1", "d2"}, {"d2", "d0"}, {"d3", "d4"}, {"d4", "d5"},
          {"d5", "d3"}, {"Sp", "Tp"}, {"Tp", "d0*d1*d2/(Sp*Tp)"}}}};
    s7.defs = {{"p", "Sp/(d0*d2*d4)"},
               {"q", "Tp/(d0*d1*d5)"},
               {"P", "d0*d1*d2*d3*d4*d5"}};
    s7.expected = {{"tau", {{"p", "1/(P*p)"}, {"q", "1/(P*q)"}}},
                   {"phc", {{"p", "q"}, {"q", "1/(P*p*q)"}}}};

    StepSpec s8;
    s8.title = "non-vanishing branch: odd coordinates";
    s8.gens = {F("ap")};
    s8.vars = {"Sp", "Tp"};
    s8.actors = {
        {"tau", {{"ap", "1/ap"}, {"Sp", "1/Sp"}, {"Tp", "1/Tp"}}},
        {"phc", {{"Sp", "Tp"}, {"Tp", "ap/(Sp*Tp)"}}}};
    s8.defs = {{"app", "(ap+1)/(ap-1)"},
               {"Spp", "((Sp+1)/(Sp-1))/((ap+1)/(ap-1))"},
               {"Tpp", "((Tp+1)/(Tp-1))/((ap+1)/(ap-1))"}};
    s8.expected = {
        {"tau", {{"app", "-app"}, {"Spp", "Spp"}, {"Tpp", "Tpp"}}},
        {"phc",
         {{"app", "app"},
          {"Spp", "Tpp"},
          {"Tpp",
           "(1-Spp-Tpp+app^2*Spp*Tpp)/(1-app^2*Spp-app^2*Tpp+app^2*Spp*Tpp)"}}}};

    c.steps = {s1, s2, s3, s4, s5, s6, s7, s8};
    return c;
}

CaseSpec case_s3a_remark() {
    CaseSpec c;
    c.tag = "s3a-remark";
    c.summary = "normal form r1, r2 of the non-vanishing S3 branch: the "
                "twisted order-3 map r2 -> (1 - r1 - r2)/(1 + a r1 r2)";
    StepSpec s;
    s.title = "r-coordinates";
    s.gens = {F("app")};
    s.vars = {"Spp", "Tpp"};
    s.actors = {{"phc",
                 {{"Spp", "Tpp"},
                  {"Tpp",
                   "(1-Spp-Tpp+app^2*Spp*Tpp)/(1-app^2*Spp-app^2*Tpp+app^2*Spp*Tpp)"}}}};
    s.defs = {{"r1", "(Spp-1)/(2*Spp)"},
              {"r2", "(Tpp-1)/(2*Tpp)"},
              {"a", "4/(app^2-1)"}};
    s.expected = {{"phc", {{"r1", "r2"}, {"r2", "(1-r1-r2)/(1+a*r1*r2)"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_s3a_w_quad() {
    CaseSpec c;
    c.tag = "s3a-w-quad";
    c.summary = "S3 (plain type) with K = k(omega, cbrt a): descent through "
                "(S,T) = (alpha s, alpha t) and both symbol branches";
    c.params = {"c"};

    StepSpec s1;
    s1.title = "rescale by cbrt(c)";
    s1.gens = {OM("w"), F("a"), CB("al", "a"), F("c"), CB("rc", "c")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"rho2", {{"al", "w*al"}, {"x", "y"}, {"y", "c/(x*y)"}}},
        {"tau", {{"w", "w^2"}, {"x", "y"}, {"y", "x"}}},
        {"phc", {{"rc", "w*rc"}}}};
    s1.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s1.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                   {"tau", {{"X", "Y"}, {"Y", "X"}}},
                   {"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}}};

    StepSpec s2 = s3_eigen_step(true, /*tau_fixes_w=*/false);
    StepSpec s3 = s3_st_step(/*tau_fixes_w=*/false);

    StepSpec s4;
    s4.title = "descend via S = alpha s, T = alpha t";
    s4.gens = {OM("w"), F("a"), CB("al", "a")};
    s4.vars = {"s", "t"};
    s4.actors = {
        {"rho2", {{"al", "w*al"}, {"s", "w^2*s"}, {"t", "w^2*t"}}},
        {"tau", {{"w", "w^2"}, {"s", "t"}, {"t", "s"}}},
        {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}}};
    s4.defs = {{"S", "al*s"}, {"T", "al*t"}};
    s4.expected = {{"rho2", {{"S", "S"}, {"T", "T"}}},
                   {"tau", {{"S", "T"}, {"T", "S"}}},
                   {"phc", {{"S", "T"}, {"T", "a/(S*T)"}}}};

    StepSpec s5;
    s5.title = "norm-split coordinates (vanishing-symbol branch)";
    s5.gens = {F("d0"), F("d1"), F("d2"), OM("w")};
    s5.vars = {"S", "T"};
    s5.actors = {
        {"tau", {{"d1", "d2"}, {"d2", "d1"}, {"w", "w^2"}, {"S", "T"}, {"T", "S"}}},
        {"phc",
         {{"d0", "d1"}, {"d1", "d2"}, {"d2", "d0"}, {"S", "T"},
          {"T", "d0*d1*d2/(S*T)"}}}};
    s5.defs = {{"p", "S/d1"}, {"q", "T/d2"}};
    s5.expected = {{"tau", {{"p", "q"}, {"q", "p"}}},
                   {"phc", {{"p", "q"}, {"q", "1/(p*q)"}}}};

    StepSpec s6;
    s6.title = "non-vanishing branch: discrete Fourier coordinates";
    s6.gens = {OM("w"), F("a")};
    s6.vars = {"S", "T"};
    s6.actors = {{"tau", {{"w", "w^2"}, {"S", "T"}, {"T", "S"}}},
                 {"phc", {{"S", "T"}, {"T", "a/(S*T)"}}}};
    s6.defs = {{"U", "a/(S*T)"},
               {"Sp", "S+T+a/(S*T)"},
               {"Tp", "w^2*S+w*T+a/(S*T)"},
               {"Up", "w*S+w^2*T+a/(S*T)"}};
    s6.expected = {
        {"tau", {{"U", "U"}, {"Sp", "Sp"}, {"Tp", "Tp"}, {"Up", "Up"}}},
        {"phc",
         {{"U", "S"}, {"Sp", "Sp"}, {"Tp", "w*Tp"}, {"Up", "w^2*Up"}}}};

    c.steps = {s1, s2, s3, s4, s5, s6};
    return c;
}

CaseSpec case_s3a_generic() {
    CaseSpec c;
    c.tag = "s3a-generic";
    c.summary = "S3 (plain type), generic sextic K: the full two-Galois-twist "
                "chain down to the norm-one torus";
    c.params = {"c"};

    StepSpec s1;
    s1.title = "rescale by cbrt(c)";
    s1.gens = {F("a0"), F("a1"), F("a2"), OM("w"), F("c"), CB("rc", "c")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"rho2",
         {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}, {"x", "y"}, {"y", "c/(x*y)"}}},
        {"tau", {{"a1", "a2"}, {"a2", "a1"}, {"x", "y"}, {"y", "x"}}},
        {"phc", {{"rc", "w*rc"}}},
        {"phw", {{"w", "w^2"}}}};
    s1.defs = {{"X", "x/rc"}, {"Y", "y/rc"}};
    s1.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                   {"tau", {{"X", "Y"}, {"Y", "X"}}},
                   {"phc", {{"X", "w^2*X"}, {"Y", "w^2*Y"}}},
                   {"phw", {{"X", "X"}, {"Y", "Y"}}}};

    StepSpec s2 = s3_eigen_step(true, /*tau_fixes_w=*/true);
    s2.actors.push_back({"phw", {{"w", "w^2"}}});
    s2.expected.push_back({"phw", {{"u", "v"}, {"v", "u"}}});

    StepSpec s3 = s3_st_step(/*tau_fixes_w=*/true);
    s3.actors.push_back({"phw", {{"w", "w^2"}, {"u", "v"}, {"v", "u"}}});
    s3.expected.push_back({"phw", {{"s", "1/t"}, {"t", "1/s"}}});

    StepSpec s4;
    s4.title = "resolvent coordinates on K";
    s4.gens = {F("a0"), F("a1"), F("a2"), OM("w")};
    s4.actors = {{"rho2", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a0"}}},
                 {"tau", {{"a1", "a2"}, {"a2", "a1"}}},
                 {"phc", {}},
                 {"phw", {{"w", "w^2"}}}};
    s4.defs = {{"A", "a0+w^2*a1+w*a2"}, {"B", "a0+w*a1+w^2*a2"}};
    s4.expected = {{"rho2", {{"A", "w*A"}, {"B", "w^2*B"}}},
                   {"tau", {{"A", "B"}, {"B", "A"}}},
                   {"phc", {{"A", "A"}, {"B", "B"}}},
                   {"phw", {{"A", "B"}, {"B", "A"}}}};

    StepSpec s5;
    s5.title = "descend to the kernel-invariant pair";
    s5.gens = {F("A"), F("B"), OM("w")};
    s5.vars = {"s", "t"};
    s5.actors = {
        {"rho2", {{"A", "w*A"}, {"B", "w^2*B"}, {"s", "w^2*s"}, {"t", "w^2*t"}}},
        {"tau", {{"A", "B"}, {"B", "A"}, {"s", "1/s"}, {"t", "1/t"}}},
        {"phc", {{"s", "t"}, {"t", "1/(s*t)"}}},
        {"phw", {{"w", "w^2"}, {"A", "B"}, {"B", "A"}, {"s", "1/t"}, {"t", "1/s"}}}};
    s5.defs = {{"S", "A*s"}, {"T", "A*t"}, {"alpha", "A^3"}, {"bb", "A*B"}};
    s5.expected = {
        {"rho2", {{"S", "S"}, {"T", "T"}, {"alpha", "alpha"}}},
        {"tau", {{"S", "bb/S"}, {"T", "bb/T"}, {"alpha", "bb^3/alpha"}}},
        {"phc", {{"S", "T"}, {"T", "alpha/(S*T)"}, {"alpha", "alpha"}}},
        {"phw", {{"S", "bb/T"}, {"T", "bb/S"}, {"alpha", "bb^3/alpha"}}}};

    StepSpec s6;
    s6.title = "normalize to alpha' = (B/A)^3";
    s6.gens = {F("A"), F("B"), OM("w")};
    s6.vars = {"S", "T"};
    s6.actors = {
        {"tau", {{"A", "B"}, {"B", "A"}, {"S", "A*B/S"}, {"T", "A*B/T"}}},
        {"phc", {{"S", "T"}, {"T", "A^3/(S*T)"}}},
        {"phw",
         {{"w", "w^2"}, {"A", "B"}, {"B", "A"}, {"S", "A*B/T"}, {"T", "A*B/S"}}}};
    s6.defs = {{"Sp", "B*S/A^2"}, {"Tp", "B*T/A^2"}, {"ap", "B^3/A^3"}};
    s6.expected = {
        {"tau", {{"Sp", "1/Sp"}, {"Tp", "1/Tp"}, {"ap", "1/ap"}}},
        {"phc", {{"Sp", "Tp"}, {"Tp", "ap/(Sp*Tp)"}, {"ap", "ap"}}},
        {"phw", {{"Sp", "1/Tp"}, {"Tp", "1/Sp"}, {"ap", "1/ap"}}}};

    StepSpec s7;
    s7.title = "norm-split coordinates (vanishing-symbol branch)";
    s7.gens = {F("d0"), F("d1"), F("d2"), F("d3"), F("d4"), F("d5"), OM("w")};
    s7.vars = {"Sp", "Tp"};
    s7.actors = {
        {"tau",
         {{"d0", "d3"}, {"d1", "d4"}, {"d2", "d5"}, {"d3", "d0"}, {"d4", "d1"},
          {"d5", "d2"}, {"Sp", "1/Sp"}, {"Tp", "1/Tp"}}},
        {"phc",
         {{"d0", "d1"}, {"d1", "d2"}, {"d2", "d0"}, {"d3", "d4"}, {"d4", "d5"},
          {"d5", "d3"}, {"Sp", "Tp"}, {"Tp", "d0*d1*d2/(Sp*Tp)"}}},
        {"phw",
         {{"d0", "d3"}, {"d1", "d5"}, {"d2", "d4"}, {"d3", "d0"}, {"d4", "d2"},
          {"d5", "d1"}, {"w", "w^2"}, {"Sp", "1/Tp"}, {"Tp", "1/Sp"}}}};
    s7.defs = {{"p", "Sp/(d0*d2*d4)"},
               {"q", "Tp/(d0*d1*d5)"},
               {"P", "d0*d1*d2*d3*d4*d5"}};
    s7.expected = {{"tau", {{"p", "1/(P*p)"}, {"q", "1/(P*q)"}}},
                   {"phc", {{"p", "q"}, {"q", "1/(P*p*q)"}}},
                   {"phw", {{"p", "1/(P*q)"}, {"q", "1/(P*p)"}}}};

    c.steps = {s1, s2, s3, s4, s5, s6, s7};
    return c;
}

CaseSpec case_s3a_kernel() {
    CaseSpec c;
    c.tag = "s3a-kernel";
    c.summary = "S3 (plain type), kernel <rho^2>: degree-4 cycle invariants "
                "X, Y with tau swapping them, fixed pair (X+Y, sqrt(a)(X-Y))";
    c.params = {"a", "c"};
    StepSpec s;
    s.title = "cycle invariants";
    s.gens = {F("a"), F("c"), SQ("sa", "a")};
    s.vars = {"x", "y"};
    s.actors = {
        {"rho2", {{"x", "y"}, {"y", "c/(x*y)"}}},
        {"tau", {{"sa", "-sa"}, {"x", "y"}, {"y", "x"}}}};
    s.defs = {{"X", cycle_inv_x()},
              {"Y", cycle_inv_y()},
              {"g1", cycle_inv_x() + "+" + cycle_inv_y()},
              {"g2", "sa*(" + cycle_inv_x() + "-" + cycle_inv_y() + ")"}};
    s.expected = {{"rho2", {{"X", "X"}, {"Y", "Y"}, {"g1", "g1"}, {"g2", "g2"}}},
                  {"tau", {{"X", "Y"}, {"Y", "X"}, {"g1", "g1"}, {"g2", "g2"}}}};
    c.steps = {s};
    return c;
}

CaseSpec case_s3b() {
    CaseSpec c;
    c.tag = "s3b";
    c.summary = "S3 (inverting type): absorption, the forced relation "
                "c^2 = d^3, and the purely quasi-monomial normal form";
    StepSpec s1;
    s1.title = "coefficient absorption";
    s1.gens = {F("b"), F("c"), F("d"), F("e")};
    s1.vars = {"x", "y"};
    s1.actors = {{"rho2", {{"x", "b*y"}, {"y", "c/(x*y)"}}},
                 {"mtau", {{"x", "d/y"}, {"y", "e/x"}}}};
    s1.defs = {{"Y", "b*y"}, {"C", "b^2*c"}, {"D", "b*d"}, {"E", "b*e"}};
    s1.expected = {{"rho2", {{"x", "Y"}, {"Y", "C/(x*Y)"}}},
                   {"mtau", {{"x", "D/Y"}, {"Y", "E/x"}}}};

    StepSpec s2;
    s2.title = "normal form under c^2 = d^3";
    s2.gens = {F("ee")}; // c = ee^3, d = ee^2
    s2.vars = {"x", "y"};
    s2.actors = {{"rho2", {{"x", "y"}, {"y", "ee^3/(x*y)"}}},
                 {"mtau", {{"x", "ee^2/y"}, {"y", "ee^2/x"}}}};
    s2.order_checks = {{"rho2", 3}, {"mtau", 2}};
    s2.word_checks = {{"mtau*rho2*mtau", "rho2*rho2"}};
    s2.defs = {{"X", "x/ee"}, {"Y", "y/ee"}};
    s2.expected = {{"rho2", {{"X", "Y"}, {"Y", "1/(X*Y)"}}},
                   {"mtau", {{"X", "1/Y"}, {"Y", "1/X"}}}};
    c.steps = {s1, s2};
    return c;
}

// D4 family ------------------------------------------------------------------

CaseSpec case_d4_h1_k(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-h1-k-p" : "d4-h1-k-m";
    c.summary = eps_plus
                    ? "D4, trivial kernel, sqrt(c) rational, swap sign +1: "
                      "double swap invariants"
                    : "D4, trivial kernel, sqrt(c) rational, swap sign -1: "
                      "twisted involution on (S,T) via gamma";
    StepSpec s1;
    s1.title = "Moebius twist";
    s1.gens = {F("al"), F("be"), F("rc")};
    s1.vars = {"x", "y"};
    ActorSpec sig{"sig", {{"al", "be"}, {"be", "-al"}, {"x", "y"}, {"y", "rc^2/x"}}};
    ActorSpec tau{"tau", {{"al", "be"}, {"be", "al"}}};
    if (eps_plus) {
        tau.images.push_back({"x", "y"});
        tau.images.push_back({"y", "x"});
    } else {
        tau.images.push_back({"x", "-y"});
        tau.images.push_back({"y", "-x"});
    }
    s1.actors = {sig, tau};
    s1.defs = {{"u", "al*" + std::string(kMoebX)}, {"v", "be*" + std::string(kMoebY)}};
    s1.expected = {{"sig", {{"u", "v"}, {"v", "u"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"u", "v"}, {"v", "u"}}});
    else
        s1.expected.push_back({"tau", {{"u", "be^2/v"}, {"v", "al^2/u"}}});

    if (eps_plus) {
        StepSpec s2;
        s2.title = "square coordinates and swap invariants";
        s2.gens = {F("al"), F("be")};
        s2.vars = {"u", "v"};
        s2.actors = {
            {"sig", {{"al", "be"}, {"be", "-al"}, {"u", "v"}, {"v", "u"}}},
            {"tau", {{"al", "be"}, {"be", "al"}, {"u", "v"}, {"v", "u"}}}};
        s2.defs = {{"A", "al^2"},
                   {"B", "be^2"},
                   {"a", "al^2+be^2"},
                   {"b", "(al^2-be^2)^2"},
                   {"U", "u+v"},
                   {"V", "(al^2-be^2)*(u-v)"}};
        s2.expected = {
            {"sig", {{"A", "B"}, {"B", "A"}, {"a", "a"}, {"b", "b"}, {"U", "U"}, {"V", "V"}}},
            {"tau", {{"a", "a"}, {"b", "b"}, {"U", "U"}, {"V", "V"}}}};
        c.steps = {s1, s2};
        return c;
    }

    StepSpec s2;
    s2.title = "product/ratio coordinates";
    s2.gens = {F("al"), F("be")};
    s2.vars = {"u", "v"};
    s2.actors = {
        {"sig", {{"al", "be"}, {"be", "-al"}, {"u", "v"}, {"v", "u"}}},
        {"tau", {{"al", "be"}, {"be", "al"}, {"u", "be^2/v"}, {"v", "al^2/u"}}}};
    s2.defs = {{"A", "al*be"}, {"B", "al/be"}};
    s2.expected = {
        {"sig", {{"A", "-A"}, {"B", "-1/B"}}},
        {"tau", {{"A", "A"}, {"B", "1/B"}, {"u", "A/(B*v)"}, {"v", "A*B/u"}}}};

    StepSpec s3;
    s3.title = "sigma*tau involution on (U,V)";
    s3.gens = {F("A"), F("B")};
    s3.vars = {"u", "v"};
    s3.actors = {
        {"sig", {{"A", "-A"}, {"B", "-1/B"}, {"u", "v"}, {"v", "u"}}},
        {"tau", {{"A", "A"}, {"B", "1/B"}, {"u", "A/(B*v)"}, {"v", "A*B/u"}}}};
    s3.defs = {{"a", "A*(B+1/B)"},
               {"g", "B-1/B"},
               {"U", "u+v"},
               {"V", "A*(u-v)"}};
    s3.expected = {
        {"sig*tau",
         {{"a", "a"},
          {"g", "-g"},
          {"U", "2*a^2*(a*U-g*V)/(a^2*U^2-(g^2+4)*V^2)"},
          {"V",
           "-2*a^3*(a*g*U-(g^2+4)*V)/((g^2+4)*(a^2*U^2-(g^2+4)*V^2))"}}}};

    StepSpec s4;
    s4.title = "twisted-involution normal form";
    s4.gens = {F("a"), F("g")};
    s4.vars = {"U", "V"};
    s4.actors = {{"st",
                  {{"g", "-g"},
                   {"U", "2*a^2*(a*U-g*V)/(a^2*U^2-(g^2+4)*V^2)"},
                   {"V",
                    "-2*a^3*(a*g*U-(g^2+4)*V)/((g^2+4)*(a^2*U^2-(g^2+4)*V^2))"}}}};
    s4.defs = {{"S", "(g^2+4)*(a*U-g*V)/(2*a*U)"}, {"T", "a*g/U"}};
    s4.expected = {{"st",
                    {{"S", "(g^2+4)/S"},
                     {"T", "a*(S+(g^2+4)/S-g^2-4)/T"}}}};

    c.steps = {s1, s2, s3, s4};
    return c;
}

// D4 cases where sqrt(c) lies in one of the three quadratic subfields.
CaseSpec case_d4_h1_subfield(const char* tag, const char* summary,
                             bool sigma_moves_rc, bool tau_moves_rc,
                             bool second_twisted, bool eps_plus) {
    CaseSpec c;
    c.tag = tag;
    c.summary = summary;
    StepSpec s;
    s.title = "Moebius twist";
    s.gens = {F("al"), F("be"), F("c"), SQ("rc", "c")};
    s.vars = {"x", "y"};
    ActorSpec sig{"sig", {{"al", "be"}, {"be", "-al"}, {"x", "y"}, {"y", "c/x"}}};
    if (sigma_moves_rc) sig.images.push_back({"rc", "-rc"});
    ActorSpec tau{"tau", {{"al", "be"}, {"be", "al"}}};
    if (tau_moves_rc) tau.images.push_back({"rc", "-rc"});
    tau.images.push_back({"x", eps_plus ? "y" : "-y"});
    tau.images.push_back({"y", eps_plus ? "x" : "-x"});
    s.actors = {sig, tau};

    const std::string u = "al*" + std::string(kMoebX);
    const std::string second =
        second_twisted ? "be*(y-rc)/(y+rc)" : "be*" + std::string(kMoebY);
    const char* vn = second_twisted ? "vp" : "v";
    s.defs = {{"u", u}, {vn, second}};

    // sigma always swaps the pair.  tau lands on beta*Y when exactly one of
    // {eps = -1, tau moves rc} holds, and that matches the second coordinate
    // exactly when it is the untwisted beta*Y.
    s.expected = {{"sig", {{"u", vn}, {vn, "u"}}}};
    bool tau_hits_plain = (eps_plus != tau_moves_rc);
    bool tau_swaps = (tau_hits_plain == !second_twisted);
    if (tau_swaps)
        s.expected.push_back({"tau", {{"u", vn}, {vn, "u"}}});
    else
        s.expected.push_back(
            {"tau", {{"u", std::string("be^2/") + vn}, {vn, "al^2/u"}}});
    c.steps = {s};
    return c;
}

CaseSpec case_d4_h1_out(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-h1-out-p" : "d4-h1-out-m";
    c.summary = eps_plus
                    ? "D4, trivial kernel, sqrt(c) outside K, swap sign +1: "
                      "Galois involution on (U,V), then on (s,t)"
                    : "D4, trivial kernel, sqrt(c) outside K, swap sign -1: "
                      "gamma-twisted involution on (U,V), then on (s,t)";

    StepSpec s1;
    s1.title = "Moebius twist with Galois conjugation";
    s1.gens = {F("al"), F("be"), F("c"), SQ("rc", "c")};
    s1.vars = {"x", "y"};
    ActorSpec sig{"sig", {{"al", "be"}, {"be", "-al"}, {"x", "y"}, {"y", "c/x"}}};
    ActorSpec tau{"tau", {{"al", "be"}, {"be", "al"}}};
    tau.images.push_back({"x", eps_plus ? "y" : "-y"});
    tau.images.push_back({"y", eps_plus ? "x" : "-x"});
    ActorSpec phc{"phc", {{"rc", "-rc"}}};
    s1.actors = {sig, tau, phc};
    s1.defs = {{"u", "al*" + std::string(kMoebX)},
               {"v", "be*" + std::string(kMoebY)}};
    s1.expected = {{"sig", {{"u", "v"}, {"v", "u"}}},
                   {"phc", {{"u", "al^2/u"}, {"v", "be^2/v"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"u", "v"}, {"v", "u"}}});
    else
        s1.expected.push_back({"tau", {{"u", "be^2/v"}, {"v", "al^2/u"}}});

    if (eps_plus) {
        StepSpec s2;
        s2.title = "involution on the double-swap invariants";
        s2.gens = {F("al"), F("be")};
        s2.vars = {"u", "v"};
        s2.actors = {{"phc", {{"u", "al^2/u"}, {"v", "be^2/v"}}}};
        s2.defs = {{"a", "al^2+be^2"},
                   {"b", "(al^2-be^2)^2"},
                   {"U", "u+v"},
                   {"V", "(al^2-be^2)*(u-v)"}};
        s2.expected = {{"phc",
                        {{"U", "2*b*(a*U-V)/(b*U^2-V^2)"},
                         {"V", "2*b*(b*U-a*V)/(b*U^2-V^2)"}}}};

        StepSpec s3;
        s3.title = "twisted-involution normal form";
        s3.gens = {F("a"), F("b")};
        s3.vars = {"U", "V"};
        s3.actors = {{"phc",
                      {{"U", "2*b*(a*U-V)/(b*U^2-V^2)"},
                       {"V", "2*b*(b*U-a*V)/(b*U^2-V^2)"}}}};
        s3.defs = {{"s", "(b*U-a*V)/V"}, {"t", "(b*U^2-V^2)/(b*U-a*V)"}};
        s3.expected = {{"phc",
                        {{"s", "(a^2-b)/s"},
                         {"t", "(2*(s+(a^2-b)/s)+4*a)/t"}}}};
        c.steps = {s1, s2, s3};
        return c;
    }

    StepSpec s2;
    s2.title = "C-coordinates fixed by the composite twist";
    s2.gens = {F("al"), F("be"), F("c"), SQ("rc", "c")};
    s2.vars = {"u", "v"};
    s2.actors = {
        {"sig", {{"al", "be"}, {"be", "-al"}, {"u", "v"}, {"v", "u"}}},
        {"tau", {{"al", "be"}, {"be", "al"}, {"u", "be^2/v"}, {"v", "al^2/u"}}},
        {"phc", {{"rc", "-rc"}, {"u", "al^2/u"}, {"v", "be^2/v"}}}};
    s2.defs = {{"A", "al^2"},
               {"B", "be^2"},
               {"C", "al*be*rc"},
               {"a", "al^2+be^2"},
               {"b", "(al^2-be^2)^2"},
               {"g", "2*(al^2-be^2)*al*be*rc"}};
    s2.expected = {
        {"sig", {{"A", "B"}, {"B", "A"}, {"C", "-C"}}},
        {"tau", {{"A", "B"}, {"B", "A"}, {"C", "C"}}},
        {"sig*tau*phc",
         {{"al", "-al"}, {"be", "be"}, {"rc", "-rc"}, {"u", "u"}, {"v", "v"}}}};
    s2.equalities = {{"g^2", "b*rc^2*(a^2-b)"}};

    StepSpec s3;
    s3.title = "gamma-twisted involution on (U,V)";
    s3.gens = {F("A"), F("B"), F("C")};
    s3.vars = {"u", "v"};
    s3.actors = {
        {"sig", {{"A", "B"}, {"B", "A"}, {"C", "-C"}, {"u", "v"}, {"v", "u"}}},
        {"tau", {{"A", "B"}, {"B", "A"}, {"u", "B/v"}, {"v", "A/u"}}}};
    s3.defs = {{"a", "A+B"},
               {"b", "(A-B)^2"},
               {"g", "2*(A-B)*C"},
               {"U", "u+v"},
               {"V", "(A-B)*(u-v)"}};
    s3.expected = {
        {"sig", {{"g", "g"}, {"U", "U"}, {"V", "V"}}},
        {"tau",
         {{"g", "-g"},
          {"U", "2*b*(a*U-V)/(b*U^2-V^2)"},
          {"V", "2*b*(b*U-a*V)/(b*U^2-V^2)"}}}};

    StepSpec s4;
    s4.title = "twisted-involution normal form";
    s4.gens = {F("a"), F("b"), F("g")};
    s4.vars = {"U", "V"};
    s4.actors = {{"tau",
                  {{"g", "-g"},
                   {"U", "2*b*(a*U-V)/(b*U^2-V^2)"},
                   {"V", "2*b*(b*U-a*V)/(b*U^2-V^2)"}}}};
    s4.defs = {{"s", "(b*U-a*V)/V"}, {"t", "(b*U^2-V^2)/(b*U-a*V)"}};
    s4.expected = {{"tau",
                    {{"s", "(a^2-b)/s"},
                     {"t", "(2*(s+(a^2-b)/s)+4*a)/t"}}}};

    c.steps = {s1, s2, s3, s4};
    return c;
}

CaseSpec case_d4_hm(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-hm-p" : "d4-hm-m";
    c.summary = "D4, kernel <-I>: inversion invariants X, Y, then the "
                "sqrt(b)-twisted pair (S,T) with two plain conics";
    c.params = {"a", "b", "c"};
    const char* ex = eps_plus ? "x" : "-x";
    const char* ey = eps_plus ? "y" : "-y";

    StepSpec s1;
    s1.title = "inversion invariants";
    s1.gens = {F("a"), F("b"), F("c"), SQ("sa", "a"), SQ("sb", "b")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"sig", {{"sa", "-sa"}, {"x", "y"}, {"y", "c/x"}}},
        {"tau", {{"sb", "-sb"}, {"x", ey}, {"y", ex}}}};
    s1.defs = {{"X", "(x*y+c)/(x+y)"}, {"Y", "(x*y-c)/(x-y)"}};
    s1.expected = {{"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"X", "X"}, {"Y", "-Y"}}});
    else
        s1.expected.push_back({"tau", {{"X", "-X"}, {"Y", "Y"}}});

    StepSpec s2;
    s2.title = "descend through the sqrt(b) twist";
    s2.gens = {F("a"), F("b"), F("c"), SQ("sa", "a"), SQ("sb", "b")};
    s2.vars = {"X", "Y"};
    if (eps_plus) {
        s2.actors = {
            {"sig", {{"sa", "-sa"}, {"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"sb", "-sb"}, {"X", "X"}, {"Y", "-Y"}}}};
        s2.defs = {{"S", "X"}, {"T", "sb*Y"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "c/S"}, {"T", "-b*c/T"}}}};
    } else {
        s2.actors = {
            {"sig", {{"sa", "-sa"}, {"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"sb", "-sb"}, {"X", "-X"}, {"Y", "Y"}}}};
        s2.defs = {{"S", "sb*X"}, {"T", "Y"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "b*c/S"}, {"T", "-c/T"}}}};
    }
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_d4_hmts(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-hmts-p" : "d4-hmts-m";
    c.summary = "D4, kernel <-I, tau sigma>: second inversion-invariant layer "
                "(S,T) on which sigma and tau agree, explicit rational pair";
    c.params = {"a", "c"};
    const char* ex = eps_plus ? "x" : "-x";
    const char* ey = eps_plus ? "y" : "-y";
    const std::string ec = eps_plus ? "c" : "-c";

    StepSpec s1;
    s1.title = "inversion invariants";
    s1.gens = {F("a"), F("c"), SQ("sa", "a")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"sig", {{"sa", "-sa"}, {"x", "y"}, {"y", "c/x"}}},
        {"tau", {{"sa", "-sa"}, {"x", ey}, {"y", ex}}}};
    s1.defs = {{"X", "(x*y+c)/(x+y)"}, {"Y", "(x*y-c)/(x-y)"}};
    s1.expected = {{"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}},
                   {"tau*sig",
                    {{"X", "(" + ec + ")/X"}, {"Y", "(" + ec + ")/Y"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"X", "X"}, {"Y", "-Y"}}});
    else
        s1.expected.push_back({"tau", {{"X", "-X"}, {"Y", "Y"}}});

    StepSpec s2;
    s2.title = "second inversion-invariant layer";
    s2.gens = {F("a"), F("c"), SQ("sa", "a")};
    s2.vars = {"X", "Y"};
    const char* tX = eps_plus ? "X" : "-X";
    const char* tY = eps_plus ? "-Y" : "Y";
    s2.actors = {
        {"sig", {{"sa", "-sa"}, {"X", "c/X"}, {"Y", "-c/Y"}}},
        {"tau", {{"sa", "-sa"}, {"X", tX}, {"Y", tY}}}};
    const std::string S = "(X*Y+(" + ec + "))/(X+Y)";
    const std::string T = "(X*Y-(" + ec + "))/(X-Y)";
    const std::string mE = eps_plus ? "-" : ""; // -eps
    s2.defs = {{"S", S},
               {"T", T},
               {"g1", S + "-(" + (eps_plus ? std::string("1") : std::string("-1")) +
                          ")*(" + T + ")"},
               {"g2", "sa*(" + S + "+(" + (eps_plus ? std::string("1") : std::string("-1")) +
                          ")*(" + T + "))"}};
    s2.expected = {
        {"sig", {{"S", mE + "T"}, {"T", mE + "S"}, {"g1", "g1"}, {"g2", "g2"}}},
        {"tau", {{"S", mE + "T"}, {"T", mE + "S"}, {"g1", "g1"}, {"g2", "g2"}}}};
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_d4_hmt(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-hmt-p" : "d4-hmt-m";
    c.summary = "D4, kernel <-I, tau>: squared coordinate kills the residual "
                "swap, leaving one conic";
    c.params = {"a", "c"};
    const char* ex = eps_plus ? "x" : "-x";
    const char* ey = eps_plus ? "y" : "-y";

    StepSpec s1;
    s1.title = "inversion invariants";
    s1.gens = {F("a"), F("c"), SQ("sa", "a")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"sig", {{"sa", "-sa"}, {"x", "y"}, {"y", "c/x"}}},
        {"tau", {{"x", ey}, {"y", ex}}}};
    s1.defs = {{"X", "(x*y+c)/(x+y)"}, {"Y", "(x*y-c)/(x-y)"}};
    s1.expected = {{"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"X", "X"}, {"Y", "-Y"}}});
    else
        s1.expected.push_back({"tau", {{"X", "-X"}, {"Y", "Y"}}});

    StepSpec s2;
    s2.title = "square away the residual sign";
    s2.gens = {F("a"), F("c"), SQ("sa", "a")};
    s2.vars = {"X", "Y"};
    if (eps_plus) {
        s2.actors = {
            {"sig", {{"sa", "-sa"}, {"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"X", "X"}, {"Y", "-Y"}}}};
        s2.defs = {{"S", "X"}, {"T", "Y^2/c"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "c/S"}, {"T", "1/T"}}}};
    } else {
        s2.actors = {
            {"sig", {{"sa", "-sa"}, {"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"X", "-X"}, {"Y", "Y"}}}};
        s2.defs = {{"S", "X^2/c"}, {"T", "Y"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "1/S"}, {"T", "-c/T"}}}};
    }
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_d4_hs(bool eps_plus) {
    CaseSpec c;
    c.tag = eps_plus ? "d4-hs-p" : "d4-hs-m";
    c.summary = "D4, kernel <sigma>: sqrt(a) twist leaves a twisted "
                "involution handled by the x-dependent-b involution lemma";
    c.params = {"a", "c"};
    const char* ex = eps_plus ? "x" : "-x";
    const char* ey = eps_plus ? "y" : "-y";

    StepSpec s1;
    s1.title = "inversion invariants";
    s1.gens = {F("a"), F("c"), SQ("sa", "a")};
    s1.vars = {"x", "y"};
    s1.actors = {
        {"sig", {{"x", "y"}, {"y", "c/x"}}},
        {"tau", {{"sa", "-sa"}, {"x", ey}, {"y", ex}}}};
    s1.defs = {{"X", "(x*y+c)/(x+y)"}, {"Y", "(x*y-c)/(x-y)"}};
    s1.expected = {{"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}}};
    if (eps_plus)
        s1.expected.push_back({"tau", {{"X", "X"}, {"Y", "-Y"}}});
    else
        s1.expected.push_back({"tau", {{"X", "-X"}, {"Y", "Y"}}});

    StepSpec s2;
    s2.title = "sqrt(a) twist";
    s2.gens = {F("a"), F("c"), SQ("sa", "a")};
    s2.vars = {"X", "Y"};
    if (eps_plus) {
        s2.actors = {
            {"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"sa", "-sa"}, {"X", "X"}, {"Y", "-Y"}}}};
        s2.defs = {{"S", "X"}, {"T", "sa*Y"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "c/S"}, {"T", "-a*c/T"}}}};
    } else {
        s2.actors = {
            {"sig", {{"X", "c/X"}, {"Y", "-c/Y"}}},
            {"tau", {{"sa", "-sa"}, {"X", "-X"}, {"Y", "Y"}}}};
        s2.defs = {{"S", "sa*X"}, {"T", "Y"}};
        s2.expected = {{"tau", {{"S", "S"}, {"T", "T"}}},
                       {"sig", {{"S", "a*c/S"}, {"T", "-c/T"}}}};
    }
    c.steps = {s1, s2};
    return c;
}

CaseSpec case_d6() {
    CaseSpec c;
    c.tag = "d6";
    c.summary = "D6: absorption to d = e = 1, the forced relation c = 1/b^2, "
                "and the purely quasi-monomial normal form (the rescaled "
                "rho sends Y to 1/X)";
    StepSpec s1;
    s1.title = "coefficient absorption";
    s1.gens = {F("b"), F("c"), F("d"), F("e")};
    s1.vars = {"x", "y"};
    s1.actors = {{"rho", {{"x", "b*x*y"}, {"y", "c/x"}}},
                 {"tau", {{"x", "d*y"}, {"y", "e*x"}}}};
    s1.defs = {{"Y", "d*y"}, {"B", "b/d"}, {"C", "c*d"}};
    s1.expected = {{"rho", {{"x", "B*x*Y"}, {"Y", "C/x"}}},
                   {"tau", {{"x", "Y"}, {"Y", "d*e*x"}}}};

    StepSpec s2;
    s2.title = "normal form under c = 1/b^2";
    s2.gens = {F("b")};
    s2.vars = {"x", "y"};
    s2.actors = {{"rho", {{"x", "b*x*y"}, {"y", "1/(b^2*x)"}}},
                 {"tau", {{"x", "y"}, {"y", "x"}}}};
    s2.order_checks = {{"rho", 6}, {"tau", 2}};
    s2.word_checks = {{"tau*rho*tau", "rho*rho*rho*rho*rho"}};
    s2.defs = {{"X", "b*x"}, {"Y", "b*y"}};
    s2.expected = {{"rho", {{"X", "X*Y"}, {"Y", "1/X"}}},
                   {"tau", {{"X", "Y"}, {"Y", "X"}}}};
    c.steps = {s1, s2};
    return c;
}

std::vector<CaseSpec> build_registry() {
    std::vector<CaseSpec> v;
    v.push_back(case_c2_1());
    v.push_back(case_c2_2());
    v.push_back(case_c2_3());
    v.push_back(case_c3_absorb());
    v.push_back(case_c3_omega());
    v.push_back(case_c3_cbrt());
    v.push_back(case_c3_generic());
    v.push_back(case_c4_absorb());
    v.push_back(case_c4_k());
    v.push_back(case_c4_quad());
    v.push_back(case_c4_out());
    v.push_back(case_c4_kernel());
    v.push_back(case_c6());
    v.push_back(case_v4a_h1());
    v.push_back(case_v4a_hm());
    v.push_back(case_v4a_hl(true));
    v.push_back(case_v4a_hl(false));
    v.push_back(case_v4a_hml());
    v.push_back(case_v4b_h1());
    v.push_back(case_v4b_hm());
    v.push_back(case_v4b_ht());
    v.push_back(case_v4b_hmt());
    v.push_back(case_s3a_absorb());
    v.push_back(case_s3a_cbrt_k());
    v.push_back(case_s3a_cbrt_gal());
    v.push_back(case_s3a_w_in_k());
    v.push_back(case_s3a_remark());
    v.push_back(case_s3a_w_quad());
    v.push_back(case_s3a_generic());
    v.push_back(case_s3a_kernel());
    v.push_back(case_s3b());
    v.push_back(case_d4_h1_k(true));
    v.push_back(case_d4_h1_k(false));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-s-p",
        "D4, trivial kernel, sqrt(c) in the sigma-fixed quadratic, swap sign +1",
        /*sigma_moves_rc=*/false, /*tau_moves_rc=*/true,
        /*second_twisted=*/false, /*eps_plus=*/true));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-s-m",
        "D4, trivial kernel, sqrt(c) in the sigma-fixed quadratic, swap sign -1",
        false, true, false, false));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-t-p",
        "D4, trivial kernel, sqrt(c) in the tau-fixed quadratic, swap sign +1",
        true, false, true, true));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-t-m",
        "D4, trivial kernel, sqrt(c) in the tau-fixed quadratic, swap sign -1",
        true, false, true, false));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-st-p",
        "D4, trivial kernel, sqrt(c) in the sigma-tau-fixed quadratic, swap sign +1",
        true, true, true, true));
    v.push_back(case_d4_h1_subfield(
        "d4-h1-st-m",
        "D4, trivial kernel, sqrt(c) in the sigma-tau-fixed quadratic, swap sign -1",
        true, true, true, false));
    v.push_back(case_d4_h1_out(true));
    v.push_back(case_d4_h1_out(false));
    v.push_back(case_d4_hm(true));
    v.push_back(case_d4_hm(false));
    v.push_back(case_d4_hmts(true));
    v.push_back(case_d4_hmts(false));
    v.push_back(case_d4_hmt(true));
    v.push_back(case_d4_hmt(false));
    v.push_back(case_d4_hs(true));
    v.push_back(case_d4_hs(false));
    v.push_back(case_d6());
    return v;
}

} // namespace

const std::vector<CaseSpec>& case_registry() {
    static const std::vector<CaseSpec> registry = build_registry();
    return registry;
}

} // namespace qmrat
