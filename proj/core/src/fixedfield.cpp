#include "qmrat/fixedfield.hpp"

#include <sstream>

#include "qmrat/error.hpp"

namespace qmrat {

// ---------------------------------------------------------------------------
// Lemma bases
// ---------------------------------------------------------------------------

namespace {

ParamMap make_params(std::initializer_list<std::pair<const char*, std::optional<Rat>>> vals) {
    ParamMap m;
    for (const auto& [name, v] : vals)
        if (v) m.emplace(name, *v);
    return m;
}

void require_invariant(const RatFunc& f, const Substitution& s, const std::string& what) {
    if (!rf_equal(substitute(f, s), f))
        fail(ErrorKind::VerificationFailure, what + " is not invariant");
}

} // namespace

GeneratorPair lemma21_basis(const std::optional<Rat>& a) {
    if (a && *a == 0) fail(ErrorKind::DegenerateParameters, "a must be nonzero");
    auto t = std::make_shared<TowerSpec>();
    ParamMap pm = make_params({{"a", a}});
    if (!a) t->add_free("a");
    t->add_var("x");
    t->add_var("y");

    auto E = [&](const char* s) { return parse_expr(*t, s, &pm); };
    RatFunc s_gen = E("(x*y+a)/(x+y)");
    RatFunc t_gen = E("(x*y-a)/(x-y)");

    Substitution inv(*t);
    inv.set("x", E("a/x")).set("y", E("a/y"));
    inv.validate();
    require_invariant(s_gen, inv, "s");
    require_invariant(t_gen, inv, "t");

    GeneratorPair p;
    p.field = t;
    p.u = s_gen;
    p.v = t_gen;
    p.invariant_under = "x -> a/x, y -> a/y";
    p.independent = jacobian_independent(p.u, p.v);
    if (!p.independent) fail(ErrorKind::VerificationFailure, "pair is dependent");
    return p;
}

GeneratorPair lemma22_basis(const std::optional<Rat>& a, const std::optional<Rat>& c,
                            const std::optional<Rat>& d) {
    if (a && *a == 0) fail(ErrorKind::DegenerateParameters, "a must be nonzero");
    if (c && d && *c == 0 && *d == 0)
        fail(ErrorKind::DegenerateParameters, "(c,d) = (0,0) is degenerate");
    auto t = std::make_shared<TowerSpec>();
    ParamMap pm = make_params({{"a", a}, {"c", c}, {"d", d}});
    if (!a) t->add_free("a");
    if (!c) t->add_free("c");
    if (!d) t->add_free("d");
    t->add_var("x");
    t->add_var("y");

    auto E = [&](const std::string& s) { return parse_expr(*t, s, &pm); };
    // b = c(x + a/x) + d depends on x; the map is still an involution
    // because b(a/x) = b(x).
    const std::string b = "(c*(x+a/x)+d)";
    RatFunc u = E("(x-a/x)/(x*y-a*" + b + "/(x*y))");
    RatFunc v = E("(y-" + b + "/y)/(x*y-a*" + b + "/(x*y))");

    Substitution inv(*t);
    inv.set("x", E("a/x")).set("y", E(b + "/y"));
    Substitution sq = compose(inv, inv);
    if (!substitutions_equal(sq, Substitution::identity(*t)))
        fail(ErrorKind::VerificationFailure, "twisted map is not an involution");
    require_invariant(u, inv, "u");
    require_invariant(v, inv, "v");

    GeneratorPair p;
    p.field = t;
    p.u = u;
    p.v = v;
    p.invariant_under = "x -> a/x, y -> b/y with b = c(x+a/x)+d";
    p.independent = jacobian_independent(u, v);
    if (!p.independent) fail(ErrorKind::VerificationFailure, "pair is dependent");
    return p;
}

GeneratorPair lemma23_basis(const std::optional<Rat>& b) {
    if (b && *b == 0) fail(ErrorKind::DegenerateParameters, "b must be nonzero");
    auto t = std::make_shared<TowerSpec>();
    ParamMap pm = make_params({{"b", b}});
    if (!b) t->add_free("b");
    t->add_var("x");
    t->add_var("y");

    auto E = [&](const char* s) { return parse_expr(*t, s, &pm); };
    const char* den = "(y^2*x^4-y^3*x^3+y^4*x^2-b*y*x^2-b*y^2*x+b^2)";
    RatFunc u = E(("y*(y^3*x^3+b*x^3-3*b*y*x^2+b^2)/" + std::string(den)).c_str());
    RatFunc v = E(("x*(x^3*y^3+b*y^3-3*b*x*y^2+b^2)/" + std::string(den)).c_str());

    Substitution rot(*t);
    rot.set("x", E("y")).set("y", E("b/(x*y)"));
    Substitution rot2 = compose(rot, rot);
    if (!substitutions_equal(compose(rot, rot2), Substitution::identity(*t)))
        fail(ErrorKind::VerificationFailure, "3-cycle has wrong order");
    require_invariant(u, rot, "u");
    require_invariant(v, rot, "v");
    require_invariant(u, rot2, "u under the squared cycle");

    GeneratorPair p;
    p.field = t;
    p.u = u;
    p.v = v;
    p.invariant_under = "x -> y -> b/(xy) -> x";
    p.independent = jacobian_independent(u, v);
    if (!p.independent) fail(ErrorKind::VerificationFailure, "pair is dependent");
    return p;
}

GeneratorPair lemma24_eigenbasis() {
    auto t = std::make_shared<TowerSpec>();
    t->add_omega("w");
    t->add_var("x");
    t->add_var("y");

    auto E = [&](const char* s) { return parse_expr(*t, s); };
    RatFunc u = E("(1+w^2*x+w*x*y)/(1+x+x*y)");
    RatFunc v = E("(1+w*x+w^2*x*y)/(1+x+x*y)");

    Substitution rot(*t);
    rot.set("x", E("y")).set("y", E("1/(x*y)"));
    rot.validate();
    RatFunc w = RatFunc::symbol(*t, "w");
    if (!rf_equal(substitute(u, rot), w * u))
        fail(ErrorKind::VerificationFailure, "u is not an omega-eigenvector");
    if (!rf_equal(substitute(v, rot), v / w))
        fail(ErrorKind::VerificationFailure, "v is not an omega^-1-eigenvector");
    // Eigenvalue products: u*v and u^3 are honest invariants.
    require_invariant(u * v, rot, "u*v");
    require_invariant(u.pow(3), rot, "u^3");

    GeneratorPair p;
    p.field = t;
    p.u = u;
    p.v = v;
    p.invariant_under = "x -> y -> 1/(xy) -> x (omega-eigenbasis)";
    p.eigen = true;
    p.independent = jacobian_independent(u, v);
    if (!p.independent) fail(ErrorKind::VerificationFailure, "pair is dependent");
    return p;
}

ConicBundlePair conic_bundle_zpair(const std::string& f_expr_in_x,
                                   const std::optional<Rat>& a) {
    auto t = std::make_shared<TowerSpec>();
    ParamMap pm = make_params({{"a", a}});
    if (!a) t->add_free("a");
    t->add_sqrt("sqrt_a", parse_poly(*t, "a", &pm));
    t->add_var("x");
    t->add_var("y");

    auto E = [&](const std::string& s) { return parse_expr(*t, s, &pm); };
    RatFunc f = E(f_expr_in_x);
    for (int v = t->generator_count(); v < t->symbol_count(); ++v) {
        if (t->name(v) == "y" &&
            (f.num().max_exponent(v) > 0 || f.den().max_exponent(v) > 0))
            fail(ErrorKind::InvalidInstance, "f must depend on x only");
    }
    RatFunc y = RatFunc::symbol(*t, "y");
    RatFunc sa = RatFunc::symbol(*t, "sqrt_a");
    RatFunc half = RatFunc::constant(*t, Rat(1, 2));
    RatFunc z1 = half * (y + f / y);
    RatFunc z2 = (y - f / y) / (sa * RatFunc::constant(*t, 2));

    Substitution s(*t);
    s.set("sqrt_a", -sa).set("y", f / y);
    s.validate();
    require_invariant(z1, s, "z1");
    require_invariant(z2, s, "z2");
    RatFunc a_val = a ? RatFunc::constant(*t, *a) : RatFunc::symbol(*t, "a");
    if (!rf_equal(z1 * z1 - a_val * z2 * z2, f))
        fail(ErrorKind::VerificationFailure, "z1^2 - a z2^2 != f(x)");

    ConicBundlePair p;
    p.field = t;
    p.z1 = z1;
    p.z2 = z2;
    p.f = f;
    return p;
}

// ---------------------------------------------------------------------------
// Chain runner
// ---------------------------------------------------------------------------

namespace {

struct StepContext {
    std::shared_ptr<TowerSpec> tower;
    ParamMap params;
    std::map<std::string, Substitution> actors;
    std::map<std::string, RatFunc> defs;

    RatFunc parse(const std::string& text) const {
        return parse_with_bindings(text);
    }

    RatFunc parse_with_bindings(const std::string& text) const {
        // Rewrites def names by substitution at parse level: parse over an
        // extended resolution by trying defs first.
        return parse_expr_bound(*tower, text, &params, &defs);
    }

    static RatFunc parse_expr_bound(const TowerSpec& t, const std::string& text,
                                    const ParamMap* params,
                                    const std::map<std::string, RatFunc>* bindings);

    Substitution actor_word(const std::string& word) const {
        Substitution acc = Substitution::identity(*tower);
        // "a*b" means apply b first.
        std::vector<std::string> names;
        std::string cur;
        for (char ch : word) {
            if (ch == '*') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        names.push_back(cur);
        for (const std::string& n : names) {
            auto it = actors.find(n);
            if (it == actors.end())
                fail(ErrorKind::UnknownSymbol, "unknown actor '" + n + "'");
            acc = compose(acc, it->second);
        }
        return acc;
    }

    RatFunc target(const std::string& name) const {
        auto it = defs.find(name);
        if (it != defs.end()) return it->second;
        auto id = tower->find(name);
        if (id) return RatFunc::symbol(*tower, *id);
        fail(ErrorKind::UnknownSymbol, "unknown target '" + name + "'");
    }
};

// parse_expr does not know about def bindings, so run a tiny shim: build a
// temporary parser via expr.cpp by name interception is overkill; instead
// textually parse and substitute is fragile.  We extend resolution by
// parsing against the tower and replacing def names beforehand is unsafe
// for overlapping names, so we implement resolution directly here.
RatFunc StepContext::parse_expr_bound(const TowerSpec& t, const std::string& text,
                                      const ParamMap* params,
                                      const std::map<std::string, RatFunc>* bindings) {
    // Tokenize identically to parse_expr, but resolve names through
    // bindings first.  Reuses the grammar by re-parsing with a callback.
    struct Shim {
        const TowerSpec& tower;
        const ParamMap* params;
        const std::map<std::string, RatFunc>* bindings;
        const std::string& text;
        size_t pos = 0;

        void skip() {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        [[noreturn]] void error(const std::string& m) {
            fail(ErrorKind::ParseError, m + " in '" + text + "'");
        }
        RatFunc expr() {
            RatFunc v = term();
            for (;;) {
                if (eat('+'))
                    v = v + term();
                else if (eat('-'))
                    v = v - term();
                else
                    return v;
            }
        }
        RatFunc term() {
            RatFunc v = factor();
            for (;;) {
                if (eat('*'))
                    v = v * factor();
                else if (eat('/'))
                    v = v / factor();
                else
                    return v;
            }
        }
        RatFunc factor() {
            int sign = 1;
            while (eat('-')) sign = -sign;
            RatFunc v = atom();
            if (eat('^')) {
                skip();
                bool neg = false;
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                    neg = text[pos] == '-';
                    ++pos;
                }
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    error("expected exponent");
                long e = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    e = e * 10 + (text[pos++] - '0');
                v = v.pow(neg ? -e : e);
            }
            return sign < 0 ? -v : v;
        }
        RatFunc atom() {
            skip();
            if (pos >= text.size()) error("unexpected end");
            char c = text[pos];
            if (c == '(') {
                ++pos;
                RatFunc v = expr();
                if (!eat(')')) error("expected ')'");
                return v;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int n = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    n = n * 10 + (text[pos++] - '0');
                return RatFunc::constant(tower, Rat(n));
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                if (bindings) {
                    auto it = bindings->find(name);
                    if (it != bindings->end()) return it->second;
                }
                if (params) {
                    auto it = params->find(name);
                    if (it != params->end()) return RatFunc::constant(tower, it->second);
                }
                auto id = tower.find(name);
                if (!id) error("unknown symbol '" + name + "'");
                return RatFunc::symbol(tower, *id);
            }
            error(std::string("unexpected character '") + c + "'");
        }
    };
    Shim s{t, params, bindings, text};
    RatFunc v = s.expr();
    s.skip();
    if (s.pos != text.size()) s.error("trailing input");
    return v;
}

void run_step(const StepSpec& step, const ParamMap* params, ChainReport& report) {
    StepContext cx;
    cx.tower = std::make_shared<TowerSpec>();
    if (params) cx.params = *params;

    for (const SymbolDecl& g : step.gens) {
        if (cx.params.count(g.name)) {
            if (g.kind != RelKind::Free)
                fail(ErrorKind::InvalidInstance,
                     "bound generator '" + g.name + "' cannot be a numeric parameter");
            continue; // parser resolves it as a constant
        }
        switch (g.kind) {
            case RelKind::Free: cx.tower->add_free(g.name); break;
            case RelKind::Sqrt:
                cx.tower->add_sqrt(g.name, parse_poly(*cx.tower, g.rhs, &cx.params));
                break;
            case RelKind::Cbrt:
                cx.tower->add_cbrt(g.name, parse_poly(*cx.tower, g.rhs, &cx.params));
                break;
            case RelKind::Omega: cx.tower->add_omega(g.name); break;
        }
    }
    for (const std::string& v : step.vars) cx.tower->add_var(v);

    auto check = [&](const std::string& what, bool ok) {
        report.checks.push_back({step.title + ": " + what, ok});
    };

    for (const ActorSpec& a : step.actors) {
        Substitution s(*cx.tower);
        for (const auto& [sym, expr] : a.images) {
            if (cx.params.count(sym)) continue; // numeric parameter: image is itself
            s.set(sym, cx.parse(expr));
        }
        bool ok = true;
        try {
            s.validate();
        } catch (const Error&) {
            ok = false;
        }
        check("action of " + a.name + " respects the tower relations", ok);
        cx.actors.emplace(a.name, std::move(s));
    }

    for (const auto& [name, expr] : step.defs) cx.defs.emplace(name, cx.parse(expr));

    for (const ExpectedSpec& e : step.expected) {
        Substitution s = cx.actor_word(e.actor);
        for (const auto& [targ, expr] : e.images) {
            RatFunc lhs = substitute(cx.target(targ), s);
            RatFunc rhs = cx.parse(expr);
            check(e.actor + "(" + targ + ") = " + expr, rf_equal(lhs, rhs));
        }
    }

    for (const auto& [lhs, rhs] : step.equalities)
        check(lhs + " == " + rhs, rf_equal(cx.parse(lhs), cx.parse(rhs)));

    for (const auto& [actor, order] : step.order_checks) {
        Substitution s = cx.actor_word(actor);
        Substitution acc = Substitution::identity(*cx.tower);
        for (int i = 0; i < order; ++i) acc = compose(acc, s);
        check(actor + " has order dividing " + std::to_string(order),
              substitutions_equal(acc, Substitution::identity(*cx.tower)));
    }

    for (const auto& [lw, rw] : step.word_checks) {
        Substitution l = cx.actor_word(lw);
        Substitution r = (rw == "id") ? Substitution::identity(*cx.tower) : cx.actor_word(rw);
        check(lw + " == " + rw, substitutions_equal(l, r));
    }
}

} // namespace

std::vector<std::string> all_case_tags() {
    std::vector<std::string> tags;
    for (const CaseSpec& c : case_registry()) tags.push_back(c.tag);
    return tags;
}

const CaseSpec& find_case(const std::string& tag) {
    for (const CaseSpec& c : case_registry())
        if (c.tag == tag) return c;
    fail(ErrorKind::UnknownSymbol, "unknown case tag '" + tag + "'");
}

ChainReport run_case_spec(const CaseSpec& spec, const ParamMap* params) {
    ChainReport report;
    report.tag = spec.tag;
    if (params) {
        for (const auto& [name, v] : *params) {
            bool known = false;
            for (const std::string& p : spec.params) known |= (p == name);
            if (!known)
                fail(ErrorKind::InvalidInstance,
                     "case '" + spec.tag + "' has no parameter '" + name + "'");
            if (v == 0) fail(ErrorKind::DegenerateParameters, "parameter " + name + " = 0");
        }
    }
    for (const StepSpec& s : spec.steps) run_step(s, params, report);
    return report;
}

ChainReport run_case(const std::string& tag, const ParamMap* params) {
    return run_case_spec(find_case(tag), params);
}

void verify_case_or_throw(const std::string& tag, const ParamMap* params) {
    ChainReport r = run_case(tag, params);
    for (const IdentityCheck& c : r.checks)
        if (!c.passed)
            fail(ErrorKind::VerificationFailure, "case " + tag + ": " + c.description);
}

} // namespace qmrat
