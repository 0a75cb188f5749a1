#include "qmrat/tower.hpp"

#include "qmrat/error.hpp"

namespace qmrat {

int TowerSpec::add_symbol(const std::string& name) {
    if (name.empty()) fail(ErrorKind::UnknownSymbol, "empty symbol name");
    if (find(name)) fail(ErrorKind::UnknownSymbol, "duplicate symbol '" + name + "'");
    if (symbol_count() >= kMaxSymbols)
        fail(ErrorKind::Internal, "too many symbols (max " + std::to_string(kMaxSymbols) + ")");
    names_.push_back(name);
    return symbol_count() - 1;
}

void TowerSpec::check_rhs(const MultiPoly& rhs, int before_id) const {
    for (const auto& [ev, c] : rhs.terms()) {
        (void)c;
        for (int i = 0; i < kMaxSymbols; ++i) {
            if (ev.e[i] == 0) continue;
            if (i >= before_id)
                fail(ErrorKind::UnknownSymbol,
                     "relation must reference strictly earlier generators");
        }
    }
}

int TowerSpec::add_free(const std::string& name) {
    if (variable_count() > 0)
        fail(ErrorKind::UnknownSymbol, "generators must precede variables");
    int id = add_symbol(name);
    gens_.push_back({name, RelKind::Free, {}});
    return id;
}

int TowerSpec::add_sqrt(const std::string& name, const MultiPoly& rhs) {
    if (variable_count() > 0)
        fail(ErrorKind::UnknownSymbol, "generators must precede variables");
    check_rhs(rhs, symbol_count());
    if (rhs.is_zero()) fail(ErrorKind::InvalidInstance, "sqrt of zero relation");
    int id = add_symbol(name);
    gens_.push_back({name, RelKind::Sqrt, rhs});
    return id;
}

int TowerSpec::add_cbrt(const std::string& name, const MultiPoly& rhs) {
    if (variable_count() > 0)
        fail(ErrorKind::UnknownSymbol, "generators must precede variables");
    check_rhs(rhs, symbol_count());
    if (rhs.is_zero()) fail(ErrorKind::InvalidInstance, "cbrt of zero relation");
    int id = add_symbol(name);
    gens_.push_back({name, RelKind::Cbrt, rhs});
    return id;
}

int TowerSpec::add_omega(const std::string& name) {
    if (variable_count() > 0)
        fail(ErrorKind::UnknownSymbol, "generators must precede variables");
    if (has_omega_) fail(ErrorKind::InvalidInstance, "at most one omega generator");
    has_omega_ = true;
    int id = add_symbol(name);
    gens_.push_back({name, RelKind::Omega, {}});
    return id;
}

int TowerSpec::add_var(const std::string& name) { return add_symbol(name); }

std::optional<int> TowerSpec::find(const std::string& name) const {
    for (int i = 0; i < symbol_count(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int TowerSpec::require(const std::string& name) const {
    auto id = find(name);
    if (!id) fail(ErrorKind::UnknownSymbol, "unknown symbol '" + name + "'");
    return *id;
}

int TowerSpec::relation_degree(int id) const {
    if (!is_generator(id)) return 0;
    switch (gens_[id].kind) {
        case RelKind::Free: return 0;
        case RelKind::Sqrt:
        case RelKind::Omega: return 2;
        case RelKind::Cbrt: return 3;
    }
    return 0;
}

MultiPoly normal_form(const MultiPoly& p, const TowerSpec& t) {
    for (const auto& [ev, c] : p.terms()) {
        (void)c;
        for (int i = 0; i < kMaxSymbols; ++i)
            if (ev.e[i] != 0 && i >= t.symbol_count())
                fail(ErrorKind::UnknownSymbol, "polynomial uses unregistered symbol");
    }

    // Worklist rewriting.  Each step strictly lowers a bound generator's
    // exponent, replacing it with strictly earlier symbols (or, for omega,
    // the same symbol at lower degree), so the loop terminates and the
    // normal form is unique for a triangular tower.
    MultiPoly done;
    std::vector<std::pair<ExpVec, Rat>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [ev, c] = work.back();
        work.pop_back();
        int hit = -1;
        for (int i = 0; i < t.generator_count(); ++i) {
            int d = t.relation_degree(i);
            if (d > 0 && ev.e[i] >= d) {
                hit = i;
                break;
            }
        }
        if (hit < 0) {
            done.add_term(ev, c);
            continue;
        }
        int d = t.relation_degree(hit);
        ExpVec base = ev;
        base.e[hit] = static_cast<int16_t>(base.e[hit] - d);
        MultiPoly rhs;
        if (t.generator(hit).kind == RelKind::Omega) {
            rhs = MultiPoly::constant(-1) - MultiPoly::symbol(hit);
        } else {
            rhs = t.generator(hit).rhs;
        }
        MultiPoly expansion = MultiPoly::monomial(base, c) * rhs;
        for (const auto& [ev2, c2] : expansion.terms()) work.emplace_back(ev2, c2);
    }
    return done;
}

} // namespace qmrat
