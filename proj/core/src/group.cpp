#include "qmrat/group.hpp"

#include <algorithm>
#include <map>

#include "qmrat/error.hpp"

namespace qmrat {

const char* label_name(ConjugacyLabel l) noexcept {
    switch (l) {
        case ConjugacyLabel::C1: return "C1";
        case ConjugacyLabel::C2_1: return "C2_1";
        case ConjugacyLabel::C2_2: return "C2_2";
        case ConjugacyLabel::C2_3: return "C2_3";
        case ConjugacyLabel::C3: return "C3";
        case ConjugacyLabel::C4: return "C4";
        case ConjugacyLabel::C6: return "C6";
        case ConjugacyLabel::V4_1: return "V4_1";
        case ConjugacyLabel::V4_2: return "V4_2";
        case ConjugacyLabel::S3_1: return "S3_1";
        case ConjugacyLabel::S3_2: return "S3_2";
        case ConjugacyLabel::D4: return "D4";
        case ConjugacyLabel::D6: return "D6";
    }
    return "?";
}

std::optional<ConjugacyLabel> label_from_name(const std::string& name) {
    for (ConjugacyLabel l : all_labels())
        if (name == label_name(l)) return l;
    return std::nullopt;
}

std::vector<ConjugacyLabel> all_labels() {
    using L = ConjugacyLabel;
    return {L::C1, L::C2_1, L::C2_2, L::C2_3, L::C3,   L::C4, L::C6,
            L::V4_1, L::V4_2, L::S3_1, L::S3_2, L::D4, L::D6};
}

bool FiniteMatrixGroup::contains(const IntMatrix2& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

int FiniteMatrixGroup::index_of(const IntMatrix2& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || !(*it == m)) return -1;
    return static_cast<int>(it - elements.begin());
}

FiniteMatrixGroup close_group(const std::vector<IntMatrix2>& gens) {
    constexpr int kMaxOrder = 12;
    for (const IntMatrix2& g : gens) {
        int64_t d = g.det();
        if (d != 1 && d != -1)
            fail(ErrorKind::NotUnimodular, "generator " + g.str() + " has det " +
                                               std::to_string(d));
    }
    std::map<IntMatrix2, std::vector<int>> seen;
    seen[kIdentity] = {};
    std::vector<IntMatrix2> queue{kIdentity};
    while (!queue.empty()) {
        IntMatrix2 cur = queue.back();
        queue.pop_back();
        std::vector<int> cur_word = seen[cur];
        for (size_t i = 0; i < gens.size(); ++i) {
            IntMatrix2 next = cur * gens[i];
            if (seen.count(next)) continue;
            if (static_cast<int>(seen.size()) >= kMaxOrder)
                fail(ErrorKind::InfiniteGroup,
                     "closure exceeds order 12; the subgroup is infinite");
            std::vector<int> w = cur_word;
            w.push_back(static_cast<int>(i));
            seen.emplace(next, std::move(w));
            queue.push_back(next);
        }
    }
    FiniteMatrixGroup g;
    g.generators = gens;
    for (auto& [m, w] : seen) {
        g.elements.push_back(m);
        g.words.push_back(w);
    }
    return g;
}

SymForm invariant_form(const FiniteMatrixGroup& g) {
    SymForm f{0, 0, 0};
    for (const IntMatrix2& m : g.elements) {
        f.A += m.a * m.a + m.c * m.c;
        f.B += m.a * m.b + m.c * m.d;
        f.C += m.b * m.b + m.d * m.d;
    }
    return f;
}

FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& g, const IntMatrix2& p) {
    IntMatrix2 pinv = p.inverse();
    std::vector<std::pair<IntMatrix2, std::vector<int>>> items;
    items.reserve(g.elements.size());
    for (size_t i = 0; i < g.elements.size(); ++i)
        items.emplace_back(p * g.elements[i] * pinv,
                           i < g.words.size() ? g.words[i] : std::vector<int>{});
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FiniteMatrixGroup out;
    for (const IntMatrix2& m : g.generators) out.generators.push_back(p * m * pinv);
    for (auto& [m, w] : items) {
        out.elements.push_back(m);
        out.words.push_back(std::move(w));
    }
    return out;
}

namespace {

struct RepTable {
    std::map<ConjugacyLabel, FiniteMatrixGroup> reps;
    RepTable() {
        using L = ConjugacyLabel;
        const IntMatrix2 rho2 = kRho * kRho;
        auto make = [&](L l, std::vector<IntMatrix2> gens) {
            FiniteMatrixGroup g = close_group(gens);
            g.label = l;
            reps.emplace(l, std::move(g));
        };
        make(L::C1, {kIdentity});
        make(L::C2_1, {-kIdentity});
        make(L::C2_2, {kLambda});
        make(L::C2_3, {kTau});
        make(L::C3, {rho2});
        make(L::C4, {kSigma});
        make(L::C6, {kRho});
        make(L::V4_1, {kLambda, -kIdentity});
        make(L::V4_2, {kTau, -kIdentity});
        make(L::S3_1, {rho2, kTau});
        make(L::S3_2, {rho2, -kTau});
        make(L::D4, {kSigma, kTau});
        make(L::D6, {kRho, kTau});
    }
};

const RepTable& rep_table() {
    static const RepTable t;
    return t;
}

// Signature invariant under conjugation: sorted (det, trace) pairs.
std::vector<std::pair<int64_t, int64_t>> signature(const FiniteMatrixGroup& g) {
    std::vector<std::pair<int64_t, int64_t>> s;
    for (const IntMatrix2& m : g.elements) s.emplace_back(m.det(), m.trace());
    std::sort(s.begin(), s.end());
    return s;
}

// Lagrange-Gauss reduction of a positive definite form: returns U with
// U^T F U reduced (|2B'| <= A' <= C').
IntMatrix2 gauss_reduce(SymForm f) {
    IntMatrix2 u = kIdentity;
    auto apply = [&](const IntMatrix2& t) {
        u = u * t;
        // F' = T^T F T
        int64_t A = f.A, B = f.B, C = f.C;
        int64_t a = t.a, b = t.b, c = t.c, d = t.d;
        int64_t A2 = a * a * A + 2 * a * c * B + c * c * C;
        int64_t B2 = a * b * A + (a * d + b * c) * B + c * d * C;
        int64_t C2 = b * b * A + 2 * b * d * B + d * d * C;
        f = {A2, B2, C2};
    };
    for (int guard = 0; guard < 64; ++guard) {
        if (std::abs(2 * f.B) > f.A) {
            // shift second basis vector: s = -round(B/A)
            int64_t s = -((2 * f.B + f.A) / (2 * f.A) -
                          ((2 * f.B + f.A) % (2 * f.A) < 0 ? 1 : 0));
            apply({1, s, 0, 1});
        } else if (f.A > f.C) {
            apply({0, -1, 1, 0});
        } else {
            return u;
        }
    }
    fail(ErrorKind::Internal, "form reduction did not converge");
}

const std::vector<IntMatrix2>& unimodular_box3() {
    static const std::vector<IntMatrix2> box = [] {
        std::vector<IntMatrix2> v;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int c = -3; c <= 3; ++c)
                    for (int d = -3; d <= 3; ++d) {
                        int64_t det = int64_t(a) * d - int64_t(b) * c;
                        if (det == 1 || det == -1) v.push_back({a, b, c, d});
                    }
        return v;
    }();
    return box;
}

} // namespace

const FiniteMatrixGroup& representative(ConjugacyLabel l) {
    return rep_table().reps.at(l);
}

Classification classify(const FiniteMatrixGroup& g) {
    // Representatives come back unchanged.
    for (ConjugacyLabel l : all_labels())
        if (g.set_equals(representative(l))) return {l, kIdentity};

    SymForm f = invariant_form(g);
    IntMatrix2 u = gauss_reduce(f);
    // G preserves F, so G' = U^-1 G U preserves the reduced form U^T F U.
    FiniteMatrixGroup reduced = conjugate_group(g, u.inverse());

    auto sig = signature(g);
    for (ConjugacyLabel l : all_labels()) {
        const FiniteMatrixGroup& rep = representative(l);
        if (rep.order() != g.order() || signature(rep) != sig) continue;
        for (const IntMatrix2& p : unimodular_box3()) {
            FiniteMatrixGroup cand = conjugate_group(reduced, p);
            if (!cand.set_equals(rep)) continue;
            IntMatrix2 conj = p * u.inverse();
            if (!conjugate_group(g, conj).set_equals(rep))
                fail(ErrorKind::Internal, "conjugator verification failed");
            return {l, conj};
        }
    }
    fail(ErrorKind::ClassificationFailed,
         "no conjugator with entries in [-3,3] after form reduction");
}

namespace {

struct SubgroupTable {
    std::map<ConjugacyLabel, std::vector<std::pair<std::string, std::vector<IntMatrix2>>>>
        table;
    SubgroupTable() {
        using L = ConjugacyLabel;
        const IntMatrix2 mI = -kIdentity;
        const IntMatrix2 rho2 = kRho * kRho;
        const IntMatrix2 rho3 = rho2 * kRho;
        const IntMatrix2 sigma2 = kSigma * kSigma;
        const IntMatrix2 tausigma = kTau * kSigma;
        table[L::C1] = {{"1", {}}};
        table[L::C2_1] = {{"1", {}}, {"<-I>", {mI}}};
        table[L::C2_2] = {{"1", {}}, {"<lambda>", {kLambda}}};
        table[L::C2_3] = {{"1", {}}, {"<tau>", {kTau}}};
        table[L::C3] = {{"1", {}}, {"<rho^2>", {rho2}}};
        table[L::C4] = {{"1", {}}, {"<sigma^2>", {sigma2}}, {"<sigma>", {kSigma}}};
        table[L::C6] = {{"1", {}}, {"<rho^3>", {rho3}}, {"<rho^2>", {rho2}}, {"<rho>", {kRho}}};
        table[L::V4_1] = {{"1", {}},
                          {"<-I>", {mI}},
                          {"<lambda>", {kLambda}},
                          {"<-lambda>", {-kLambda}},
                          {"<lambda,-I>", {kLambda, mI}}};
        table[L::V4_2] = {{"1", {}},
                          {"<-I>", {mI}},
                          {"<tau>", {kTau}},
                          {"<-tau>", {-kTau}},
                          {"<tau,-I>", {kTau, mI}}};
        table[L::S3_1] = {{"1", {}}, {"<rho^2>", {rho2}}, {"<rho^2,tau>", {rho2, kTau}}};
        table[L::S3_2] = {{"1", {}}, {"<rho^2>", {rho2}}, {"<rho^2,-tau>", {rho2, -kTau}}};
        table[L::D4] = {{"1", {}},
                        {"<-I>", {mI}},
                        {"<-I,tau*sigma>", {mI, tausigma}},
                        {"<-I,tau>", {mI, kTau}},
                        {"<sigma>", {kSigma}},
                        {"<sigma,tau>", {kSigma, kTau}}};
        table[L::D6] = {{"1", {}},
                        {"<-I>", {mI}},
                        {"<rho^2>", {rho2}},
                        {"<rho>", {kRho}},
                        {"<rho^2,tau>", {rho2, kTau}},
                        {"<rho^2,-tau>", {rho2, -kTau}},
                        {"<rho,tau>", {kRho, kTau}}};
    }
};

const SubgroupTable& subgroup_table() {
    static const SubgroupTable t;
    return t;
}

} // namespace

std::vector<FiniteMatrixGroup> normal_subgroups(ConjugacyLabel l) {
    std::vector<FiniteMatrixGroup> out;
    const FiniteMatrixGroup& g = representative(l);
    for (const auto& [name, gens] : subgroup_table().table.at(l)) {
        (void)name;
        FiniteMatrixGroup h = gens.empty() ? close_group({kIdentity}) : close_group(gens);
        for (const IntMatrix2& m : h.elements)
            if (!g.contains(m)) fail(ErrorKind::Internal, "subgroup not inside group");
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::string> normal_subgroup_names(ConjugacyLabel l) {
    std::vector<std::string> out;
    for (const auto& [name, gens] : subgroup_table().table.at(l)) {
        (void)gens;
        out.push_back(name);
    }
    return out;
}

bool is_normal_in(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
    for (const IntMatrix2& a : g.elements) {
        IntMatrix2 ainv = a.inverse();
        for (const IntMatrix2& x : h.elements)
            if (!h.contains(a * x * ainv)) return false;
    }
    return true;
}

} // namespace qmrat
