#include "wmin/weyl.hpp"

#include "wmin/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wmin {

namespace {

Weight unit_weight(const BasisLabel& l) {
    switch (l.tag) {
    case BasisTag::Eps: return eps(l.index);
    case BasisTag::Del: return del(l.index);
    case BasisTag::Lambda0: return lambda0();
    case BasisTag::DeltaIm: return delta();
    }
    throw StructuralError("unknown basis tag");
}

Weight apply_step(const AlgebraSpec& s, const WeylStep& st, const Weight& lam) {
    if (st.translation) {
        Rational level = s.pair(lam, delta());
        Rational dcoef = s.pair(lam, st.v) + level / 2 * s.pair(st.v, st.v);
        return lam + level * st.v - dcoef * delta();
    }
    Rational n = s.norm2(st.v);
    if (n == 0)
        throw PreconditionError("cannot reflect in isotropic vector " + st.v.str());
    return lam - (2 * s.pair(lam, st.v) / n) * st.v;
}

std::vector<Weight> apply_to_all(const AlgebraSpec& s, const WeylElement& w,
                                 const std::vector<Weight>& pts) {
    std::vector<Weight> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(apply_element(s, w, p));
    return out;
}

// Exhaustive closure of a finite reflection group given by generator roots.
std::vector<WeylElement> closure(const AlgebraSpec& s, const std::vector<Weight>& gens) {
    std::vector<WeylElement> out{identity_element(s)};
    std::set<std::vector<Weight>> seen{out[0].images};
    std::vector<WeylElement> frontier = out;
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                WeylElement e = compose(s, w, reflection_element(s, g));
                if (seen.insert(e.images).second) {
                    next.push_back(e);
                    out.push_back(std::move(e));
                }
            }
        frontier = std::move(next);
        if (out.size() > 2000000)
            throw ResourceError("reflection group closure exceeds element cap");
    }
    return out;
}

// Spans of S and of the positive-length roots, concatenated; the finite root
// lattice decomposes as a direct sum over these two blocks when defined.
struct SplitBasis {
    std::vector<Weight> cols; // S first, then a basis of the plus span
    size_t s_count = 0;
};

SplitBasis split_basis(const AlgebraSpec& s) {
    SplitBasis sb;
    sb.cols = s.S;
    sb.s_count = s.S.size();
    for (const auto& root : s.roots) {
        if (s.norm2(root.w) <= 0) continue;
        auto trial = sb.cols;
        trial.push_back(root.w);
        if (SpanSolver(trial).rank() == (int)trial.size()) sb.cols.push_back(root.w);
    }
    int full = SpanSolver([&] {
        std::vector<Weight> all;
        for (const auto& root : s.roots) all.push_back(root.w);
        return all;
    }()).rank();
    if ((int)sb.cols.size() != full)
        throw PreconditionError("root lattice of " + s.id +
                                " does not split over the isotropic set and the plus part");
    return sb;
}

} // namespace

std::vector<Weight> spanning_set(const AlgebraSpec& s) {
    std::set<BasisLabel> labels;
    for (const auto& root : s.roots)
        for (const auto& [l, c] : root.w.terms()) labels.insert(l);
    std::vector<Weight> out;
    out.push_back(lambda0());
    for (const auto& l : labels) out.push_back(unit_weight(l));
    return out;
}

WeylElement identity_element(const AlgebraSpec& s) {
    WeylElement e;
    e.images = spanning_set(s);
    return e;
}

WeylElement reflection_element(const AlgebraSpec& s, const Weight& alpha) {
    if (s.norm2(alpha) == 0)
        throw PreconditionError("cannot reflect in isotropic vector " + alpha.str());
    WeylElement e;
    e.word.push_back({alpha, false});
    e.sign = -1;
    e.images = apply_to_all(s, e, spanning_set(s));
    return e;
}

WeylElement translation_element(const AlgebraSpec& s, const Weight& mu) {
    if (!in_qprime(s, mu))
        throw PreconditionError("translation vector " + mu.str() + " is outside Q'");
    WeylElement e;
    if (!mu.is_zero()) e.word.push_back({mu, true});
    e.images = apply_to_all(s, e, spanning_set(s));
    return e;
}

WeylElement compose(const AlgebraSpec& s, const WeylElement& a, const WeylElement& b) {
    WeylElement e;
    e.word = a.word;
    e.word.insert(e.word.end(), b.word.begin(), b.word.end());
    e.sign = a.sign * b.sign;
    e.images.reserve(b.images.size());
    for (const auto& p : b.images) e.images.push_back(apply_element(s, a, p));
    return e;
}

bool same_action(const WeylElement& a, const WeylElement& b) { return a.images == b.images; }

bool is_identity(const AlgebraSpec& s, const WeylElement& w) {
    return w.images == spanning_set(s);
}

Weight reflect(const AlgebraSpec& s, const Weight& alpha, const Weight& lam) {
    return apply_step(s, {alpha, false}, lam);
}

Weight apply_element(const AlgebraSpec& s, const WeylElement& w, const Weight& lam) {
    Weight out = lam;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = apply_step(s, *it, out);
    return out;
}

Weight shifted_action(const AlgebraSpec& s, const WeylElement& w, const Weight& lam) {
    return apply_element(s, w, lam + s.rho) - s.rho;
}

Weight shifted_reflect(const AlgebraSpec& s, const Weight& alpha, const Weight& lam) {
    return reflect(s, alpha, lam + s.rho) - s.rho;
}

Weight circ_action(const AlgebraSpec& s, const AffineComponent& comp, const WeylElement& w,
                   const Weight& lam) {
    for (const auto& st : w.word) {
        if (st.translation)
            throw PreconditionError("component action expects a reflection word");
        auto d = decompose(st.v);
        if (d.lambda0_coef != 0 || !is_integer(d.j))
            throw PreconditionError("reflection vector " + st.v.str() +
                                    " is not an affine real root");
        Weight f = d.mu_dot;
        bool inside = std::find(comp.roots.begin(), comp.roots.end(), f) != comp.roots.end() ||
                      std::find(comp.roots.begin(), comp.roots.end(), -f) != comp.roots.end();
        if (!inside)
            throw PreconditionError("reflection vector " + st.v.str() +
                                    " lies outside the declared component");
    }
    return apply_element(s, w, lam + comp.rho_l) - comp.rho_l;
}

Weight circ_reflect(const AlgebraSpec& s, const AffineComponent& comp, const Weight& alpha,
                    const Weight& lam) {
    return circ_action(s, comp, reflection_element(s, alpha), lam);
}

Weight translation(const AlgebraSpec& s, const Weight& mu, const Weight& lam) {
    if (!in_qprime(s, mu))
        throw PreconditionError("translation vector " + mu.str() + " is outside Q'");
    return apply_step(s, {mu, true}, lam);
}

std::vector<Weight> qprime_basis(const AlgebraSpec& s) {
    std::vector<Weight> out;
    for (const auto& alpha : s.sharp_simples) out.push_back((2 / s.norm2(alpha)) * alpha);
    return out;
}

bool in_qprime(const AlgebraSpec& s, const Weight& mu) {
    auto basis = qprime_basis(s);
    if (basis.empty()) return mu.is_zero();
    auto c = SpanSolver(basis).express(mu);
    if (!c) return false;
    for (const auto& v : *c)
        if (!is_integer(v)) return false;
    return true;
}

bool in_qsharp(const AlgebraSpec& s, const Weight& nu) {
    auto d = decompose(nu);
    if (d.lambda0_coef != 0 || !is_integer(d.j)) return false;
    if (s.sharp_simples.empty()) return d.mu_dot.is_zero();
    auto c = SpanSolver(s.sharp_simples).express(d.mu_dot);
    if (!c) return false;
    for (const auto& v : *c)
        if (!is_integer(v)) return false;
    return true;
}

Weight ps_project(const AlgebraSpec& s, const Weight& nu) {
    auto sb = split_basis(s);
    auto d = decompose(nu);
    auto c = SpanSolver(sb.cols).express(d.mu_dot);
    if (!c)
        throw PreconditionError("weight " + nu.str() + " lies outside the finite root span");
    Weight out;
    for (size_t i = 0; i < sb.s_count; ++i) out += (*c)[i] * sb.cols[i];
    return out;
}

Weight pplus_project(const AlgebraSpec& s, const Weight& nu) {
    return decompose(nu).mu_dot - ps_project(s, nu);
}

Weight wmu_expand(const AlgebraSpec& s, const WeylElement& w, const std::vector<long long>& m) {
    if (m.size() != s.S.size())
        throw PreconditionError("coefficient list does not match the isotropic set");
    Weight out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw PreconditionError("negative coefficient in wmu expansion");
        Weight im = apply_element(s, w, s.S[i]);
        auto d = decompose(im);
        if (d.lambda0_coef != 0) throw StructuralError("root image acquired a Lambda0 part");
        bool positive = d.j > 0 || (d.j == 0 && s.is_positive_root(d.mu_dot));
        if (positive)
            out += rat(m[i]) * im;
        else
            out -= rat(m[i] + 1) * im;
    }
    return out;
}

std::vector<WeylElement> enumerate_group(const AlgebraSpec& s, Subgroup sel, long long bound) {
    switch (sel) {
    case Subgroup::Wdot: return closure(s, s.even_simples);
    case Subgroup::WdotSharp: return closure(s, s.sharp_simples);
    case Subgroup::WdotPrime: return closure(s, s.wprime_gens);
    case Subgroup::WdotSecond: return closure(s, s.wsecond_gens);
    case Subgroup::T: {
        auto basis = qprime_basis(s);
        std::vector<std::pair<std::pair<Rational, std::vector<long long>>, Weight>> lattice;
        std::vector<long long> c(basis.size(), -bound);
        if (basis.empty()) return {identity_element(s)};
        while (true) {
            Weight mu;
            for (size_t i = 0; i < basis.size(); ++i) mu += rat(c[i]) * basis[i];
            lattice.push_back({{s.norm2(mu), c}, mu});
            size_t i = 0;
            while (i < c.size() && c[i] == bound) c[i++] = -bound;
            if (i == c.size()) break;
            ++c[i];
        }
        std::sort(lattice.begin(), lattice.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<WeylElement> out;
        for (const auto& [key, mu] : lattice) out.push_back(translation_element(s, mu));
        return out;
    }
    case Subgroup::Wsharp:
    case Subgroup::Wprime: {
        auto finite = closure(
            s, sel == Subgroup::Wsharp ? s.sharp_simples : s.wprime_gens);
        auto trans = enumerate_group(s, Subgroup::T, bound);
        std::vector<WeylElement> out;
        out.reserve(finite.size() * trans.size());
        for (const auto& t : trans)
            for (const auto& w : finite) out.push_back(compose(s, w, t));
        return out;
    }
    case Subgroup::W: {
        std::vector<Weight> gens = s.even_simples;
        for (const auto& comp : s.components) gens.push_back(delta() - comp.highest);
        std::vector<WeylElement> out{identity_element(s)};
        std::set<std::vector<Weight>> seen{out[0].images};
        std::vector<WeylElement> frontier = out;
        for (long long depth = 0; depth < bound; ++depth) {
            std::vector<WeylElement> next;
            for (const auto& w : frontier)
                for (const auto& g : gens) {
                    WeylElement e = compose(s, w, reflection_element(s, g));
                    if (seen.insert(e.images).second) {
                        next.push_back(e);
                        out.push_back(std::move(e));
                    }
                }
            frontier = std::move(next);
        }
        return out;
    }
    }
    throw StructuralError("unknown subgroup selector");
}

std::vector<WeylElement> stabilizer(const AlgebraSpec& s, Subgroup sel, const Weight& lam) {
    if (sel != Subgroup::Wdot && sel != Subgroup::WdotSharp && sel != Subgroup::WdotPrime &&
        sel != Subgroup::WdotSecond)
        throw PreconditionError("stabilizer enumeration needs a finite subgroup");
    std::vector<WeylElement> out;
    for (auto& w : enumerate_group(s, sel, 0))
        if (apply_element(s, w, lam) == lam) out.push_back(std::move(w));
    return out;
}

bool is_regular(const AlgebraSpec& s, const Rational& k, const Weight& lam) {
    Rational modulus = k + s.hvee;
    if (modulus == 0) throw PreconditionError("regularity test undefined at the critical level");
    for (const auto& alpha : s.even_pos) {
        if (s.norm2(alpha) <= 0) continue;
        if (is_integer(s.pair(lam, alpha) / modulus)) return false;
    }
    return true;
}

} // namespace wmin
