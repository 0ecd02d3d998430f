#include "wmin/charser.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace wmin {

namespace {

Rational box_cap(const AlgebraSpec& s, const Bounds& b) {
    return rat(b.height) + rat(b.ddeg) * rat(1 + s.htt_Theta);
}

void require_usable(const AlgebraSpec& s) {
    if (s.flagged) throw PreconditionError(s.id + ": " + s.flag_reason);
}

void require_same_box(const CharSeries& f, const CharSeries& g) {
    if (&f.spec() != &g.spec() && f.spec().id != g.spec().id)
        throw PreconditionError("series over different algebras");
    if (f.bounds().ddeg != g.bounds().ddeg || f.bounds().height != g.bounds().height)
        throw PreconditionError("series with different truncation boxes");
}

long long floor_ll(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return to_ll(q);
}

// multiply in place by (1 + sign * e^{-root})
CharSeries binomial_mul(const CharSeries& f, const Weight& root, int sign) {
    CharSeries out(f.spec(), f.anchor(), f.bounds());
    for (const auto& [nu, c] : f.terms()) {
        out.add_term(nu, c);
        out.add_term(nu + root, sign > 0 ? c : -c);
    }
    return out;
}

} // namespace

CharSeries::CharSeries(const AlgebraSpec& s, Weight anchor, Bounds b)
    : spec_(&s), anchor_(std::move(anchor)), bounds_(b) {}

CharSeries CharSeries::unit(const AlgebraSpec& s, Weight anchor, Bounds b) {
    CharSeries f(s, std::move(anchor), b);
    f.add_term(Weight{}, 1);
    return f;
}

Integer CharSeries::coef(const Weight& nu) const {
    auto it = coef_.find(nu);
    return it == coef_.end() ? Integer(0) : it->second;
}

bool CharSeries::in_region(const Weight& nu) const {
    auto d = decompose(nu);
    if (d.lambda0_coef != 0) throw StructuralError("series exponent with a Lambda0 part");
    if (d.j > rat(bounds_.ddeg)) return false;
    return d.j * rat(1 + spec_->htt_Theta) + spec_->height_of(d.mu_dot) <=
           box_cap(*spec_, bounds_);
}

void CharSeries::add_term(const Weight& nu, const Integer& c) {
    if (c == 0 || !in_region(nu)) return;
    auto [it, fresh] = coef_.try_emplace(nu, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) coef_.erase(it);
}

Rational series_grade(const AlgebraSpec& s, const Weight& nu) {
    auto d = decompose(nu);
    if (d.lambda0_coef != 0) throw StructuralError("series exponent with a Lambda0 part");
    return d.j * rat(1 + s.htt_Theta) + s.height_of(d.mu_dot);
}

CharSeries series_add(const CharSeries& f, const CharSeries& g) {
    require_same_box(f, g);
    if (f.anchor() != g.anchor()) throw PreconditionError("series with different anchors");
    CharSeries out = f;
    for (const auto& [nu, c] : g.terms()) out.add_term(nu, c);
    return out;
}

CharSeries series_sub(const CharSeries& f, const CharSeries& g) {
    return series_add(f, series_scale(g, Integer(-1)));
}

CharSeries series_scale(const CharSeries& f, const Integer& c) {
    CharSeries out(f.spec(), f.anchor(), f.bounds());
    if (c == 0) return out;
    for (const auto& [nu, v] : f.terms()) out.add_term(nu, v * c);
    return out;
}

CharSeries series_shift(const CharSeries& f, const Weight& lam) {
    CharSeries out(f.spec(), f.anchor() + lam, f.bounds());
    for (const auto& [nu, v] : f.terms()) out.add_term(nu, v);
    return out;
}

CharSeries series_mul(const CharSeries& f, const CharSeries& g) {
    require_same_box(f, g);
    std::map<Weight, Integer> acc;
    for (const auto& [nf, cf] : f.terms())
        for (const auto& [ng, cg] : g.terms()) {
            auto [it, fresh] = acc.try_emplace(nf + ng, cf * cg);
            if (!fresh) it->second += cf * cg;
        }
    CharSeries out(f.spec(), f.anchor() + g.anchor(), f.bounds());
    for (const auto& [nu, c] : acc) out.add_term(nu, c);
    return out;
}

CharSeries series_invert_unit(const CharSeries& f) {
    Integer c0 = f.coef(Weight{});
    if (c0 != 1 && c0 != -1)
        throw ArithmeticError("inversion requires constant term +1 or -1");
    std::map<Weight, Integer> u; // f = c0 * (1 - u) with u positively graded
    for (const auto& [nu, c] : f.terms()) {
        if (nu.is_zero()) continue;
        if (series_grade(f.spec(), nu) <= 0)
            throw ArithmeticError("inversion requires a positively graded remainder");
        u.emplace(nu, -c0 * c);
    }
    CharSeries out(f.spec(), -f.anchor(), f.bounds());
    std::map<Weight, Integer> power{{Weight{}, Integer(1)}};
    long long rounds = 0;
    while (!power.empty()) {
        if (++rounds > 200000) throw ResourceError("inversion failed to terminate");
        for (const auto& [nu, c] : power) out.add_term(nu, c0 * c);
        std::map<Weight, Integer> next;
        for (const auto& [np, cp] : power)
            for (const auto& [nuu, cu] : u) {
                Weight key = np + nuu;
                if (!out.in_region(key)) continue;
                auto [it, fresh] = next.try_emplace(key, cp * cu);
                if (!fresh) {
                    it->second += cp * cu;
                    if (it->second == 0) next.erase(it);
                }
            }
        power = std::move(next);
    }
    return out;
}

CharSeries rdot(const AlgebraSpec& s, Bounds b) {
    require_usable(s);
    CharSeries evens = CharSeries::unit(s, Weight{}, b);
    for (const auto& alpha : s.even_pos) evens = binomial_mul(evens, alpha, -1);
    CharSeries odds = CharSeries::unit(s, Weight{}, b);
    for (const auto& beta : s.odd_pos) odds = binomial_mul(odds, beta, +1);
    return series_mul(evens, series_invert_unit(odds));
}

CharSeries affine_r(const AlgebraSpec& s, Bounds b) {
    require_usable(s);
    CharSeries evens = CharSeries::unit(s, Weight{}, b);
    CharSeries odds = CharSeries::unit(s, Weight{}, b);
    for (const auto& alpha : s.even_pos) evens = binomial_mul(evens, alpha, -1);
    for (const auto& beta : s.odd_pos) odds = binomial_mul(odds, beta, +1);
    for (long long n = 1; n <= b.ddeg; ++n) {
        Weight shift = rat(n) * delta();
        for (int i = 0; i < s.dim_h; ++i) evens = binomial_mul(evens, shift, -1);
        for (const auto& alpha : s.even_pos) {
            evens = binomial_mul(evens, shift + alpha, -1);
            evens = binomial_mul(evens, shift - alpha, -1);
        }
        for (const auto& beta : s.odd_pos) {
            odds = binomial_mul(odds, shift + beta, +1);
            odds = binomial_mul(odds, shift - beta, +1);
        }
    }
    return series_mul(evens, series_invert_unit(odds));
}

CharSeries weyl_mu_sum(const AlgebraSpec& s, Subgroup sel, const Weight& lam, Bounds b) {
    require_usable(s);
    if (sel != Subgroup::Wdot && sel != Subgroup::WdotSharp && sel != Subgroup::WdotPrime &&
        sel != Subgroup::WdotSecond)
        throw PreconditionError("finite reflection-group selector required");
    CharSeries out(s, lam, b);
    Rational cap = box_cap(s, b);
    size_t n = s.S.size();
    for (const auto& w : enumerate_group(s, sel, 0)) {
        Weight shift = lam - apply_element(s, w, lam);
        if (decompose(shift).j != 0)
            throw StructuralError("finite group element moved the delta direction");
        long long cap_m = floor_ll(cap - series_grade(s, shift));
        if (cap_m < 0) continue;
        std::vector<long long> m(n, 0);
        for (;;) {
            long long total = 0;
            for (auto v : m) total += v;
            if (total <= cap_m)
                out.add_term(shift + wmu_expand(s, w, m),
                             Integer(w.sign) * (total % 2 ? -1 : 1));
            // odometer over {0..cap_m}^n
            size_t i = 0;
            while (i < n && m[i] == cap_m) m[i++] = 0;
            if (i == n) break;
            ++m[i];
        }
    }
    return out;
}

DenomReport compare_series(const CharSeries& f, const CharSeries& g) {
    require_same_box(f, g);
    if (f.anchor() != g.anchor()) throw PreconditionError("series with different anchors");
    std::vector<Weight> keys;
    for (const auto& [nu, c] : f.terms()) keys.push_back(nu);
    for (const auto& [nu, c] : g.terms())
        if (f.terms().find(nu) == f.terms().end()) keys.push_back(nu);
    std::sort(keys.begin(), keys.end(), [&](const Weight& a, const Weight& b2) {
        Rational ga = series_grade(f.spec(), a), gb = series_grade(f.spec(), b2);
        if (ga != gb) return ga < gb;
        return a < b2;
    });
    for (const auto& nu : keys)
        if (f.coef(nu) != g.coef(nu)) return {false, nu, f.coef(nu), g.coef(nu)};
    return {};
}

DenomReport denominator_check(const AlgebraSpec& s, Bounds b) {
    // The product expansion over S is resummed against reflections of simple
    // roots, so every member of S must itself be simple.  The so-first rank-2
    // presentations keep a base with a single isotropic simple root and cannot
    // host a full maximal isotropic set; their sp-first partners can.
    for (const Weight& beta : s.S) {
        if (std::find(s.base.begin(), s.base.end(), beta) == s.base.end()) {
            std::string msg = s.id +
                ": the recorded maximal isotropic set is not contained in the base, "
                "so the denominator expansion does not apply";
            if (s.id.rfind("osp:4|", 0) == 0)
                msg += "; use the sp-first presentation spo:" + s.id.substr(6) + "|4";
            throw PreconditionError(msg);
        }
    }
    CharSeries lhs = series_shift(rdot(s, b), s.rho_dot);
    CharSeries rhs = weyl_mu_sum(s, Subgroup::WdotPrime, s.rho_dot, b);
    return compare_series(lhs, rhs);
}

} // namespace wmin
