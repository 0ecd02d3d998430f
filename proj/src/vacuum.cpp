#include "wmin/vacuum.hpp"

#include "wmin/linalg.hpp"
#include "wmin/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wmin {

namespace {

Rational box_cap(const AlgebraSpec& s, const Bounds& b) {
    return rat(b.height) + rat(b.ddeg) * rat(1 + s.htt_Theta);
}

long long floor_ll(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return to_ll(q);
}

void require_usable(const AlgebraSpec& s) {
    if (s.flagged) throw PreconditionError(s.id + ": " + s.flag_reason);
}

void require_noncritical(const AlgebraSpec& s, const Rational& k) {
    if (k + s.hvee == 0)
        throw PreconditionError(s.id + ": level " + k.get_str() +
                                " is critical; the zero locus is not discrete there");
}

// The translated-numerator operations additionally need the primed factor /
// coroot-translation setup to cover the simple quotient, which fails for the
// one-parameter rank-two family, for negative dual Coxeter number, and for
// bases not containing the isotropic set.
void require_translatable(const AlgebraSpec& s, const Rational& k) {
    require_usable(s);
    if (s.family == "d21a" || (s.family == "osp" && s.m == 4 && s.n == 2))
        throw PreconditionError(
            s.id + ": no complete numerator formula for the one-parameter rank-two family");
    for (const Weight& beta : s.S) {
        if (std::find(s.base.begin(), s.base.end(), beta) == s.base.end()) {
            std::string hint;
            if (s.family == "osp")
                hint = "; use spo:" + std::to_string(s.n) + "|" + std::to_string(s.m) +
                       " for this pair";
            throw PreconditionError(s.id + ": isotropic set is not inside the base" + hint);
        }
    }
    if (s.hvee < 0)
        throw PreconditionError(s.id + ": numerator formula needs a nonnegative dual Coxeter number");
    if (!is_integer(k) || k < 0)
        throw PreconditionError("level must be a nonnegative integer, got " + k.get_str());
    require_noncritical(s, k);
}

Weight anchor_weight(const AlgebraSpec& s, const Rational& k) {
    Weight lam = s.rho;
    lam += k * lambda0();
    return lam;
}

// visit every nonnegative integer combination of the base with height <= cap
void for_cone(const AlgebraSpec& s, long long cap,
              const std::function<void(const Weight&)>& fn) {
    if (cap < 0) return;
    const size_t n = s.base.size();
    if (n == 0) {
        fn(Weight{});
        return;
    }
    std::function<void(size_t, long long, Weight)> rec = [&](size_t i, long long left,
                                                             Weight acc) {
        if (i + 1 == n) {
            for (long long c = 0; c <= left; ++c) {
                fn(acc);
                acc += s.base[i];
            }
            return;
        }
        for (long long c = 0; c <= left; ++c) {
            rec(i + 1, left - c, acc);
            acc += s.base[i];
        }
    };
    rec(0, cap, Weight{});
}

void sort_by_grade(const AlgebraSpec& s, std::vector<Weight>& ws) {
    std::sort(ws.begin(), ws.end(), [&](const Weight& x, const Weight& y) {
        Rational gx = series_grade(s, x), gy = series_grade(s, y);
        if (gx != gy) return gx < gy;
        return x < y;
    });
}

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num(r.get_num()), den(r.get_den());
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn) / Rational(sd);
}

// Alternating numerator sum over t_nu * y with anchor k Lambda0 + rho. Every
// term with a key inside the box is produced: for a coordinate radius t on
// the translation basis, the delta-degree of the reflected anchor offset
// grows at least like (k + hvee)/2 * lambda_hat * t^2 - B * t, where
// lambda_hat = 1/tr(G^{-1}) bounds the smallest Gram eigenvalue from below
// and B bounds the mixed term, so the scan below ends past the last radius
// that can reach delta-degree <= ddeg.
CharSeries translated_numerator(const AlgebraSpec& s, const Rational& k, Bounds b,
                                bool include_zero) {
    Weight lam = anchor_weight(s, k);
    CharSeries out(s, lam, b);
    Rational cap = box_cap(s, b);
    Rational kh = k + s.hvee;
    auto ys = enumerate_group(s, Subgroup::WdotPrime, 0);
    std::vector<Weight> basis = qprime_basis(s);
    const size_t r = basis.size();
    const size_t ns = s.S.size();

    long long reach = -1;
    if (r > 0 && b.ddeg >= 0) {
        Mat g(r, Vec(r, 0));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) g[i][j] = s.pair(basis[i], basis[j]);
        Rational trinv = 0;
        for (size_t i = 0; i < r; ++i) {
            Vec e(r, 0);
            e[i] = 1;
            auto x = solve(g, e);
            if (!x) throw StructuralError(s.id + ": degenerate Gram matrix on the translation basis");
            trinv += (*x)[i];
        }
        Rational lam_hat = 1 / trinv;
        Rational bsum = 0;
        for (size_t i = 0; i < r; ++i) {
            Rational best = 0;
            for (const auto& y : ys) {
                Rational v = s.pair(apply_element(s, y, s.rho_dot), basis[i]);
                if (v < 0) v = -v;
                if (v > best) best = v;
            }
            bsum += best;
        }
        long long t = 0;
        while (kh / 2 * lam_hat * rat(t) * rat(t) - bsum * rat(t) <= rat(b.ddeg)) {
            ++t;
            if (t > 100000) throw ResourceError("translation radius scan ran away");
        }
        reach = t - 1;
    }

    auto process = [&](const Weight& nu) {
        WeylElement tnu = translation_element(s, nu);
        for (const auto& y : ys) {
            WeylElement w = compose(s, tnu, y);
            Weight ref = lam - apply_element(s, w, lam);
            Decomp dr = decompose(ref);
            if (dr.lambda0_coef != 0)
                throw StructuralError("numerator offset acquired a Lambda0 component");
            if (dr.j > rat(b.ddeg)) continue; // every key of this term is deeper
            long long cap_m = floor_ll(cap - series_grade(s, ref));
            if (cap_m < 0) continue;
            std::vector<long long> m(ns, 0);
            for (;;) {
                long long total = 0;
                for (long long v : m) total += v;
                if (total <= cap_m)
                    out.add_term(ref + wmu_expand(s, w, m),
                                 Integer(w.sign) * (total % 2 ? -1 : 1));
                size_t i = 0;
                while (i < ns && m[i] == cap_m) m[i++] = 0;
                if (i == ns) break;
                ++m[i];
            }
        }
    };

    if (include_zero) process(Weight{});
    if (reach >= 0 && r > 0) {
        std::vector<long long> c(r, -reach);
        for (;;) {
            bool zero = true;
            for (long long v : c)
                if (v != 0) zero = false;
            if (!zero) {
                Weight nu;
                for (size_t i = 0; i < r; ++i) nu += rat(c[i]) * basis[i];
                process(nu);
            }
            size_t i = 0;
            while (i < r && c[i] == reach) c[i++] = -reach;
            if (i == r) break;
            ++c[i];
        }
    }
    return out;
}

Weight label_part(const Weight& w, BasisTag tag) {
    Weight out;
    for (const auto& [l, c] : w.terms())
        if (l.tag == tag) out.set(l, c);
    return out;
}

bool all_integral(const Vec& v) {
    for (const auto& c : v)
        if (!is_integer(c)) return false;
    return true;
}

} // namespace

Rational phi(const AlgebraSpec& s, const Rational& k, const Weight& mu) {
    require_usable(s);
    Weight lam = anchor_weight(s, k);
    return 2 * s.pair(lam, mu) - s.norm2(mu);
}

std::vector<Weight> enumerate_Uk(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_usable(s);
    require_noncritical(s, k);
    long long cap = floor_ll(box_cap(s, b));
    if (cap < 0) return {};
    // Write mu = j*delta + (nu - j*Theta) with nu in the nonneg root cone;
    // phi(mu) is then a quadratic polynomial in j, so one cone pass suffices.
    Rational theta2 = s.pair(s.Theta, s.Theta);
    Rational rho_theta = s.pair(s.rho_dot, s.Theta);
    Rational kh = k + s.hvee;
    std::vector<Weight> out;
    auto push_j = [&](const Weight& nu, long long left, const Rational& j) {
        if (!is_integer(j)) return;
        long long jj = to_ll(to_integer(j));
        if (jj < 0 || jj > b.ddeg || jj > left) return;
        out.push_back(rat(jj) * delta() + nu - rat(jj) * s.Theta);
    };
    for_cone(s, cap, [&](const Weight& nu) {
        long long left = cap - s.htt(nu);
        Rational qa = -theta2;
        Rational qb = rat(2) * kh - rat(2) * rho_theta + rat(2) * s.pair(nu, s.Theta);
        Rational qc = rat(2) * s.pair(s.rho_dot, nu) - s.pair(nu, nu);
        if (qa != 0) {
            auto root = sqrt_rational(qb * qb - rat(4) * qa * qc);
            if (!root) return;
            push_j(nu, left, (-qb + *root) / (rat(2) * qa));
            if (*root != 0) push_j(nu, left, (-qb - *root) / (rat(2) * qa));
        } else if (qb != 0) {
            push_j(nu, left, -qc / qb);
        } else if (qc == 0) {
            long long hi = std::min(b.ddeg, left);
            for (long long j = 0; j <= hi; ++j) push_j(nu, left, rat(j));
        }
    });
    sort_by_grade(s, out);
    return out;
}

CharSeries jantzen_sum(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_usable(s);
    require_noncritical(s, k);
    CharSeries kd = rdot(s, b);
    CharSeries out(s, Weight{}, b);
    for (const Weight& mu : enumerate_Uk(s, k, b)) {
        Decomp d = decompose(mu);
        long long j = to_ll(to_integer(d.j));
        if (j < 1) continue;
        Integer c = 0;
        for (long long r = 1; r <= j; ++r) {
            if (j % r != 0) continue;
            c += Integer(s.dim_h) * kd.coef(d.mu_dot); // imaginary root j/r * delta
            for (const auto& root : s.roots) {
                Integer v = kd.coef(d.mu_dot - rat(r) * root.w);
                if (v == 0) continue;
                if (root.odd && r % 2 == 0)
                    c -= v;
                else
                    c += v;
            }
        }
        if (c != 0) out.add_term(mu, c);
    }
    return out;
}

CharSeries jantzen_sum_liealg(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_usable(s);
    if (!s.odd_pos.empty())
        throw PreconditionError(s.id + ": closed form needs a root system without odd roots");
    if (!is_integer(k) || k < 0)
        throw PreconditionError("level must be a nonnegative integer, got " + k.get_str());
    require_noncritical(s, k);
    Weight lam = anchor_weight(s, k);
    Rational kh = k + s.hvee;
    CharSeries out(s, Weight{}, b);
    auto group = enumerate_group(s, Subgroup::Wdot, 0);
    for (long long sd = 1; sd <= 100000; ++sd) {
        bool any = false;
        for (const auto& root : s.roots) {
            Rational pairing = 2 * (rat(sd) * kh + s.pair(s.rho_dot, root.w)) / s.norm2(root.w);
            if (rat(sd) * pairing > rat(b.ddeg)) continue; // grows with sd for every root
            any = true;
            Weight alpha = rat(sd) * delta() + root.w;
            Weight refl = lam - pairing * alpha; // s_alpha(lam)
            for (const auto& w : group)
                out.add_term(lam - apply_element(s, w, refl), Integer(w.sign));
        }
        if (!any) break;
    }
    return out;
}

CharSeries vacuum_module_character(const AlgebraSpec& s, Bounds b) {
    return series_mul(series_invert_unit(affine_r(s, b)), rdot(s, b));
}

CharSeries kw_vacuum_character(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_translatable(s, k);
    CharSeries num = translated_numerator(s, k, b, true);
    CharSeries shifted = series_shift(num, -num.anchor());
    return series_mul(shifted, series_invert_unit(affine_r(s, b)));
}

CharSeries q_l_series(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_translatable(s, k);
    CharSeries acc = translated_numerator(s, k, b, false);
    return series_shift(acc, -acc.anchor());
}

JantzenReport length_two_test(const AlgebraSpec& s, const Rational& k, Bounds b) {
    require_translatable(s, k);
    JantzenReport rep{k, b, jantzen_sum(s, k, b), q_l_series(s, k, b)};
    CharSeries sum = series_add(rep.q_j, rep.q_l);
    std::vector<Weight> keys;
    for (const auto& [nu, c] : sum.terms())
        if (c != 0) keys.push_back(nu);
    if (keys.empty()) return rep;
    sort_by_grade(s, keys);
    rep.verdict = LengthVerdict::LengthGreaterThanTwo;
    rep.witness = keys.front();
    rep.witness_coef = sum.coef(keys.front());
    return rep;
}

std::pair<YSet, YSet> y_sets(const AlgebraSpec& s, const Rational& k, const Weight& mu0,
                             Bounds b) {
    require_translatable(s, k);
    if (s.S.empty()) {
        if (!mu0.is_zero())
            throw PreconditionError("mu0 must lie in the integer span of the isotropic set");
    } else {
        SpanSolver span(s.S);
        auto coords = span.express(mu0);
        if (!coords || !all_integral(*coords))
            throw PreconditionError("mu0 must lie in the integer span of the isotropic set");
    }

    const bool balanced = s.family == "spo" && s.n == s.m + 2;
    Weight zeta = label_part(mu0, BasisTag::Eps);
    std::optional<SpanSolver> plus_span;
    if (balanced) {
        std::vector<Weight> plus_basis;
        for (const Weight& beta : s.base) {
            Weight p = label_part(beta, BasisTag::Del);
            if (!p.is_zero()) plus_basis.push_back(p);
        }
        plus_span.emplace(plus_basis);
    }

    auto project = [&](const CharSeries& q, YSource src) {
        YSet yset{mu0, src, {}};
        std::set<Weight> seen;
        for (const auto& [kappa, c] : q.terms()) {
            if (c == 0) continue;
            Weight sig_dot = decompose(-kappa).mu_dot;
            if (balanced) {
                if (!(label_part(sig_dot, BasisTag::Eps) == -zeta)) continue;
                Weight pt = -label_part(sig_dot, BasisTag::Del);
                auto coords = plus_span->express(pt);
                if (!coords || !all_integral(*coords)) continue;
                seen.insert(pt);
            } else {
                Weight eta = -mu0 - sig_dot;
                auto coords = s.base_coords(eta);
                if (!coords || !all_integral(*coords)) continue;
                bool nonneg = true; // points live in the nonnegative root cone
                for (const Rational& c2 : *coords)
                    if (c2 < 0) { nonneg = false; break; }
                if (!nonneg) continue;
                if (!ps_project(s, eta).is_zero()) continue;
                seen.insert(eta);
            }
        }
        yset.points.assign(seen.begin(), seen.end());
        sort_by_grade(s, yset.points);
        return yset;
    };

    CharSeries qj = jantzen_sum(s, k, b);
    CharSeries ql = q_l_series(s, k, b);
    return {project(qj, YSource::FromJantzen), project(ql, YSource::FromKW)};
}

} // namespace wmin
