#include "wmin/aplus.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace wmin {

namespace {

void require_unitary(const AlgebraSpec& s) {
    if (s.flagged) throw PreconditionError(s.id + ": " + s.flag_reason);
    if (!s.unitary_type)
        throw PreconditionError(
            s.id + ": the level-inequality engine needs the positive-norm even roots "
                   "to be exactly the pair +-theta");
}

long long max_odd_height(const AlgebraSpec& s) {
    long long h = 0;
    for (const Weight& b : s.odd_pos) h = std::max(h, s.htt(b));
    return h;
}

} // namespace

std::vector<Weight> lowering_odd_roots(const AlgebraSpec& s) {
    require_unitary(s);
    const Rational tn = s.norm2(s.theta);
    std::vector<Weight> out;
    for (const Weight& b : s.odd_pos) {
        for (const Weight& g : {b, -b}) {
            Rational p = rat(2) * s.pair(g, s.theta) / tn;
            if (p == rat(-1))
                out.push_back(g);
            else if (p != rat(1))
                throw StructuralError(s.id + ": odd root " + g.str() +
                                      " does not pair to +-1 with theta");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> shifted_odd_roots(const AlgebraSpec& s, long long height_cap) {
    if (s.flagged) throw PreconditionError(s.id + ": " + s.flag_reason);
    const long long dht = 1 + s.htt_Theta;
    const long long reach = max_odd_height(s);
    std::vector<std::pair<long long, Weight>> keyed;
    for (long long j = 1; j * dht - reach <= height_cap; ++j) {
        for (const Weight& b : s.odd_pos) {
            for (const Weight& g : {b, -b}) {
                long long h = j * dht + s.htt(g);
                if (h >= 1 && h <= height_cap) keyed.emplace_back(h, rat(j) * delta() + g);
            }
        }
        if (s.odd_pos.empty()) break;
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Weight> out;
    out.reserve(keyed.size());
    for (auto& [h, w] : keyed) out.push_back(std::move(w));
    return out;
}

bool minus_mu_even_dominant(const AlgebraSpec& s, const Weight& mu) {
    for (const Weight& al : s.even_simples) {
        Rational v = rat(2) * s.pair(-mu, al) / s.norm2(al);
        if (!is_integer(v) || v < rat(0)) return false;
    }
    return true;
}

namespace {

OddSubset make_subset(const AlgebraSpec& s, const std::vector<Weight>& lowering,
                      std::vector<Weight> roots) {
    OddSubset A;
    A.roots = std::move(roots);
    std::sort(A.roots.begin(), A.roots.end());
    for (const Weight& r : A.roots) A.mu += r;
    A.height = s.affine_htt(A.mu);
    Decomp d = decompose(A.mu);
    A.m_delta = to_ll(to_integer(d.j));
    A.a_plus.assign(lowering.size(), 0);
    A.a_minus.assign(lowering.size(), 0);
    for (const Weight& r : A.roots) {
        Weight g = decompose(r).mu_dot;
        auto hit = std::lower_bound(lowering.begin(), lowering.end(), g);
        if (hit != lowering.end() && *hit == g) {
            ++A.a_plus[static_cast<std::size_t>(hit - lowering.begin())];
            continue;
        }
        Weight ng = -g;
        hit = std::lower_bound(lowering.begin(), lowering.end(), ng);
        if (hit != lowering.end() && *hit == ng) {
            ++A.a_minus[static_cast<std::size_t>(hit - lowering.begin())];
            continue;
        }
        throw StructuralError(s.id + ": finite part " + g.str() + " is not a lowering root");
    }
    A.a.assign(lowering.size(), 0);
    for (std::size_t i = 0; i < lowering.size(); ++i) {
        A.a[i] = A.a_plus[i] - A.a_minus[i];
        A.D += A.a[i];
        A.D_abs += A.a[i] < 0 ? -A.a[i] : A.a[i];
        A.D_sq += A.a[i] * A.a[i];
    }
    return A;
}

} // namespace

std::vector<OddSubset> enumerate_aplus(const AlgebraSpec& s, long long height_cap) {
    require_unitary(s);
    if (height_cap < 1) throw PreconditionError("height cap must be at least 1");
    const std::vector<Weight> lowering = lowering_odd_roots(s);
    const std::vector<Weight> cands = shifted_odd_roots(s, height_cap);
    std::vector<long long> h(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) h[i] = s.affine_htt(cands[i]);

    std::vector<OddSubset> out;
    std::vector<Weight> pick;
    std::function<void(std::size_t, long long)> walk = [&](std::size_t from, long long used) {
        for (std::size_t i = from; i < cands.size(); ++i) {
            if (used + h[i] > height_cap) break; // candidates sorted by height
            pick.push_back(cands[i]);
            if (minus_mu_even_dominant(s, [&] {
                    Weight m;
                    for (const Weight& r : pick) m += r;
                    return m;
                }()))
                out.push_back(make_subset(s, lowering, pick));
            walk(i + 1, used + h[i]);
            pick.pop_back();
        }
    };
    walk(0, 0);

    std::sort(out.begin(), out.end(), [](const OddSubset& x, const OddSubset& y) {
        if (x.height != y.height) return x.height < y.height;
        return std::lexicographical_compare(x.roots.begin(), x.roots.end(), y.roots.begin(),
                                            y.roots.end());
    });
    return out;
}

Rational u_value(const AlgebraSpec& s, const Rational& k, const OddSubset& A) {
    return rat(2) * (k + s.hvee) * rat(A.m_delta) - (rat(1) - s.hvee) * s.pair(A.mu, s.theta) -
           s.norm2(A.mu);
}

IneqReport check_inequalities(const AlgebraSpec& s, const Rational& k, long long height_cap) {
    IneqReport rep;
    std::vector<OddSubset> stream = enumerate_aplus(s, height_cap);
    rep.total_sets = static_cast<long long>(stream.size());
    const long long l = static_cast<long long>(lowering_odd_roots(s).size());
    for (OddSubset& A : stream) {
        if (decompose(A.mu).mu_dot.is_zero()) continue; // pure-imaginary sum
        IneqRecord r;
        r.u = u_value(s, k, A);
        r.second_bound = rat(2) * (rat(2) - s.hvee) * s.pair(-A.mu, s.theta);
        const bool first_ok = r.u > rat(0);
        const bool second_ok = r.second_bound <= r.u;
        if (!first_ok || !second_ok)
            r.status = IneqStatus::Violated;
        else if (r.second_bound == r.u)
            r.status = IneqStatus::BoundaryEqual;
        else
            r.status = IneqStatus::OkStrict;
        r.sum_bound_holds = 2 * A.m_delta >= A.D_sq + A.D_abs;
        r.norm_bound_holds = rat(l * A.D_sq) >= rat(2) * s.norm2(A.mu);
        r.A = std::move(A);
        if (r.status == IneqStatus::Violated) rep.violations.push_back(rep.records.size());
        if (r.status == IneqStatus::BoundaryEqual) rep.boundary.push_back(rep.records.size());
        rep.records.push_back(std::move(r));
    }
    rep.all_pass = rep.violations.empty();
    return rep;
}

} // namespace wmin
