#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wmin/aplus.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

using namespace wmin;

namespace {

// Brute-force census over bitmasks of the candidate roots; the subset walk,
// ordering, and statistics of enumerate_aplus are not reused.
std::vector<std::pair<long long, Weight>> census_oracle(const AlgebraSpec& s, long long cap) {
    auto cands = shifted_odd_roots(s, cap);
    REQUIRE(cands.size() < 22);
    std::vector<long long> h(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) h[i] = s.affine_htt(cands[i]);
    std::vector<std::pair<long long, Weight>> out;
    for (unsigned long mask = 1; mask < (1ul << cands.size()); ++mask) {
        Weight mu;
        long long ht = 0;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (mask >> i & 1) {
                mu += cands[i];
                ht += h[i];
            }
        if (ht > cap) continue;
        bool dom = true;
        for (const Weight& al : s.even_simples) {
            Rational t = rat(-2) * s.pair(mu, al) / s.norm2(al);
            if (!is_integer(t) || t < rat(0)) {
                dom = false;
                break;
            }
        }
        if (dom) out.emplace_back(ht, mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("lowering roots across the unitary presentations") {
    // (id, expected l); l must also equal 4 - 2*hvee
    const std::vector<std::pair<std::string, long long>> table = {
        {"lie:A1", 0},  {"spo:2|1", 1}, {"sl:2|1", 2},   {"spo:2|3", 3},
        {"psl:2|2", 4}, {"spo:2|4", 4}, {"d21a:1/2", 4}, {"d21a:2", 4},
        {"spo:2|5", 5}, {"sl:2|3", 6},  {"g3", 7},       {"sl:2|4", 8},
        {"f4", 8},
    };
    for (const auto& [id, l] : table) {
        INFO(id);
        auto s = build_algebra(id);
        CHECK(s.unitary_type);
        auto low = lowering_odd_roots(s);
        CHECK((long long)low.size() == l);
        CHECK(rat(l) == rat(4) - rat(2) * s.hvee);
        CHECK(low.size() == s.odd_pos.size()); // exactly half of the odd system lowers
        for (const Weight& b : low) {
            CHECK(rat(2) * s.pair(b, s.theta) == -s.norm2(s.theta));
            CHECK(s.is_odd_root(b));
        }
        CHECK(std::is_sorted(low.begin(), low.end()));
    }

    for (const std::string id :
         {"sl:3|1", "sl:3|2", "psl:3|3", "spo:4|3", "osp:4|2", "osp:5|2", "g3:alt", "f4:alt",
          "d21a:-2", "lie:B2"}) {
        INFO(id);
        auto s = build_algebra(id);
        CHECK(!s.unitary_type);
        CHECK_THROWS_AS((void)lowering_odd_roots(s), PreconditionError);
        CHECK_THROWS_AS((void)enumerate_aplus(s, 4), PreconditionError);
    }
}

TEST_CASE("shifted roots and their heights") {
    auto s = build_algebra("sl:2|1");
    auto got = shifted_odd_roots(s, 3);
    std::vector<Weight> expect = {delta() + eps(2) - del(1), delta() + del(1) - eps(1)};
    std::sort(expect.begin(), expect.end());
    std::vector<Weight> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    CHECK(sorted_got == expect);
    for (const Weight& r : got) CHECK(s.affine_htt(r) == 2);

    auto p = build_algebra("psl:2|2");
    auto cand = shifted_odd_roots(p, 8);
    CHECK(cand.size() == 12); // 8 at one delta, 4 at two deltas
    long long prev = 0;
    for (const Weight& r : cand) {
        long long h = p.affine_htt(r);
        CHECK(h >= 1);
        CHECK(h <= 8);
        CHECK(h >= prev);
        prev = h;
        Decomp d = decompose(r);
        CHECK(d.lambda0_coef == rat(0));
        CHECK(is_integer(d.j));
        CHECK(to_integer(d.j) >= 1);
        CHECK(p.is_odd_root(d.mu_dot));
    }
}

TEST_CASE("enumeration matches the brute-force census") {
    for (const auto& [id, cap] : std::vector<std::pair<std::string, long long>>{
             {"sl:2|1", 6}, {"psl:2|2", 8}, {"spo:2|3", 6}, {"g3", 8}}) {
        INFO(id << " cap " << cap);
        auto s = build_algebra(id);
        auto oracle = census_oracle(s, cap);
        auto stream = enumerate_aplus(s, cap);
        std::vector<std::pair<long long, Weight>> got;
        for (const auto& A : stream) got.emplace_back(A.height, A.mu);
        std::sort(got.begin(), got.end());
        CHECK(got == oracle);
    }

    // tiny case pinned by hand: two singletons fit below height 3, their union does not
    CHECK(enumerate_aplus(build_algebra("sl:2|1"), 3).size() == 2);
}

TEST_CASE("stream order and subset statistics") {
    auto s = build_algebra("psl:2|2");
    auto low = lowering_odd_roots(s);
    auto stream = enumerate_aplus(s, 8);
    REQUIRE(!stream.empty());
    long long prev = 0;
    for (const auto& A : stream) {
        CHECK(A.height >= prev); // with positive member heights this yields the order guarantee
        prev = A.height;
        CHECK(std::is_sorted(A.roots.begin(), A.roots.end()));
        CHECK(std::adjacent_find(A.roots.begin(), A.roots.end()) == A.roots.end());
        Weight sum;
        for (const Weight& r : A.roots) sum += r;
        CHECK(sum == A.mu);
        CHECK(s.affine_htt(A.mu) == A.height);
        Decomp d = decompose(A.mu);
        CHECK(rat(A.m_delta) == d.j);
        CHECK(minus_mu_even_dominant(s, A.mu));

        long long members = 0, Dsum = 0, Dabs = 0, Dsq = 0;
        Weight finite;
        for (std::size_t i = 0; i < low.size(); ++i) {
            CHECK(A.a[i] == A.a_plus[i] - A.a_minus[i]);
            members += A.a_plus[i] + A.a_minus[i];
            Dsum += A.a[i];
            Dabs += A.a[i] < 0 ? -A.a[i] : A.a[i];
            Dsq += A.a[i] * A.a[i];
            finite += rat(A.a[i]) * low[i];
        }
        CHECK(members == (long long)A.roots.size());
        CHECK(Dsum == A.D);
        CHECK(Dabs == A.D_abs);
        CHECK(Dsq == A.D_sq);
        CHECK(finite == d.mu_dot);
        // pairing with theta reads off -D
        CHECK(rat(2) * s.pair(A.mu, s.theta) == rat(-A.D) * s.norm2(s.theta));
        CHECK(A.D >= 0); // dominance forces it
    }
}

TEST_CASE("u values for the smallest subsets") {
    auto s = build_algebra("psl:2|2");
    auto stream = enumerate_aplus(s, 8);
    long long singles = 0, imaginary = 0;
    for (const auto& A : stream) {
        if (A.roots.size() == 1 && A.m_delta == 1) {
            ++singles;
            CHECK(u_value(s, rat(3), A) == rat(7));
        }
        if (decompose(A.mu).mu_dot.is_zero()) {
            ++imaginary;
            CHECK(A.mu == rat(2) * delta());
            CHECK(u_value(s, rat(3), A) == rat(12)); // 2(k + hvee) per unit of delta
        }
    }
    // the negative-norm even simple root rejects two of the four candidates
    CHECK(singles == 2);
    CHECK(imaginary == 4);

    auto rep = check_inequalities(s, rat(3), 8);
    CHECK(rep.total_sets == (long long)rep.records.size() + imaginary);
}

TEST_CASE("the inequality engine clears the threshold levels") {
    const std::vector<std::pair<std::string, long long>> anchors = {
        {"sl:2|3", 5}, {"spo:2|3", 2}, {"psl:2|2", 3}, {"g3", 6}, {"f4", 7}, {"d21a:1/2", 3},
    };
    for (const auto& [id, k] : anchors) {
        INFO(id << " at level " << k);
        auto s = build_algebra(id);
        CHECK(rat(k) + rat(2) * s.hvee >= rat(5, 2)); // the regime the bound covers
        auto rep = check_inequalities(s, rat(k), 8);
        CHECK(rep.all_pass);
        CHECK(rep.violations.empty());
        CHECK(rep.boundary.empty()); // above the threshold both inequalities are strict
        CHECK(!rep.records.empty());
        for (const auto& r : rep.records) {
            CHECK(r.sum_bound_holds);
            CHECK(r.norm_bound_holds);
            CHECK(r.u > rat(0));
            CHECK(r.second_bound < r.u);
        }
    }
}

TEST_CASE("below the threshold the half-theta set fails") {
    auto s = build_algebra("psl:2|2");
    const Weight marked = rat(4) * delta() - rat(2) * s.theta;

    auto rep = check_inequalities(s, rat(2), 10);
    CHECK(!rep.all_pass);
    CHECK(!rep.violations.empty());
    bool found = false;
    for (std::size_t i : rep.violations) {
        const auto& r = rep.records[i];
        if (r.A.mu != marked) continue;
        found = true;
        CHECK(r.A.roots.size() == 4);
        CHECK(r.A.height == 10);
        CHECK(r.u == rat(12));
        CHECK(r.second_bound == rat(16)); // fails by 4, not merely at the boundary
        CHECK(r.status == IneqStatus::Violated);
        CHECK(r.sum_bound_holds);
        CHECK(r.norm_bound_holds);
    }
    CHECK(found);

    // one level up the same set passes with room to spare
    auto rep3 = check_inequalities(s, rat(3), 10);
    CHECK(rep3.all_pass);
    for (const auto& r : rep3.records)
        if (r.A.mu == marked) {
            CHECK(r.u == rat(20));
            CHECK(r.second_bound == rat(16));
            CHECK(r.status == IneqStatus::OkStrict);
        }
}

TEST_CASE("engine preconditions") {
    CHECK_THROWS_AS((void)enumerate_aplus(build_algebra("psl:2|2"), 0), PreconditionError);
    CHECK_THROWS_AS((void)check_inequalities(build_algebra("osp:4|2"), rat(1), 4),
                    PreconditionError);
    CHECK_THROWS_AS((void)shifted_odd_roots(build_algebra("osp:3|2"), 4), PreconditionError);
}
