#include "wmin/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace wmin {

namespace {

// ---------------------------------------------------------------- catalog txt

struct FamilyRecord {
    bool has_alt = false;
    // diagonal form values where they are constant rationals
    std::map<std::string, Rational> diag;     // normal-normalization
    std::map<std::string, Rational> alt_diag; // ":alt" variant
};

struct CatalogData {
    int version = 0;
    std::map<std::string, FamilyRecord> families;
    std::map<char, int> lacety;
    // family -> (first parameter value, reason)
    std::map<std::string, std::pair<int, std::string>> flags;
};

CatalogData parse_catalog(const char* text) {
    CatalogData d;
    std::istringstream in(text);
    std::string line;
    std::string cur_record;
    bool cur_alt = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "version") {
            ls >> d.version;
        } else if (tok == "family") {
            std::string fam, alt;
            ls >> fam;
            if (ls >> alt && alt == "alt") d.families[fam].has_alt = true;
            else d.families[fam]; // ensure presence
        } else if (tok == "lacety") {
            std::string letter;
            int l = 0;
            ls >> letter >> l;
            if (letter.size() == 1) d.lacety[letter[0]] = l;
        } else if (tok == "flagged") {
            std::string fam, reason;
            int param = 0;
            ls >> fam >> param >> reason;
            d.flags[fam] = {param, reason};
        } else if (tok == "record") {
            std::string fam, alt;
            ls >> fam;
            cur_record = fam;
            cur_alt = (ls >> alt && alt == "alt");
            d.families[fam]; // record implies family presence
        } else if (tok == "diag" && !cur_record.empty()) {
            std::string label, value;
            ls >> label >> value;
            auto& rec = d.families[cur_record];
            (cur_alt ? rec.alt_diag : rec.diag)[label] = parse_rational(value);
        } else if (tok == "end") {
            cur_record.clear();
            cur_alt = false;
        }
    }
    if (d.version == 0) throw CatalogError("catalog data carries no version line");
    return d;
}

const CatalogData& catalog() {
    static const CatalogData d = parse_catalog(catalog_text());
    return d;
}

// Builders must agree with the diag constants recorded in the data file.
void check_recorded_diag(const AlgebraSpec& s) {
    if (s.flagged) return; // flagged entries carry their own scaling
    auto it = catalog().families.find(s.family);
    if (it == catalog().families.end()) throw CatalogError("unknown family " + s.family);
    const auto& rec = s.alt ? it->second.alt_diag : it->second.diag;
    for (const auto& [label, value] : rec) {
        BasisLabel l = label == "eps" ? eps_label(1) : del_label(1);
        if (!s.form.has_label(l)) continue;
        if (s.form.diag(l) != value)
            throw CatalogError(s.id + ": built form disagrees with catalog diag " + label);
    }
}

// ------------------------------------------------------------------ id parse

struct ParsedId {
    std::string family;
    bool alt = false;
    int m = 0, n = 0;
    char lie_type = 0;
    int lie_rank = 0;
    Rational a;
};

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_int(const std::string& s, const std::string& id) {
    if (!all_digits(s)) throw CatalogError("bad integer '" + s + "' in id " + id);
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw CatalogError("integer out of range in id " + id);
    }
}

std::pair<int, int> parse_mn(const std::string& arg, const std::string& id) {
    auto bar = arg.find('|');
    if (bar == std::string::npos) throw CatalogError("expected m|n in id " + id);
    return {parse_int(arg.substr(0, bar), id), parse_int(arg.substr(bar + 1), id)};
}

ParsedId parse_id(const std::string& id) {
    auto colon = id.find(':');
    ParsedId p;
    p.family = id.substr(0, colon);
    std::string arg = colon == std::string::npos ? std::string() : id.substr(colon + 1);
    if (!catalog().families.count(p.family))
        throw CatalogError("unknown algebra family '" + p.family + "' in id " + id);

    if (p.family == "lie") {
        if (arg.size() < 2 || arg[0] < 'A' || arg[0] > 'G')
            throw CatalogError("lie id needs a type letter A..G and a rank: " + id);
        p.lie_type = arg[0];
        p.lie_rank = parse_int(arg.substr(1), id);
    } else if (p.family == "sl" || p.family == "psl" || p.family == "spo" || p.family == "osp") {
        std::tie(p.m, p.n) = parse_mn(arg, id);
    } else if (p.family == "d21a") {
        p.a = parse_rational(arg);
    } else if (p.family == "g3" || p.family == "f4") {
        if (arg == "alt") p.alt = true;
        else if (!arg.empty()) throw CatalogError("unexpected suffix '" + arg + "' in id " + id);
    }
    return p;
}

[[noreturn]] void reject(const std::string& id, const std::string& why) {
    throw CatalogError(id + ": " + why);
}

// ---------------------------------------------------------------- primitives

Weight zero_weight() { return Weight(); }

std::vector<Weight> chain_diffs(const std::vector<Weight>& pts) {
    std::vector<Weight> out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) out.push_back(pts[i] - pts[i + 1]);
    return out;
}

void add_pm(std::vector<Root>& roots, const Weight& w, bool odd) {
    roots.push_back({w, odd});
    roots.push_back({-w, odd});
}

// eps_i - (1/3)(eps_1+eps_2+eps_3): the short-root combination for the G2 block
Weight g2_short(int i) {
    Weight avg = (eps(1) + eps(2) + eps(3)) * rat(1, 3);
    return eps(i) - avg;
}

// ------------------------------------------------------------ family builders

void set_diag_range(BilinearForm& form, BasisTag tag, int count, const Rational& v) {
    for (int i = 1; i <= count; ++i) form.set_diag({tag, i}, v);
}

void build_lie(AlgebraSpec& s) {
    const char t = s.lie_type;
    const int r = s.lie_rank;
    auto& R = s.roots;
    if (t == 'A') {
        if (r < 1) reject(s.id, "rank must be at least 1");
        set_diag_range(s.form, BasisTag::Eps, r + 1, 1);
        for (int i = 1; i <= r + 1; ++i)
            for (int j = 1; j <= r + 1; ++j)
                if (i != j) R.push_back({eps(i) - eps(j), false});
        for (int i = 1; i <= r; ++i) s.base.push_back(eps(i) - eps(i + 1));
        s.theta = eps(1) - eps(r + 1);
        s.dim_h = r;
        s.sdim = (long long)(r + 1) * (r + 1) - 1;
    } else if (t == 'B') {
        if (r < 2) reject(s.id, "lie:B1 coincides with lie:A1; use lie:A1");
        set_diag_range(s.form, BasisTag::Eps, r, 1);
        for (int i = 1; i <= r; ++i) {
            add_pm(R, eps(i), false);
            for (int j = i + 1; j <= r; ++j) {
                add_pm(R, eps(i) - eps(j), false);
                add_pm(R, eps(i) + eps(j), false);
            }
        }
        for (int i = 1; i < r; ++i) s.base.push_back(eps(i) - eps(i + 1));
        s.base.push_back(eps(r));
        s.theta = eps(1) + eps(2);
        s.dim_h = r;
        s.sdim = (long long)r * (2 * r + 1);
    } else if (t == 'C') {
        if (r < 2) reject(s.id, "lie:C1 coincides with lie:A1; use lie:A1");
        set_diag_range(s.form, BasisTag::Eps, r, rat(1, 2));
        for (int i = 1; i <= r; ++i) {
            add_pm(R, eps(i) * rat(2), false);
            for (int j = i + 1; j <= r; ++j) {
                add_pm(R, eps(i) - eps(j), false);
                add_pm(R, eps(i) + eps(j), false);
            }
        }
        for (int i = 1; i < r; ++i) s.base.push_back(eps(i) - eps(i + 1));
        s.base.push_back(eps(r) * rat(2));
        s.theta = eps(1) * rat(2);
        s.dim_h = r;
        s.sdim = (long long)r * (2 * r + 1);
    } else if (t == 'D') {
        if (r < 3) reject(s.id, r == 2 ? "lie:D2 is not simple (sl2 + sl2)" : "lie:D rank must be at least 3");
        set_diag_range(s.form, BasisTag::Eps, r, 1);
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                add_pm(R, eps(i) - eps(j), false);
                add_pm(R, eps(i) + eps(j), false);
            }
        for (int i = 1; i < r; ++i) s.base.push_back(eps(i) - eps(i + 1));
        s.base.push_back(eps(r - 1) + eps(r));
        s.theta = eps(1) + eps(2);
        s.dim_h = r;
        s.sdim = (long long)r * (2 * r - 1);
    } else if (t == 'G') {
        if (r != 2) reject(s.id, "type G exists only at rank 2");
        set_diag_range(s.form, BasisTag::Eps, 3, 1);
        for (int i = 1; i <= 3; ++i) {
            add_pm(R, g2_short(i), false);
            for (int j = i + 1; j <= 3; ++j) add_pm(R, eps(i) - eps(j), false);
        }
        s.base = {g2_short(2), eps(1) - eps(2)};
        s.theta = eps(1) - eps(3);
        s.dim_h = 2;
        s.sdim = 14;
    } else if (t == 'F') {
        if (r != 4) reject(s.id, "type F exists only at rank 4");
        set_diag_range(s.form, BasisTag::Eps, 4, 1);
        for (int i = 1; i <= 4; ++i) {
            add_pm(R, eps(i), false);
            for (int j = i + 1; j <= 4; ++j) {
                add_pm(R, eps(i) - eps(j), false);
                add_pm(R, eps(i) + eps(j), false);
            }
        }
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    for (int s4 : {1, -1})
                        R.push_back({(eps(1) * rat(s1) + eps(2) * rat(s2) + eps(3) * rat(s3) +
                                      eps(4) * rat(s4)) *
                                         rat(1, 2),
                                     false});
        s.base = {eps(2) - eps(3), eps(3) - eps(4), eps(4),
                  (eps(1) - eps(2) - eps(3) - eps(4)) * rat(1, 2)};
        s.theta = eps(1) + eps(2);
        s.dim_h = 4;
        s.sdim = 52;
    } else if (t == 'E') {
        if (r < 6 || r > 8) reject(s.id, "type E exists only at ranks 6, 7, 8");
        set_diag_range(s.form, BasisTag::Eps, 8, 1);
        auto half_sum = [](const std::vector<int>& signs) {
            Weight w;
            for (int i = 0; i < 8; ++i) w += eps(i + 1) * rat(signs[i], 2);
            return w;
        };
        if (r == 8) {
            for (int i = 1; i <= 8; ++i)
                for (int j = i + 1; j <= 8; ++j) {
                    add_pm(R, eps(i) - eps(j), false);
                    add_pm(R, eps(i) + eps(j), false);
                }
            for (int mask = 0; mask < 256; ++mask) {
                std::vector<int> signs(8);
                int minus = 0;
                for (int i = 0; i < 8; ++i) {
                    signs[i] = (mask >> i) & 1 ? -1 : 1;
                    minus += signs[i] < 0;
                }
                if (minus % 2 == 0) R.push_back({half_sum(signs), false});
            }
            s.theta = eps(7) + eps(8);
            s.sdim = 248;
        } else if (r == 7) {
            for (int i = 1; i <= 6; ++i)
                for (int j = i + 1; j <= 6; ++j) {
                    add_pm(R, eps(i) - eps(j), false);
                    add_pm(R, eps(i) + eps(j), false);
                }
            add_pm(R, eps(8) - eps(7), false);
            for (int mask = 0; mask < 64; ++mask) {
                std::vector<int> signs(8, 1);
                signs[6] = -1;
                int minus = 1;
                for (int i = 0; i < 6; ++i) {
                    signs[i] = (mask >> i) & 1 ? -1 : 1;
                    minus += signs[i] < 0;
                }
                if (minus % 2 == 0) { // even minus count over all eight coordinates
                    Weight w = half_sum(signs);
                    R.push_back({w, false});
                    R.push_back({-w, false});
                }
            }
            s.theta = eps(8) - eps(7);
            s.sdim = 133;
        } else {
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                    add_pm(R, eps(i) - eps(j), false);
                    add_pm(R, eps(i) + eps(j), false);
                }
            for (int mask = 0; mask < 32; ++mask) {
                std::vector<int> signs(8, 1);
                signs[5] = signs[6] = -1;
                int minus = 0;
                for (int i = 0; i < 5; ++i) {
                    signs[i] = (mask >> i) & 1 ? -1 : 1;
                    minus += signs[i] < 0;
                }
                if (minus % 2 == 0) {
                    Weight w = half_sum(signs);
                    R.push_back({w, false});
                    R.push_back({-w, false});
                }
            }
            s.theta = (eps(1) + eps(2) + eps(3) + eps(4) + eps(5) - eps(6) - eps(7) + eps(8)) *
                      rat(1, 2);
            s.sdim = 78;
        }
        // base alpha_1..alpha_r of the E8 list
        std::vector<Weight> e8_base = {
            (eps(1) - eps(2) - eps(3) - eps(4) - eps(5) - eps(6) - eps(7) + eps(8)) * rat(1, 2),
            eps(1) + eps(2),
            eps(2) - eps(1),
            eps(3) - eps(2),
            eps(4) - eps(3),
            eps(5) - eps(4),
            eps(6) - eps(5),
            eps(7) - eps(6)};
        s.base.assign(e8_base.begin(), e8_base.begin() + r);
        s.dim_h = r;
    } else {
        reject(s.id, "unknown lie type letter");
    }
    auto it = catalog().lacety.find(t);
    if (it == catalog().lacety.end()) throw CatalogError("no lacety entry for type " + std::string(1, t));
    s.lacety = it->second;
}

void build_sl(AlgebraSpec& s) {
    const int m = s.m, n = s.n;
    if (m == n) reject(s.id, "sl:n|n is not basic; use psl:" + std::to_string(n) + "|" + std::to_string(n));
    if (m < 2) reject(s.id, "sl:1|n coincides with sl:n|1; use sl:" + std::to_string(n) + "|1");
    if (n < 1) reject(s.id, "the odd block must be nonempty; use lie:A" + std::to_string(m - 1));
    set_diag_range(s.form, BasisTag::Eps, m, 1);
    set_diag_range(s.form, BasisTag::Del, n, -1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j) s.roots.push_back({eps(i) - eps(j), false});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) s.roots.push_back({del(i) - del(j), false});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) add_pm(s.roots, eps(i) - del(j), true);
    s.theta = eps(1) - eps(m);
    s.dim_h = m + n - 1;
    s.sdim = (long long)(m - n) * (m - n) - 1;

    std::vector<Weight> pts;
    if (m == 2) {
        pts.push_back(eps(1));
        for (int j = 1; j <= n; ++j) pts.push_back(del(j));
        pts.push_back(eps(2));
        s.base = chain_diffs(pts);
        s.S = {eps(1) - del(1)};
        if (n >= 2) s.S.push_back(del(n) - eps(2));
    } else if (m >= n + 2) {
        pts = {eps(1), eps(2)};
        for (int j = 1; j <= n; ++j) {
            pts.push_back(del(j));
            pts.push_back(eps(j + 2));
        }
        for (int i = n + 3; i <= m; ++i) pts.push_back(eps(i));
        s.base = chain_diffs(pts);
        for (int j = 1; j <= n; ++j) s.S.push_back(eps(j + 1) - del(j));
    } else if (m == n + 1) {
        pts = {eps(1), del(1), eps(2)};
        for (int i = 1; i + 1 <= n; ++i) {
            pts.push_back(eps(i + 2));
            pts.push_back(del(i + 1));
        }
        s.base = chain_diffs(pts);
        s.S = {eps(1) - del(1)};
        for (int j = 2; j <= n; ++j) s.S.push_back(eps(j + 1) - del(j));
    } else { // 2 < m < n: alternating chain, so S sits inside the base
        for (int i = 1; i <= m; ++i) {
            pts.push_back(eps(i));
            pts.push_back(del(i));
        }
        for (int j = m + 1; j <= n; ++j) pts.push_back(del(j));
        s.base = chain_diffs(pts);
        for (int i = 1; i <= m; ++i) s.S.push_back(eps(i) - del(i));
    }
}

void build_psl(AlgebraSpec& s) {
    const int n = s.n;
    if (s.m != n) reject(s.id, "psl needs equal block sizes m|m");
    if (n < 2) reject(s.id, "psl:1|1 has no roots");
    set_diag_range(s.form, BasisTag::Eps, n, 1);
    set_diag_range(s.form, BasisTag::Del, n, -1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                s.roots.push_back({eps(i) - eps(j), false});
                s.roots.push_back({del(i) - del(j), false});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add_pm(s.roots, eps(i) - del(j), true);
    s.theta = eps(1) - eps(n);
    s.dim_h = 2 * n - 2;
    s.sdim = -2;

    std::vector<Weight> pts;
    if (n == 2) {
        pts = {eps(1), del(1), del(2), eps(2)};
        s.base = chain_diffs(pts);
        s.S = {eps(1) - del(1), del(2) - eps(2)};
    } else {
        for (int i = 1; i <= n; ++i) {
            pts.push_back(eps(i));
            pts.push_back(del(i));
        }
        s.base = chain_diffs(pts);
        for (int i = 1; i <= n; ++i) s.S.push_back(eps(i) - del(i));
    }
}

void build_spo(AlgebraSpec& s) {
    const int sp_dim = s.m, so_dim = s.n;
    if (sp_dim < 2 || sp_dim % 2 != 0) reject(s.id, "the sp block needs a positive even dimension");
    if (so_dim < 1)
        reject(s.id, "the so block must be nonempty; use lie:C" + std::to_string(sp_dim / 2));
    const int M = sp_dim / 2;      // sp rank
    const int r = so_dim / 2;      // so rank
    const bool so_odd = so_dim % 2 != 0;
    set_diag_range(s.form, BasisTag::Del, M, rat(1, 2));
    set_diag_range(s.form, BasisTag::Eps, r, rat(-1, 2));
    for (int i = 1; i <= M; ++i) {
        add_pm(s.roots, del(i) * rat(2), false);
        for (int j = i + 1; j <= M; ++j) {
            add_pm(s.roots, del(i) - del(j), false);
            add_pm(s.roots, del(i) + del(j), false);
        }
    }
    for (int i = 1; i <= r; ++i) {
        if (so_odd) add_pm(s.roots, eps(i), false);
        for (int j = i + 1; j <= r; ++j) {
            add_pm(s.roots, eps(i) - eps(j), false);
            add_pm(s.roots, eps(i) + eps(j), false);
        }
    }
    for (int i = 1; i <= M; ++i) {
        if (so_odd) add_pm(s.roots, del(i), true);
        for (int j = 1; j <= r; ++j) {
            add_pm(s.roots, del(i) - eps(j), true);
            add_pm(s.roots, del(i) + eps(j), true);
        }
    }
    s.theta = del(1) * rat(2);
    s.dim_h = M + r;
    s.sdim = (long long)M * (2 * M + 1) + (long long)so_dim * (so_dim - 1) / 2 -
             2LL * M * so_dim;

    std::vector<Weight> pts;
    if (M == 1) {
        if (so_dim == 1) {
            s.base = {del(1)};
        } else if (so_dim == 2) {
            s.base = {del(1) - eps(1), del(1) + eps(1)};
            s.S = {del(1) - eps(1)};
        } else {
            pts.push_back(del(1));
            for (int i = 1; i <= r; ++i) pts.push_back(eps(i));
            s.base = chain_diffs(pts);
            s.base.push_back(so_odd ? eps(r) : eps(r - 1) + eps(r));
            s.S = {del(1) - eps(1)};
        }
    } else if (so_dim < 2 * M) { // sp-heavy: r <= M-1
        for (int i = 1; i <= r; ++i) {
            pts.push_back(del(i));
            pts.push_back(eps(i));
        }
        for (int i = r + 1; i <= M; ++i) pts.push_back(del(i));
        s.base = chain_diffs(pts);
        s.base.push_back(so_odd ? del(M) : del(M) * rat(2));
        for (int i = 1; i <= r; ++i) s.S.push_back(del(i) - eps(i));
    } else if (so_dim == 2 * M) { // r == M
        for (int i = 1; i <= M; ++i) {
            pts.push_back(del(i));
            pts.push_back(eps(i));
        }
        s.base = chain_diffs(pts);
        s.base.push_back(del(M) + eps(M));
        for (int i = 1; i <= M; ++i) s.S.push_back(del(i) - eps(i));
    } else if (so_dim == 2 * M + 1) { // r == M
        for (int i = 1; i <= M; ++i) {
            pts.push_back(eps(i));
            pts.push_back(del(i));
        }
        s.base = chain_diffs(pts);
        s.base.push_back(del(M));
        for (int i = 1; i <= M; ++i) s.S.push_back(eps(i) - del(i));
    } else if (so_dim == 2 * M + 2) { // r == M+1
        for (int i = 1; i <= M; ++i) {
            pts.push_back(eps(i));
            pts.push_back(del(i));
        }
        pts.push_back(eps(M + 1));
        s.base = chain_diffs(pts);
        s.base.push_back(del(M) + eps(M + 1));
        for (int i = 1; i <= M; ++i) s.S.push_back(eps(i) - del(i));
    } else { // so-heavy: r >= M+2
        for (int i = 1; i <= M; ++i) {
            pts.push_back(eps(i));
            pts.push_back(del(i));
        }
        for (int i = M + 1; i <= r; ++i) pts.push_back(eps(i));
        s.base = chain_diffs(pts);
        s.base.push_back(so_odd ? eps(r) : eps(r - 1) + eps(r));
        for (int i = 1; i <= M; ++i) s.S.push_back(eps(i) - del(i));
    }
}

void build_osp(AlgebraSpec& s) {
    const int so_dim = s.m, sp_dim = s.n;
    if (sp_dim < 2 || sp_dim % 2 != 0) reject(s.id, "the sp block needs a positive even dimension");
    if (so_dim < 3) reject(s.id, "internal: osp with so block < 3 canonicalizes to spo");
    const int q = so_dim / 2; // so rank
    const int N = sp_dim / 2; // sp rank
    const bool so_odd = so_dim % 2 != 0;
    const bool flagged = so_dim == 3;
    // osp(3|2n) is normalized so the single so root has square length 2.
    const Rational unit = flagged ? rat(2) : rat(1);
    set_diag_range(s.form, BasisTag::Eps, q, unit);
    set_diag_range(s.form, BasisTag::Del, N, -unit);
    for (int i = 1; i <= q; ++i) {
        if (so_odd) add_pm(s.roots, eps(i), false);
        for (int j = i + 1; j <= q; ++j) {
            add_pm(s.roots, eps(i) - eps(j), false);
            add_pm(s.roots, eps(i) + eps(j), false);
        }
    }
    for (int i = 1; i <= N; ++i) {
        add_pm(s.roots, del(i) * rat(2), false);
        for (int j = i + 1; j <= N; ++j) {
            add_pm(s.roots, del(i) - del(j), false);
            add_pm(s.roots, del(i) + del(j), false);
        }
    }
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= N; ++j) {
            add_pm(s.roots, eps(i) - del(j), true);
            add_pm(s.roots, eps(i) + del(j), true);
        }
    if (so_odd)
        for (int j = 1; j <= N; ++j) add_pm(s.roots, del(j), true);
    s.dim_h = q + N;
    s.sdim = (long long)so_dim * (so_dim - 1) / 2 + (long long)N * (2 * N + 1) -
             2LL * so_dim * N;

    std::vector<Weight> pts;
    if (flagged) {
        s.theta = eps(1);
        for (int j = 1; j <= N; ++j) pts.push_back(del(j));
        pts.push_back(eps(1));
        s.base = chain_diffs(pts);
        s.base.push_back(eps(1));
        s.S = {del(1) - eps(1)};
        s.flagged = true;
        auto it = catalog().flags.find("osp");
        s.flag_reason = it == catalog().flags.end() ? "flagged" : it->second.second;
        return;
    }
    if (so_dim == 4) {
        s.theta = eps(1) - eps(2);
        s.base = {eps(1) + eps(2), -eps(2) - del(1)};
        for (int j = 1; j < N; ++j) s.base.push_back(del(j) - del(j + 1));
        s.base.push_back(del(N) * rat(2));
        s.S = {-eps(2) - del(1)};
        if (N >= 2) s.S.push_back(eps(1) - del(2));
        return;
    }
    s.theta = eps(1) + eps(2);
    if (so_odd) {
        if (N <= q - 2) { // generic
            pts = {eps(1), eps(2)};
            for (int j = 1; j <= N; ++j) {
                pts.push_back(del(j));
                pts.push_back(eps(j + 2));
            }
            for (int i = N + 3; i <= q; ++i) pts.push_back(eps(i));
            s.base = chain_diffs(pts);
            s.base.push_back(eps(q));
            for (int j = 1; j <= N; ++j) s.S.push_back(eps(j + 1) - del(j));
        } else if (N == q - 1) {
            for (int i = 1; i <= N; ++i) {
                pts.push_back(eps(i));
                pts.push_back(del(i));
            }
            pts.push_back(eps(N + 1));
            s.base = chain_diffs(pts);
            s.base.push_back(eps(N + 1));
            for (int i = 1; i <= N; ++i) s.S.push_back(eps(i) - del(i));
        } else { // N >= q
            for (int i = 1; i <= q; ++i) {
                pts.push_back(eps(i));
                pts.push_back(del(i));
            }
            for (int j = q + 1; j <= N; ++j) pts.push_back(del(j));
            s.base = chain_diffs(pts);
            s.base.push_back(del(N));
            for (int i = 1; i <= q; ++i) s.S.push_back(eps(i) - del(i));
        }
    } else {
        const int p = q;
        if (N <= p - 3) { // generic
            pts = {eps(1), eps(2)};
            for (int j = 1; j <= N; ++j) {
                pts.push_back(del(j));
                pts.push_back(eps(j + 2));
            }
            for (int i = N + 3; i <= p; ++i) pts.push_back(eps(i));
            s.base = chain_diffs(pts);
            s.base.push_back(eps(p - 1) + eps(p));
            for (int j = 1; j <= N; ++j) s.S.push_back(eps(j + 1) - del(j));
        } else if (N == p - 2) {
            pts = {eps(1), eps(2)};
            for (int j = 1; j <= N; ++j) {
                pts.push_back(del(j));
                pts.push_back(eps(j + 2));
            }
            s.base = chain_diffs(pts);
            s.base.push_back(del(N) + eps(N + 2));
            for (int j = 1; j <= N; ++j) s.S.push_back(del(j) - eps(j + 2));
        } else if (N == p - 1) {
            for (int i = 1; i <= N; ++i) {
                pts.push_back(eps(i));
                pts.push_back(del(i));
            }
            pts.push_back(eps(N + 1));
            s.base = chain_diffs(pts);
            s.base.push_back(del(N) + eps(N + 1));
            for (int i = 1; i <= N; ++i) s.S.push_back(eps(i) - del(i));
        } else { // N >= p
            for (int i = 1; i <= p; ++i) {
                pts.push_back(eps(i));
                pts.push_back(del(i));
            }
            for (int j = p + 1; j <= N; ++j) pts.push_back(del(j));
            s.base = chain_diffs(pts);
            s.base.push_back(del(N) * rat(2));
            for (int i = 1; i <= p; ++i) s.S.push_back(eps(i) - del(i));
        }
    }
}

void build_d21a(AlgebraSpec& s) {
    const Rational& a = s.a;
    if (a == 0 || a == -1) reject(s.id, "the parameter must avoid 0 and -1");
    Rational c = 2 * (1 + a);
    s.form.set_diag(eps_label(1), rat(1, 2));
    s.form.set_diag(eps_label(2), Rational(-1) / c);
    s.form.set_diag(eps_label(3), -a / c);
    for (int i = 1; i <= 3; ++i) add_pm(s.roots, eps(i) * rat(2), false);
    for (int s2 : {1, -1})
        for (int s3 : {1, -1})
            add_pm(s.roots, eps(1) + eps(2) * rat(s2) + eps(3) * rat(s3), true);
    s.theta = eps(1) * rat(2);
    s.base = {eps(1) - eps(2) - eps(3), eps(2) * rat(2), eps(3) * rat(2)};
    s.S = {eps(1) - eps(2) - eps(3)};
    s.dim_h = 3;
    s.sdim = 1;
}

void build_g3(AlgebraSpec& s) {
    const Rational scale = s.alt ? rat(-4, 3) : rat(1);
    s.form.set_diag(del_label(1), rat(1, 2) * scale);
    set_diag_range(s.form, BasisTag::Eps, 3, rat(-3, 4) * scale);
    add_pm(s.roots, del(1) * rat(2), false);
    for (int i = 1; i <= 3; ++i) {
        add_pm(s.roots, g2_short(i), false);
        for (int j = i + 1; j <= 3; ++j) add_pm(s.roots, eps(i) - eps(j), false);
    }
    add_pm(s.roots, del(1), true);
    for (int i = 1; i <= 3; ++i) {
        add_pm(s.roots, del(1) + g2_short(i), true);
        add_pm(s.roots, del(1) - g2_short(i), true);
    }
    s.dim_h = 3;
    s.sdim = 3;
    if (!s.alt) {
        s.theta = del(1) * rat(2);
        s.base = {del(1) + g2_short(3), g2_short(2) - g2_short(1), g2_short(1)};
        s.S = {del(1) + g2_short(3)};
    } else {
        s.theta = g2_short(2) - g2_short(3);
        s.base = {g2_short(1), g2_short(2) - del(1), del(1) - g2_short(1)};
        s.S = {g2_short(2) - del(1)};
    }
}

void build_f4(AlgebraSpec& s) {
    const Rational scale = s.alt ? rat(-3, 2) : rat(1);
    s.form.set_diag(del_label(1), rat(2) * scale);
    set_diag_range(s.form, BasisTag::Eps, 3, rat(-2, 3) * scale);
    add_pm(s.roots, del(1), false);
    for (int i = 1; i <= 3; ++i) {
        add_pm(s.roots, eps(i), false);
        for (int j = i + 1; j <= 3; ++j) {
            add_pm(s.roots, eps(i) - eps(j), false);
            add_pm(s.roots, eps(i) + eps(j), false);
        }
    }
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                add_pm(s.roots,
                       (del(1) + eps(1) * rat(s1) + eps(2) * rat(s2) + eps(3) * rat(s3)) * rat(1, 2),
                       true);
    s.dim_h = 4;
    s.sdim = 8;
    if (!s.alt) {
        s.theta = del(1);
        s.base = {(del(1) - eps(1) - eps(2) - eps(3)) * rat(1, 2), eps(1) - eps(2),
                  eps(2) - eps(3), eps(3)};
        s.S = {s.base[0]};
    } else {
        s.theta = eps(1) + eps(2);
        s.base = {eps(1) - eps(2), (del(1) - eps(1) + eps(2) - eps(3)) * rat(1, 2),
                  (-del(1) + eps(1) + eps(2) - eps(3)) * rat(1, 2), eps(3)};
        s.S = {s.base[1]};
    }
}

// -------------------------------------------------------- finite Weyl orders

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer two_pow(int n) {
    Integer p = 1;
    for (int i = 0; i < n; ++i) p *= 2;
    return p;
}

// Order of the Weyl group of the simple component spanned by these simple
// roots (classified from the Coxeter graph).
Integer weyl_order(const std::vector<Weight>& simples, const BilinearForm& form) {
    const int r = (int)simples.size();
    if (r == 0) return 1;
    if (r == 1) return 2;
    // bond(i,j) = c_ij * c_ji in {0,1,2,3}
    std::vector<std::vector<int>> bond(r, std::vector<int>(r, 0));
    int max_bond = 0;
    std::vector<int> degree(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Rational p = form.pair(simples[i], simples[j]);
            if (p == 0) continue;
            Rational b = 4 * p * p / (form.norm2(simples[i]) * form.norm2(simples[j]));
            if (!is_integer(b)) throw StructuralError("non-crystallographic bond");
            bond[i][j] = bond[j][i] = (int)to_ll(to_integer(b));
            max_bond = std::max(max_bond, bond[i][j]);
            ++degree[i];
            ++degree[j];
        }
    if (max_bond == 3) {
        if (r != 2) throw StructuralError("triple bond outside rank 2");
        return 12; // G2
    }
    int branch = -1;
    for (int i = 0; i < r; ++i)
        if (degree[i] > 2) branch = i;
    if (max_bond == 2) {
        if (branch >= 0) throw StructuralError("double bond on a branched graph");
        // F4 iff the double bond is an interior edge of the path
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (bond[i][j] == 2 && degree[i] == 2 && degree[j] == 2) {
                    if (r != 4) throw StructuralError("interior double bond outside rank 4");
                    return 1152; // F4
                }
        return two_pow(r) * factorial(r); // B_r / C_r
    }
    if (branch < 0) return factorial(r + 1); // A_r
    // D or E: arm lengths from the branch node
    std::vector<int> arms;
    for (int j = 0; j < r; ++j) {
        if (bond[branch][j] == 0) continue;
        int len = 1, prev = branch, cur = j;
        while (true) {
            int next = -1;
            for (int k = 0; k < r; ++k)
                if (k != prev && bond[cur][k] != 0) next = k;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw StructuralError("branch node of degree > 3");
    if (arms[0] == 1 && arms[1] == 1) return two_pow(r - 1) * factorial(r); // D_r
    if (arms == std::vector<int>{1, 2, 2}) return Integer(51840);           // E6
    if (arms == std::vector<int>{1, 2, 3}) return Integer(2903040);         // E7
    if (arms == std::vector<int>{1, 2, 4}) return Integer(696729600);       // E8
    throw StructuralError("unrecognized simply-laced branched graph");
}

// ------------------------------------------------------------------ finalize

Weight solve_weyl_vector(const std::vector<Weight>& simples, const BilinearForm& form) {
    std::vector<BasisLabel> labels;
    for (const auto& [l, v] : form.diagonal()) labels.push_back(l);
    Mat a;
    Vec b;
    for (const auto& sr : simples) {
        Vec row;
        for (const auto& l : labels) row.push_back(form.diag(l) * sr.coeff(l));
        a.push_back(std::move(row));
        b.push_back(form.norm2(sr) / 2);
    }
    auto x = solve(a, b);
    if (!x) throw StructuralError("no Weyl vector for the given simple system");
    Weight rho;
    for (size_t i = 0; i < labels.size(); ++i) rho.set(labels[i], (*x)[i]);
    return rho;
}

struct Coords {
    std::map<Weight, Vec> of; // integer coordinates over the base, per root
};

void validate_and_cache(AlgebraSpec& s) {
    if (s.base.empty()) throw CatalogError(s.id + ": empty base");
    s.base_solver = std::make_shared<SpanSolver>(s.base);
    if (s.base_solver->rank() != (int)s.base.size())
        throw CatalogError(s.id + ": base is linearly dependent");

    // integer one-signed coordinates for every root
    std::map<Weight, Vec> coords;
    std::map<Weight, long long> height;
    for (const auto& root : s.roots) {
        auto c = s.base_solver->express(root.w);
        if (!c) throw CatalogError(s.id + ": root outside the base span");
        bool nonneg = true, nonpos = true;
        long long h = 0;
        for (const auto& v : *c) {
            if (!is_integer(v)) throw CatalogError(s.id + ": non-integral base coordinates");
            long long vi = to_ll(to_integer(v));
            h += vi;
            nonneg &= vi >= 0;
            nonpos &= vi <= 0;
        }
        if (!nonneg && !nonpos) throw CatalogError(s.id + ": root with mixed-sign coordinates");
        coords[root.w] = *c;
        height[root.w] = h;
    }

    // duplicates would poison the caches
    if (coords.size() != s.roots.size()) throw CatalogError(s.id + ": duplicate roots");

    for (const auto& root : s.roots) {
        s.sorted_all.push_back(root.w);
        if (root.odd) s.sorted_odd.push_back(root.w);
        if (height.at(root.w) > 0) {
            s.sorted_pos.push_back(root.w);
            (root.odd ? s.odd_pos : s.even_pos).push_back(root.w);
        }
    }
    std::sort(s.sorted_all.begin(), s.sorted_all.end());
    std::sort(s.sorted_odd.begin(), s.sorted_odd.end());
    std::sort(s.sorted_pos.begin(), s.sorted_pos.end());
    auto by_height = [&](const Weight& x, const Weight& y) {
        auto hx = height.at(x), hy = height.at(y);
        if (hx != hy) return hx < hy;
        return x < y;
    };
    std::sort(s.even_pos.begin(), s.even_pos.end(), by_height);
    std::sort(s.odd_pos.begin(), s.odd_pos.end(), by_height);

    if (2 * s.sorted_pos.size() != s.roots.size())
        throw CatalogError(s.id + ": positive system is not half of the roots");

    // the affine attachment root: the positive root dominating every root
    bool found = false;
    std::vector<Weight> by_h(s.sorted_pos);
    std::sort(by_h.begin(), by_h.end(), [&](const Weight& x, const Weight& y) {
        return height.at(x) > height.at(y) || (height.at(x) == height.at(y) && x < y);
    });
    for (const auto& cand : by_h) {
        const Vec& cc = coords.at(cand);
        bool ok = true;
        for (const auto& root : s.roots) {
            const Vec& rc = coords.at(root.w);
            for (size_t i = 0; i < cc.size() && ok; ++i)
                if (cc[i] + rc[i] < 0) ok = false;
            if (!ok) break;
        }
        if (ok) {
            s.Theta = cand;
            found = true;
            break;
        }
    }
    if (!found) throw CatalogError(s.id + ": base admits no affine attachment root");
    s.htt_Theta = height.at(s.Theta);

    if (!s.is_root(s.theta)) throw CatalogError(s.id + ": grading root is not a root");
    if (s.norm2(s.theta) != 2) throw CatalogError(s.id + ": grading root must have square length 2");

    // isotropic decoration
    for (const auto& beta : s.S) {
        if (!s.is_odd_root(beta) || s.norm2(beta) != 0 || !s.is_positive_root(beta))
            throw CatalogError(s.id + ": bad isotropic set member");
        for (const auto& other : s.S)
            if (!(other == beta) && s.pair(beta, other) != 0)
                throw CatalogError(s.id + ": isotropic set is not orthogonal");
    }
    s.defect = (int)s.S.size();

    // Weyl vector data; the level makes (rho, alpha) = (alpha,alpha)/2 hold on
    // the affine simple root delta - Theta as well.
    s.rho_dot = solve_weyl_vector(s.base, s.form);
    s.hvee = s.pair(s.rho_dot, s.Theta) + s.norm2(s.Theta) / 2;
    s.rho = s.rho_dot + lambda0() * s.hvee;

    // unitarity: the positive-length even roots are exactly {+-theta}
    std::vector<Weight> sharp_pos;
    for (const auto& alpha : s.even_pos)
        if (s.norm2(alpha) > 0) sharp_pos.push_back(alpha);
    s.unitary_type = sharp_pos.size() == 1 && sharp_pos[0] == s.theta;

    // type II <=> the even roots span the whole Cartan
    {
        std::vector<Weight> evens(s.even_pos);
        s.type_ii = !evens.empty() && SpanSolver(std::move(evens)).rank() == s.dim_h;
    }

    // simple systems of the even part and of its positive-length subsystem
    auto simples_of = [](const std::vector<Weight>& pos) {
        std::set<Weight> in(pos.begin(), pos.end());
        std::vector<Weight> out;
        for (const auto& alpha : pos) {
            bool simple = true;
            for (const auto& beta : pos) {
                if (beta == alpha) continue;
                if (in.count(alpha - beta)) {
                    simple = false;
                    break;
                }
            }
            if (simple) out.push_back(alpha);
        }
        return out;
    };
    s.even_simples = simples_of(s.even_pos);
    s.sharp_simples = simples_of(sharp_pos);
}

void build_components(AlgebraSpec& s) {
    const int k = (int)s.even_simples.size();
    if (k == 0) return;
    // connected components of the even simple system
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack = {i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && s.pair(s.even_simples[cur], s.even_simples[j]) != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    SpanSolver even_solver(s.even_simples);
    std::vector<AffineComponent> comps(ncomp);
    for (int c = 0; c < ncomp; ++c)
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) comps[c].simples.push_back(s.even_simples[i]);
    std::vector<std::vector<std::pair<long long, Weight>>> by_comp(ncomp);
    for (const auto& alpha : s.even_pos) {
        auto c = even_solver.express(alpha);
        if (!c) throw StructuralError(s.id + ": even root outside the even simple span");
        int home = -1;
        long long h = 0;
        for (int i = 0; i < k; ++i) {
            if ((*c)[i] == 0) continue;
            h += to_ll(to_integer((*c)[i]));
            if (home < 0) home = comp[i];
            else if (home != comp[i])
                throw StructuralError(s.id + ": even root crosses components");
        }
        by_comp[home].push_back({h, alpha});
        by_comp[home].push_back({-h, -alpha});
    }
    for (int c = 0; c < ncomp; ++c) {
        auto& list = by_comp[c];
        std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
        for (const auto& [h, w] : list) comps[c].roots.push_back(w);
        comps[c].highest = list.back().second;
        if (list.size() >= 2 && list[list.size() - 2].first == list.back().first)
            throw StructuralError(s.id + ": even component has no unique highest root");
        comps[c].contains_theta =
            std::find(comps[c].roots.begin(), comps[c].roots.end(), s.theta) !=
            comps[c].roots.end();
        Weight rho_c = solve_weyl_vector(comps[c].simples, s.form);
        Rational level = s.pair(rho_c, comps[c].highest) + s.norm2(comps[c].highest) / 2;
        comps[c].rho_l = rho_c + lambda0() * level;
    }
    s.components = std::move(comps);
}

void split_weyl_factors(AlgebraSpec& s) {
    if (s.components.empty()) return;
    auto order_of = [&](const std::vector<const AffineComponent*>& group) {
        Integer o = 1;
        for (const auto* c : group) o *= weyl_order(c->simples, s.form);
        return o;
    };
    std::vector<const AffineComponent*> first, second;
    if (s.family == "d21a" || (s.family == "osp" && s.m == 4 && s.n == 2)) {
        // the grading-root component is the small factor; the identity over the
        // big factor runs over the other two sl2 blocks
        for (const auto& c : s.components)
            (c.contains_theta ? second : first).push_back(&c);
    } else {
        std::vector<const AffineComponent*> sharp, other;
        for (const auto& c : s.components)
            (s.norm2(c.simples[0]) > 0 ? sharp : other).push_back(&c);
        if (order_of(other) > order_of(sharp)) {
            first = other;
            second = sharp;
        } else {
            first = sharp;
            second = other;
        }
    }
    s.wprime_order = order_of(first);
    s.wsecond_order = order_of(second);
    for (const auto* c : first)
        s.wprime_gens.insert(s.wprime_gens.end(), c->simples.begin(), c->simples.end());
    for (const auto* c : second)
        s.wsecond_gens.insert(s.wsecond_gens.end(), c->simples.begin(), c->simples.end());
}

} // namespace

// ----------------------------------------------------------------- public api

AlgebraSpec build_algebra(const std::string& id) {
    ParsedId p = parse_id(id);

    // cross-family canonicalization
    if (p.family == "osp") {
        if (p.m == 0) reject(id, "the so block must be nonempty; use lie:C" + std::to_string(p.n / 2));
        if (p.m <= 2) return build_algebra("spo:" + std::to_string(p.n) + "|" + std::to_string(p.m));
        if (p.n == 0)
            reject(id, "the sp block must be nonempty; use lie:" +
                           (p.m % 2 ? "B" + std::to_string(p.m / 2) : "D" + std::to_string(p.m / 2)));
    }
    if (p.family == "spo" && p.n == 0)
        reject(id, "the so block must be nonempty; use lie:C" + std::to_string(p.m / 2));
    if (p.family == "d21a" && p.a < 0 && p.a > -1) p.a = 1 / p.a;

    AlgebraSpec s;
    s.family = p.family;
    s.alt = p.alt;
    s.m = p.m;
    s.n = p.n;
    s.lie_type = p.lie_type;
    s.lie_rank = p.lie_rank;
    s.a = p.a;
    if (p.family == "lie") {
        s.id = "lie:" + std::string(1, p.lie_type) + std::to_string(p.lie_rank);
        build_lie(s);
    } else if (p.family == "sl") {
        s.id = "sl:" + std::to_string(p.m) + "|" + std::to_string(p.n);
        build_sl(s);
    } else if (p.family == "psl") {
        s.id = "psl:" + std::to_string(p.m) + "|" + std::to_string(p.n);
        build_psl(s);
    } else if (p.family == "spo") {
        s.id = "spo:" + std::to_string(p.m) + "|" + std::to_string(p.n);
        build_spo(s);
    } else if (p.family == "osp") {
        s.id = "osp:" + std::to_string(p.m) + "|" + std::to_string(p.n);
        build_osp(s);
    } else if (p.family == "d21a") {
        s.id = "d21a:" + rational_str(p.a);
        build_d21a(s);
    } else if (p.family == "g3") {
        s.id = p.alt ? "g3:alt" : "g3";
        build_g3(s);
    } else if (p.family == "f4") {
        s.id = p.alt ? "f4:alt" : "f4";
        build_f4(s);
    }
    check_recorded_diag(s);
    validate_and_cache(s);
    build_components(s);
    split_weyl_factors(s);
    return s;
}

std::vector<std::string> catalog_sample_ids() {
    return {
        "lie:A1", "lie:A3", "lie:B2", "lie:B3", "lie:C3", "lie:D4", "lie:G2", "lie:F4", "lie:E6",
        "sl:2|1", "sl:2|3", "sl:3|1", "sl:4|2", "sl:3|2", "sl:4|3", "sl:3|5",
        "psl:2|2", "psl:3|3",
        "spo:2|1", "spo:2|2", "spo:2|3", "spo:2|4", "spo:2|5", "spo:4|2", "spo:4|3",
        "spo:4|4", "spo:4|5", "spo:4|6", "spo:4|7", "spo:6|4", "spo:4|9",
        "osp:4|2", "osp:4|4", "osp:5|2", "osp:7|2", "osp:7|4", "osp:6|4", "osp:8|4",
        "osp:8|2", "osp:5|4", "osp:6|8",
        "d21a:1/2", "d21a:3", "d21a:-3", "d21a:-5/2",
        "g3", "g3:alt", "f4", "f4:alt",
    };
}

bool AlgebraSpec::is_root(const Weight& w) const {
    return std::binary_search(sorted_all.begin(), sorted_all.end(), w);
}

bool AlgebraSpec::is_odd_root(const Weight& w) const {
    return std::binary_search(sorted_odd.begin(), sorted_odd.end(), w);
}

bool AlgebraSpec::is_positive_root(const Weight& w) const {
    return std::binary_search(sorted_pos.begin(), sorted_pos.end(), w);
}

Rational AlgebraSpec::height_of(const Weight& w) const {
    auto c = base_coords(w);
    if (!c) throw StructuralError(id + ": weight outside the base span");
    Rational h = 0;
    for (const auto& v : *c) h += v;
    return h;
}

long long AlgebraSpec::htt(const Weight& w) const { return to_ll(to_integer(height_of(w))); }

std::optional<Vec> AlgebraSpec::base_coords(const Weight& w) const {
    return base_solver->express(w);
}

long long AlgebraSpec::affine_htt(const Weight& w) const {
    Decomp d = decompose(w);
    if (d.lambda0_coef != 0)
        throw StructuralError("affine height is undefined on weights with a Lambda0 part");
    if (!is_integer(d.j)) throw StructuralError("non-integral delta multiple");
    return to_ll(to_integer(d.j)) * (1 + htt_Theta) + htt(d.mu_dot);
}

Weight weyl_vector(const AlgebraSpec& spec) {
    Weight rho_dot = solve_weyl_vector(spec.base, spec.form);
    Rational level = spec.pair(rho_dot, spec.Theta) + spec.norm2(spec.Theta) / 2;
    return rho_dot + lambda0() * level;
}

Rational dual_coxeter(const AlgebraSpec& spec) { return spec.hvee; }

MinimalGrading minimal_grading(const AlgebraSpec& spec) {
    MinimalGrading g;
    for (const auto& root : spec.roots) {
        Rational j = spec.pair(root.w, spec.theta) / spec.norm2(spec.theta);
        if (j == -1) g.minus_one.push_back(root);
        else if (j == rat(-1, 2)) g.minus_half.push_back(root);
        else if (j == 0) g.zero.push_back(root);
        else if (j == rat(1, 2)) g.plus_half.push_back(root);
        else if (j == 1) g.plus_one.push_back(root);
        else
            throw StructuralError(spec.id + ": root with grading outside {0, +-1/2, +-1}");
    }
    return g;
}

std::vector<Weight> odd_reflection(const AlgebraSpec& spec, const std::vector<Weight>& base,
                                   const Weight& beta) {
    if (std::find(base.begin(), base.end(), beta) == base.end())
        throw PreconditionError("odd reflection root must belong to the base");
    if (!spec.is_odd_root(beta) || spec.norm2(beta) != 0)
        throw PreconditionError("odd reflections are defined at isotropic odd base members");
    std::vector<Weight> out;
    for (const auto& sigma : base) {
        if (sigma == beta) {
            out.push_back(-beta);
        } else if (spec.pair(sigma, beta) != 0) {
            Weight moved = sigma + beta;
            if (!spec.is_root(moved))
                throw StructuralError("odd reflection left the root system");
            out.push_back(moved);
        } else {
            out.push_back(sigma);
        }
    }
    return out;
}

std::vector<AffineComponent> affine_components(const AlgebraSpec& spec) { return spec.components; }

RootDatumReport report(const AlgebraSpec& spec) {
    RootDatumReport r;
    r.hvee = spec.hvee;
    r.defect = spec.defect;
    r.type_ii = spec.type_ii;
    r.unitary_type = spec.unitary_type;
    for (const auto& alpha : spec.even_pos)
        if (spec.norm2(alpha) > 0) r.delta_sharp_pos.push_back(alpha);
    r.lacety = spec.lacety;
    r.sdim = spec.sdim;
    r.dim_h = spec.dim_h;
    r.dim_g1bar = (long long)spec.sorted_odd.size();
    return r;
}

} // namespace wmin
