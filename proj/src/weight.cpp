#include "wmin/weight.hpp"

#include <sstream>

namespace wmin {

std::string BasisLabel::str() const {
    switch (tag) {
        case BasisTag::Eps: return "eps" + std::to_string(index);
        case BasisTag::Del: return "del" + std::to_string(index);
        case BasisTag::Lambda0: return "Lambda0";
        case BasisTag::DeltaIm: return "delta";
    }
    return "?";
}

Weight& Weight::operator+=(const Weight& o) {
    for (const auto& [l, c] : o.c_) {
        auto it = c_.find(l);
        if (it == c_.end()) {
            c_.emplace(l, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (const auto& [l, c] : o.c_) {
        auto it = c_.find(l);
        if (it == c_.end()) {
            c_.emplace(l, -c);
        } else {
            it->second -= c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [l, c] : c_) c *= s;
    return *this;
}

bool operator<(const Weight& a, const Weight& b) {
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.c_.end() && ib != b.c_.end();
}

std::string Weight::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : c_) {
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c.get_str() << "*";
        os << l.str();
        first = false;
    }
    return os.str();
}

Decomp decompose(const Weight& mu) {
    Decomp d;
    d.j = mu.coeff(delta_label());
    d.lambda0_coef = mu.coeff(lambda0_label());
    d.mu_dot = mu;
    d.mu_dot.set(delta_label(), 0);
    d.mu_dot.set(lambda0_label(), 0);
    return d;
}

void BilinearForm::set_diag(const BasisLabel& l, Rational v) {
    if (l.tag == BasisTag::Lambda0 || l.tag == BasisTag::DeltaIm)
        throw StructuralError("form diagonal is only for finite labels");
    diag_[l] = std::move(v);
}

Rational BilinearForm::diag(const BasisLabel& l) const {
    auto it = diag_.find(l);
    if (it == diag_.end()) throw StructuralError("label not covered by form: " + l.str());
    return it->second;
}

Rational BilinearForm::pair(const Weight& x, const Weight& y) const {
    Rational acc(0);
    // Finite diagonal part: iterate over the sparser operand.
    const Weight& a = x.terms().size() <= y.terms().size() ? x : y;
    const Weight& b = &a == &x ? y : x;
    for (const auto& [l, c] : a.terms()) {
        if (l.tag == BasisTag::Lambda0 || l.tag == BasisTag::DeltaIm) continue;
        Rational cb = b.coeff(l);
        if (cb == 0) {
            // Still validate the label is known to the form.
            (void)diag(l);
            continue;
        }
        acc += diag(l) * c * cb;
    }
    // Check labels of b too (structural validation), cheap since sparse.
    for (const auto& [l, c] : b.terms()) {
        if (l.tag == BasisTag::Lambda0 || l.tag == BasisTag::DeltaIm) continue;
        (void)diag(l);
    }
    acc += x.coeff(lambda0_label()) * y.coeff(delta_label());
    acc += x.coeff(delta_label()) * y.coeff(lambda0_label());
    return acc;
}

} // namespace wmin
