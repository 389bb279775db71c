#include "polyvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyvar {

std::string RationalPoint::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].to_string();
    }
    return s + ")";
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Monomial m(nvars);
    m.exps[static_cast<size_t>(index)] = 1;
    return term(nvars, m, Rational(1));
}

Polynomial Polynomial::term(int nvars, const Monomial& m, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    // Canonical order is graded, so the last term has maximal total degree.
    return terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != n_) throw DimensionMismatch("term/polynomial variable count");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial addition across dimensions");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial subtraction across dimensions");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("polynomial product across dimensions");
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

bool Polynomial::canonical_less(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    CanonicalMonomialLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.terms_.size() < b.terms_.size();
}

Rational Polynomial::evaluate(const RationalPoint& p) const {
    if (p.nvars() != n_) throw DimensionMismatch("evaluation point dimension");
    // Per-variable power tables keep this linear in the exponent range.
    std::vector<std::vector<Rational>> pow(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        int e = max_exponent(v);
        auto& tab = pow[static_cast<size_t>(v)];
        tab.resize(static_cast<size_t>(e) + 1, Rational(1));
        for (int k = 1; k <= e; ++k)
            tab[static_cast<size_t>(k)] = tab[static_cast<size_t>(k - 1)] * p.coords[static_cast<size_t>(v)];
    }
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < n_; ++v) {
            int e = m.exps[static_cast<size_t>(v)];
            if (e) t *= pow[static_cast<size_t>(v)][static_cast<size_t>(e)];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
    if (static_cast<int>(subs.size()) != n_)
        throw DimensionMismatch("substitution list length");
    int m = subs.empty() ? 0 : subs[0].nvars();
    std::vector<std::vector<Polynomial>> pow(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        int e = max_exponent(v);
        auto& tab = pow[static_cast<size_t>(v)];
        tab.push_back(Polynomial::constant(m, Rational(1)));
        for (int k = 1; k <= e; ++k) tab.push_back(tab.back() * subs[static_cast<size_t>(v)]);
    }
    Polynomial acc(m);
    for (const auto& [mon, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (int v = 0; v < n_; ++v) {
            int e = mon.exps[static_cast<size_t>(v)];
            if (e) t = t * pow[static_cast<size_t>(v)][static_cast<size_t>(e)];
        }
        acc += t;
    }
    return acc;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
    if (is_zero()) throw DomainError("leading monomial of zero");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.less(*best, m)) best = &m;
    return *best;
}

Rational Polynomial::leading_coeff(const MonomialOrder& ord) const {
    return coeff(leading_monomial(ord));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_coeff(ord).inv());
}

Polynomial Polynomial::with_nvars(int m) const {
    Polynomial r(m);
    for (const auto& [mon, c] : terms_) {
        Monomial mm(m);
        for (int v = 0; v < n_; ++v) {
            int e = mon.exps[static_cast<size_t>(v)];
            if (e == 0) continue;
            if (v >= m) throw DimensionMismatch("restriction drops a used variable");
            mm.exps[static_cast<size_t>(v)] = e;
        }
        r.terms_.emplace(mm, c);
    }
    return r;
}

int Polynomial::max_exponent(int var) const {
    int e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m.exps[static_cast<size_t>(var)]);
    return e;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    // Leading term first: iterate canonical order descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = c.abs();
        std::string vars;
        for (int v = 0; v < n_; ++v) {
            int e = m.exps[static_cast<size_t>(v)];
            if (!e) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += a.to_string();
        } else if (a == Rational(1)) {
            out += vars;
        } else {
            out += a.to_string() + "*" + vars;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip();
        return s[i++];
    }
    Int integer() {
        skip();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) throw ParseError("expected digits at position " + std::to_string(i));
        return Int(digits);
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    Lexer lx(text);
    Polynomial acc(nvars);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;
        // One term: optional coefficient, then '*'-separated variable powers.
        Rational coef(1);
        Monomial mon(nvars);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                Int num = lx.integer();
                if (lx.peek() == '/') {
                    lx.take();
                    Int den = lx.integer();
                    coef *= Rational(num, den);
                } else {
                    coef *= Rational(num);
                }
                saw_factor = true;
            } else if (p == 'x') {
                lx.take();
                Int idx = lx.integer();
                if (idx < 0 || idx >= nvars)
                    throw ParseError("variable index out of range: x" + idx.get_str());
                int v = static_cast<int>(idx.get_si());
                int e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    Int ee = lx.integer();
                    if (ee < 0 || ee > 4096) throw ParseError("exponent out of range");
                    e = static_cast<int>(ee.get_si());
                }
                mon.exps[static_cast<size_t>(v)] += e;
                saw_factor = true;
            } else {
                throw ParseError(std::string("unexpected character '") + p + "' in term");
            }
            if (lx.peek() == '*') {
                lx.take();
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw ParseError("empty term");
        acc.add_term(mon, coef.is_zero() ? coef : coef * Rational(sign));
    }
    return acc;
}

namespace {
void enumerate_monomials(int n, int m, int var, Monomial& cur, std::vector<Monomial>& out) {
    if (var == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= m; ++e) {
        cur.exps[static_cast<size_t>(var)] = e;
        enumerate_monomials(n, m - e, var + 1, cur, out);
    }
    cur.exps[static_cast<size_t>(var)] = 0;
}
}  // namespace

std::vector<Monomial> monomials_up_to(int n, int m, const MonomialOrder& ord) {
    if (n < 1 || m < 0) throw PreconditionViolated("monomials_up_to needs n >= 1, m >= 0");
    std::vector<Monomial> out;
    Monomial cur(n);
    enumerate_monomials(n, m, 0, cur, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace polyvar
