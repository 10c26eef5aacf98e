#include "adjfactor/parser.hpp"

#include <cctype>
#include <sstream>

namespace af {

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << i << ": " << what;
        throw Error(Err::Parse, os.str());
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    mpz_class number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected a number");
        return mpz_class(s.substr(start, i - start));
    }

    int exponent() {
        mpz_class e = number();
        if (e < 0 || e > 4096) fail("exponent out of range");
        return static_cast<int>(e.get_si());
    }

    static GPoly from_term(const Mon& m, const mpq_class& c) {
        GPoly g;
        if (c != 0) g[m] = c;
        return g;
    }

    static GPoly add(const GPoly& a, const GPoly& b) {
        GPoly r = a;
        for (const auto& [m, c] : b) {
            mpq_class v = r.count(m) ? r[m] + c : c;
            if (v == 0)
                r.erase(m);
            else
                r[m] = v;
        }
        return r;
    }

    static GPoly neg(const GPoly& a) {
        GPoly r;
        for (const auto& [m, c] : a) r[m] = -c;
        return r;
    }

    static GPoly mul(const GPoly& a, const GPoly& b) {
        GPoly r;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Mon m{std::get<0>(ma) + std::get<0>(mb), std::get<1>(ma) + std::get<1>(mb),
                      std::get<2>(ma) + std::get<2>(mb)};
                mpq_class v = (r.count(m) ? r[m] : mpq_class(0)) + ca * cb;
                if (v == 0)
                    r.erase(m);
                else
                    r[m] = v;
            }
        return r;
    }

    GPoly primary() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = number();
            return from_term({0, 0, 0}, mpq_class(n));
        }
        if (c == 'y' || c == 'x' || c == 't') {
            ++i;
            Mon m{c == 'y' ? 1 : 0, c == 'x' ? 1 : 0, c == 't' ? 1 : 0};
            return from_term(m, 1);
        }
        if (c == '(') {
            ++i;
            GPoly g = expr();
            if (!accept(')')) fail("expected ')'");
            return g;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    GPoly power() {
        GPoly base = primary();
        if (accept('^')) {
            int e = exponent();
            GPoly r = from_term({0, 0, 0}, 1);
            for (int k = 0; k < e; ++k) r = mul(r, base);
            return r;
        }
        return base;
    }

    GPoly term() {
        GPoly r = power();
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (c == '*') {
                ++i;
                r = mul(r, power());
            } else if (c == '/') {
                ++i;
                mpz_class d = number();
                if (d == 0) fail("division by zero");
                r = mul(r, from_term({0, 0, 0}, mpq_class(1, d)));
            } else if (c == 'x' || c == 'y' || c == 't' || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                r = mul(r, power());  // implicit multiplication
            } else {
                break;
            }
        }
        return r;
    }

    GPoly expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        GPoly r = term();
        if (negate) r = neg(r);
        for (;;) {
            skip_ws();
            if (accept('+')) {
                r = add(r, term());
            } else if (accept('-')) {
                r = add(r, neg(term()));
            } else {
                break;
            }
        }
        return r;
    }
};

}  // namespace

GPoly parse_gpoly(const std::string& text) {
    Parser p(text);
    if (p.eof()) p.fail("empty input");
    GPoly g = p.expr();
    if (!p.eof()) p.fail("trailing characters");
    return g;
}

UPoly gpoly_to_upoly(const GPoly& g, const Field& f, char var) {
    std::vector<Coeff> c;
    for (const auto& [m, q] : g) {
        auto [ey, ex, et] = m;
        int e = var == 'y' ? ey : (var == 'x' ? ex : et);
        int others = ey + ex + et - e;
        check(others == 0, Err::Parse,
              std::string("polynomial must involve only the variable '") + var + "'");
        if (e >= static_cast<int>(c.size())) c.resize(e + 1, Coeff::zero(f));
        c[e] = Coeff::from_scalar(f, Scalar::from_mpq(f.desc(), q));
    }
    return UPoly(f, std::move(c));
}

BPoly gpoly_to_bpoly(const GPoly& g, const Field& f) {
    std::vector<UPoly> yc;
    for (const auto& [m, q] : g) {
        auto [ey, ex, et] = m;
        check(et == 0, Err::Parse, "variable 't' not allowed here");
        if (ey >= static_cast<int>(yc.size())) yc.resize(ey + 1, UPoly::zero(f));
        yc[ey] = yc[ey] + UPoly::monomial(f, ex, Coeff::from_scalar(f, Scalar::from_mpq(f.desc(), q)));
    }
    return BPoly(f, std::move(yc));
}

BPoly gpoly_to_bpoly_ext(const GPoly& g, const Field& ext_field) {
    const Field& F = ext_field;
    Coeff gen = F.is_ext() ? Coeff::gen(F) : Coeff::one(F);
    std::vector<UPoly> yc;
    for (const auto& [m, q] : g) {
        auto [ey, ex, et] = m;
        check(F.is_ext() || et == 0, Err::Parse, "variable 't' not allowed over the base field");
        Coeff c = Coeff::from_scalar(F, Scalar::from_mpq(F.desc(), q));
        c = c * gen.pow(et);
        if (ey >= static_cast<int>(yc.size())) yc.resize(ey + 1, UPoly::zero(F));
        yc[ey] = yc[ey] + UPoly::monomial(F, ex, c);
    }
    return BPoly(F, std::move(yc));
}

namespace {

struct TermWriter {
    std::ostringstream os;
    bool first = true;

    void term(const Scalar& c, int ey, int ex, int et) {
        if (c.is_zero()) return;
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool printed = false;
        if (ey + ex + et == 0) {
            os << cs;
            return;
        }
        if (cs != "1") {
            os << cs;
            printed = true;
        }
        auto var = [&](const char* v, int e) {
            if (e <= 0) return;
            if (printed) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            printed = true;
        };
        var("y", ey);
        var("x", ex);
        var("t", et);
    }

    std::string str() { return first ? "0" : os.str(); }
};

}  // namespace

std::string print_upoly(const UPoly& p, char var) {
    TermWriter w;
    for (int i = p.deg(); i >= 0; --i) {
        Coeff c = p.get(i);
        if (c.is_zero()) continue;
        check(c.in_base(), Err::BadInput, "extension coefficients need print_bpoly_xyt");
        w.term(c.scalar(), var == 'y' ? i : 0, var == 'x' ? i : 0, var == 't' ? i : 0);
    }
    return w.str();
}

std::string print_bpoly(const BPoly& p) {
    TermWriter w;
    for (int j = p.degy(); j >= 0; --j)
        for (int i = p.degy() >= 0 ? p.ycoeff(j).deg() : -1; i >= 0; --i) {
            Coeff c = p.coeff(i, j);
            if (c.is_zero()) continue;
            check(c.in_base(), Err::BadInput, "extension coefficients need print_bpoly_xyt");
            w.term(c.scalar(), j, i, 0);
        }
    return w.str();
}

std::string print_bpoly_xyt(const BPoly& p) {
    TermWriter w;
    for (int j = p.degy(); j >= 0; --j)
        for (int i = p.ycoeff(j).deg(); i >= 0; --i) {
            Coeff c = p.coeff(i, j);
            for (int l = static_cast<int>(c.rep().size()) - 1; l >= 0; --l)
                w.term(c.rep()[l], j, i, l);
        }
    return w.str();
}

}  // namespace af
