#include <fockvx/render.hpp>

#include <vector>

namespace fockvx
{

namespace
{

struct Style {
    bool latex;

    std::string rational(const Rational &r) const
    {
        if (!latex || r.get_den() == 1) {
            return rational_to_string(r);
        }
        const std::string sign = sgn(r) < 0 ? "-" : "";
        return sign + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
    }

    std::string scalar(const Scalar &s) const
    {
        if (!latex) {
            return s.to_string();
        }
        if (s.is_real()) {
            return rational(s.re());
        }
        auto imag = [this](const Rational &v) {
            return v == 1 ? std::string("i") : v == -1 ? std::string("-i") : rational(v) + " i";
        };
        if (sgn(s.re()) == 0) {
            return imag(s.im());
        }
        if (sgn(s.im()) < 0) {
            return rational(s.re()) + " - " + imag(-s.im());
        }
        return rational(s.re()) + " + " + imag(s.im());
    }

    std::string power(const std::string &symbol, int index, long exp) const
    {
        std::string out = latex ? symbol + "_{" + std::to_string(index) + "}" : symbol + "_" + std::to_string(index);
        if (exp != 1) {
            out += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
        }
        return out;
    }

    std::string monomial(const std::string &symbol, const MultiIndex &p) const
    {
        std::string out;
        for (const auto &[mode, exp] : p.entries()) {
            if (!out.empty()) {
                out += " ";
            }
            out += power(symbol, mode, exp);
        }
        return out;
    }
};

// Joins coefficient/body pairs into a signed sum; an empty body marks a constant.
std::string signed_sum(const Style &style, const std::vector<std::pair<Scalar, std::string>> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[coeff, body] : terms) {
        Scalar c = coeff;
        bool negative = false;
        if (c.is_real() && sgn(c.re()) < 0) {
            negative = true;
            c = -c;
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string cs = style.scalar(c);
        if (!c.is_real()) {
            cs = style.latex ? "\\left(" + cs + "\\right)" : "(" + cs + ")";
        }
        if (body.empty()) {
            out += cs;
        } else if (c == Scalar(1)) {
            out += body;
        } else {
            out += cs + " " + body;
        }
    }
    return out;
}

std::string render_schur(const SchurOperator &op, const Style &style)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto &t : op.terms) {
        std::string body = style.monomial("f", t.p);
        if (!t.q.empty()) {
            const std::string ann = style.monomial("g", t.q);
            const std::string wrapped = style.latex ? "\\left(" + ann + "\\right)^{*}" : "(" + ann + ")*";
            body += body.empty() ? wrapped : " " + wrapped;
        }
        terms.emplace_back(t.coeff, body);
    }
    return signed_sum(style, terms);
}

std::string render_laurent(const LaurentPolynomial &series, const Style &style)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto &[w, c] : series.coeffs()) {
        std::string body;
        if (w == 1) {
            body = "z";
        } else if (w != 0) {
            body = style.latex ? "z^{" + std::to_string(w) + "}" : "z^" + std::to_string(w);
        }
        terms.emplace_back(c, body);
    }
    return signed_sum(style, terms);
}

std::string render_polynomial(const Polynomial &poly, const std::string &symbol, const Style &style)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto &[p, c] : poly.terms()) {
        terms.emplace_back(c, style.monomial(symbol, p));
    }
    return signed_sum(style, terms);
}

} // namespace

std::string to_latex(const Scalar &s)
{
    return Style{true}.scalar(s);
}

std::string to_text(const SchurOperator &op)
{
    return render_schur(op, Style{false});
}

std::string to_latex(const SchurOperator &op)
{
    return render_schur(op, Style{true});
}

std::string to_text(const LaurentPolynomial &series)
{
    return render_laurent(series, Style{false});
}

std::string to_latex(const LaurentPolynomial &series)
{
    return render_laurent(series, Style{true});
}

std::string to_text(const Polynomial &poly, const std::string &symbol)
{
    return render_polynomial(poly, symbol, Style{false});
}

std::string to_latex(const Polynomial &poly, const std::string &symbol)
{
    return render_polynomial(poly, symbol, Style{true});
}

} // namespace fockvx
