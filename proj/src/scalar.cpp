#include <fockvx/scalar.hpp>

#include <cctype>
#include <stdexcept>

namespace fockvx
{

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    const auto den_part = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part.front() == '-'
        || den_part.front() == '+') {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    const mpz_class num(strip_plus(num_part), 10);
    const mpz_class den(strip_plus(den_part), 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational: \"" + std::string(text) + "\"");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_str();
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Scalar division by zero");
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string Scalar::to_string() const
{
    if (sgn(im_) == 0) {
        return rational_to_string(re_);
    }
    auto imag = [](const Rational &v) {
        if (v == 1) {
            return std::string("i");
        }
        if (v == -1) {
            return std::string("-i");
        }
        return rational_to_string(v) + "i";
    };
    if (sgn(re_) == 0) {
        return imag(im_);
    }
    if (sgn(im_) < 0) {
        return rational_to_string(re_) + " - " + imag(-im_);
    }
    return rational_to_string(re_) + " + " + imag(im_);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.to_string();
}

Scalar pow(const Scalar &base, unsigned exponent)
{
    Scalar result(1);
    Scalar b = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

Scalar factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(Rational(f));
}

} // namespace fockvx
