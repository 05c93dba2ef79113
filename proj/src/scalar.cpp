#include "coda/scalar.hpp"

namespace coda {

void Scalar::assign(const RationalFunction& f) {
    if (f.is_constant())
        v_ = f.constant_value();
    else
        v_ = f;
}

bool Scalar::is_zero() const {
    if (is_rational())
        return rational() == 0;
    return std::get<RationalFunction>(v_).is_zero();
}

RationalFunction Scalar::as_function() const {
    if (is_rational())
        return RationalFunction(rational());
    return std::get<RationalFunction>(v_);
}

Scalar Scalar::operator-() const {
    if (is_rational())
        return Scalar(Rational(-rational()));
    return Scalar(-std::get<RationalFunction>(v_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational() && o.is_rational())
        return Scalar(Rational(rational() + o.rational()));
    return Scalar(as_function() + o.as_function());
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational() && o.is_rational())
        return Scalar(Rational(rational() * o.rational()));
    return Scalar(as_function() * o.as_function());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero())
        throw MalformedScalarError("scalar division by zero");
    if (is_rational() && o.is_rational())
        return Scalar(Rational(rational() / o.rational()));
    return Scalar(as_function() / o.as_function());
}

Scalar Scalar::inverse() const {
    return Scalar(1) / *this;
}

Rational Scalar::evaluate_parameter(const Rational& value) const {
    if (is_rational())
        return rational();
    return std::get<RationalFunction>(v_).evaluate(value);
}

std::string Scalar::str() const {
    if (is_rational())
        return to_string(rational());
    return std::get<RationalFunction>(v_).str();
}

}  // namespace coda
