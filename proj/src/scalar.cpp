#include "ppforms/scalar.hpp"

#include <cctype>
#include <sstream>

namespace ppforms {

Scalar Scalar::exact(mpq_class re, mpq_class im) {
    Scalar s;
    s.mode_ = Mode::exact;
    s.re_q_ = std::move(re);
    s.im_q_ = std::move(im);
    return s;
}

Scalar Scalar::exact_int(long re, long im) {
    return exact(mpq_class(re), mpq_class(im));
}

Scalar Scalar::floating(double re, double im) {
    Scalar s;
    s.mode_ = Mode::floating;
    s.re_d_ = re;
    s.im_d_ = im;
    return s;
}

Scalar Scalar::zero(Mode m) {
    return m == Mode::exact ? exact_int(0) : floating(0.0);
}

Scalar Scalar::one(Mode m) {
    return m == Mode::exact ? exact_int(1) : floating(1.0);
}

Scalar Scalar::i_unit(Mode m) {
    return m == Mode::exact ? exact_int(0, 1) : floating(0.0, 1.0);
}

Scalar Scalar::i_power(int k, Mode m) {
    switch (((k % 4) + 4) % 4) {
        case 0: return one(m);
        case 1: return i_unit(m);
        case 2: return -one(m);
        default: return -i_unit(m);
    }
}

void Scalar::check_same_mode(const Scalar& o) const {
    if (mode_ != o.mode_)
        throw mode_error("cannot mix exact and floating scalars in one expression");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_mode(o);
    if (mode_ == Mode::exact) return exact(re_q_ + o.re_q_, im_q_ + o.im_q_);
    return floating(re_d_ + o.re_d_, im_d_ + o.im_d_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_mode(o);
    if (mode_ == Mode::exact) return exact(re_q_ - o.re_q_, im_q_ - o.im_q_);
    return floating(re_d_ - o.re_d_, im_d_ - o.im_d_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_mode(o);
    if (mode_ == Mode::exact)
        return exact(re_q_ * o.re_q_ - im_q_ * o.im_q_,
                     re_q_ * o.im_q_ + im_q_ * o.re_q_);
    return floating(re_d_ * o.re_d_ - im_d_ * o.im_d_,
                    re_d_ * o.im_d_ + im_d_ * o.re_d_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_mode(o);
    if (o.is_zero()) throw invalid_input("division by zero scalar");
    if (mode_ == Mode::exact) {
        mpq_class n = o.re_q_ * o.re_q_ + o.im_q_ * o.im_q_;
        return exact((re_q_ * o.re_q_ + im_q_ * o.im_q_) / n,
                     (im_q_ * o.re_q_ - re_q_ * o.im_q_) / n);
    }
    std::complex<double> r = to_complex() / o.to_complex();
    return floating(r.real(), r.imag());
}

Scalar Scalar::operator-() const {
    if (mode_ == Mode::exact) return exact(-re_q_, -im_q_);
    return floating(-re_d_, -im_d_);
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::conj() const {
    if (mode_ == Mode::exact) return exact(re_q_, -im_q_);
    return floating(re_d_, -im_d_);
}

Scalar Scalar::norm() const {
    if (mode_ == Mode::exact) return exact(re_q_ * re_q_ + im_q_ * im_q_);
    return floating(re_d_ * re_d_ + im_d_ * im_d_);
}

bool Scalar::is_zero() const {
    if (mode_ == Mode::exact) return re_q_ == 0 && im_q_ == 0;
    return re_d_ == 0.0 && im_d_ == 0.0;
}

bool Scalar::is_real() const {
    if (mode_ == Mode::exact) return im_q_ == 0;
    return im_d_ == 0.0;
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode_ != o.mode_) return false;
    if (mode_ == Mode::exact) return re_q_ == o.re_q_ && im_q_ == o.im_q_;
    return re_d_ == o.re_d_ && im_d_ == o.im_d_;
}

int Scalar::real_sign() const {
    if (!is_real()) throw invalid_input("real_sign on a non-real scalar");
    if (mode_ == Mode::exact) return sgn(re_q_);
    return re_d_ > 0 ? 1 : (re_d_ < 0 ? -1 : 0);
}

const mpq_class& Scalar::re_q() const {
    if (mode_ != Mode::exact) throw mode_error("re_q on a floating scalar");
    return re_q_;
}

const mpq_class& Scalar::im_q() const {
    if (mode_ != Mode::exact) throw mode_error("im_q on a floating scalar");
    return im_q_;
}

double Scalar::re_d() const {
    return mode_ == Mode::exact ? re_q_.get_d() : re_d_;
}

double Scalar::im_d() const {
    return mode_ == Mode::exact ? im_q_.get_d() : im_d_;
}

Scalar Scalar::to_floating() const {
    if (mode_ == Mode::floating) return *this;
    return floating(re_q_.get_d(), im_q_.get_d());
}

std::string Scalar::re_str() const {
    if (mode_ == Mode::exact) return rational_str(re_q_);
    std::ostringstream os;
    os.precision(17);
    os << re_d_;
    return os.str();
}

std::string Scalar::im_str() const {
    if (mode_ == Mode::exact) return rational_str(im_q_);
    std::ostringstream os;
    os.precision(17);
    os << im_d_;
    return os.str();
}

std::string Scalar::str() const {
    return re_str() + (is_real() ? "" : " + (" + im_str() + ")i");
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational string");
    for (char c : s)
        if (!std::isdigit((unsigned char)c) && c != '-' && c != '+' && c != '/')
            throw invalid_input("bad rational string: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw invalid_input("bad rational string: " + s);
    if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ppforms
