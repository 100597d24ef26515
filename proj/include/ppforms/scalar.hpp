#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace ppforms {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mixing exact and floating operands in one expression.
class mode_error : public error {
public:
    using error::error;
};

// Malformed input: bad degrees, dimension mismatch, broken files. CLI exit 2.
class invalid_input : public error {
public:
    using error::error;
};

// A bounded randomized search gave up (reported, never looped forever).
class search_failure : public error {
public:
    using error::error;
};

// A property that must hold for every valid input failed. Build-stopping.
class theorem_violation : public error {
public:
    using error::error;
};

enum class Mode { exact, floating };

// Complex scalar over either the exact Gaussian rationals or double pairs.
// The two modes never mix silently: any binary operation on scalars of
// different modes throws mode_error.
class Scalar {
public:
    Scalar() : mode_(Mode::exact) {}

    static Scalar exact(mpq_class re, mpq_class im = mpq_class(0));
    static Scalar exact_int(long re, long im = 0);
    static Scalar floating(double re, double im = 0.0);
    static Scalar zero(Mode m);
    static Scalar one(Mode m);
    static Scalar i_unit(Mode m);
    static Scalar i_power(int k, Mode m);  // i^k, k may be negative

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::exact; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws invalid_input on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    Scalar conj() const;
    Scalar norm() const;  // |z|^2 as a real scalar of the same mode

    // Structural zero test: exact zero, or bit-exact 0.0 in float mode.
    bool is_zero() const;
    bool is_real() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Sign of the real part; requires is_real().
    int real_sign() const;

    const mpq_class& re_q() const;
    const mpq_class& im_q() const;
    double re_d() const;
    double im_d() const;
    std::complex<double> to_complex() const { return {re_d(), im_d()}; }
    double abs() const { return std::abs(to_complex()); }

    Scalar to_floating() const;

    std::string re_str() const;
    std::string im_str() const;
    std::string str() const;

private:
    Mode mode_;
    mpq_class re_q_, im_q_;
    double re_d_ = 0.0, im_d_ = 0.0;

    void check_same_mode(const Scalar& o) const;
};

// Parses "num/den" or "num"; validates and canonicalizes.
mpq_class parse_rational(const std::string& s);

// Always emits the explicit "num/den" form.
std::string rational_str(const mpq_class& q);

}  // namespace ppforms
