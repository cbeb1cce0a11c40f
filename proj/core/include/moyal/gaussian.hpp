#pragma once

#include <stdexcept>
#include <string>

#include "moyal/numeric.hpp"

namespace moyal {

/// Exact complex number with rational real and imaginary parts.
/// cpp_rational keeps every component canonical (lowest terms, positive
/// denominator), so equality is plain component equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(long num, long den) : re_(Rational(num, den)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0 && im_ != 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Multiplicative inverse; throws on zero.
    GaussianRational inverse() const {
        Rational norm = re_ * re_ + im_ * im_;
        if (norm == 0) throw std::domain_error("division by zero");
        return GaussianRational(re_ / norm, -im_ / norm);
    }

    GaussianRational pow(unsigned e) const {
        GaussianRational r(1);
        GaussianRational b = *this;
        while (e > 0) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    /// Debug form, e.g. "3/2-1/2*i". Pretty output lives in io.
    std::string str() const;

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

}  // namespace moyal
