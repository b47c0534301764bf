#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "liouville/context.hpp"

namespace liouville {

// Midpoint/radius enclosure of a real number. The midpoint carries the working
// precision; the radius is a 32-bit float always rounded upward, so every
// arithmetic result's ball contains the exact value whenever the inputs' balls
// contain theirs.
class RealBall {
public:
    RealBall();
    explicit RealBall(long prec);
    RealBall(const RealBall& o);
    RealBall(RealBall&& o) noexcept;
    RealBall& operator=(const RealBall& o);
    RealBall& operator=(RealBall&& o) noexcept;
    ~RealBall();

    long prec() const { return prec_; }

    static RealBall exact_si(long v, long prec = 0);
    static RealBall exact_double(double v, long prec = 0);
    static RealBall from_mpz(const mpz_class& z, long prec = 0);
    static RealBall from_mpq(const mpq_class& q, long prec = 0);
    static RealBall from_interval(const mpfr_t lo, const mpfr_t hi, long prec = 0);
    static RealBall pi(long prec = 0);
    static RealBall pm_one(long prec = 0); // [-1, 1]

    // str is parsed by mpfr (decimal or hex float); the parse error is absorbed
    // into the radius.
    static RealBall from_string(const std::string& mid, const std::string& rad, long prec = 0);

    RealBall& operator+=(const RealBall& o);
    RealBall& operator-=(const RealBall& o);
    RealBall& operator*=(const RealBall& o);
    friend RealBall operator+(RealBall a, const RealBall& b) { return a += b; }
    friend RealBall operator-(RealBall a, const RealBall& b) { return a -= b; }
    friend RealBall operator*(RealBall a, const RealBall& b) { return a *= b; }
    RealBall operator-() const;

    void mul_si(long v);
    void add_error(const mpfr_t extra); // inflate radius
    void add_error_2exp(long e);        // inflate radius by 2^e

    // Division: raises PossiblyZero when the divisor's ball straddles zero.
    friend RealBall div(const RealBall& a, const RealBall& b);

    RealBall abs() const;
    RealBall sqrt() const;      // domain is clipped at zero from below
    RealBall log() const;       // raises PossiblyZero when ball touches <= 0
    RealBall exp() const;
    RealBall max_with(const RealBall& o) const;
    static std::pair<RealBall, RealBall> sincos(const RealBall& theta);

    bool contains_zero() const;
    bool is_exact_zero() const;
    int sign_certain() const; // -1, +1, or 0 when the ball straddles zero
    bool certainly_lt(const RealBall& o) const;
    bool certainly_le(const RealBall& o) const;
    bool overlaps(const RealBall& o) const;
    bool contains(const mpq_class& q) const;

    double mid_double() const;
    double rad_double() const; // rounded up
    double lower_double() const;
    double upper_double() const;
    void lower(mpfr_t out) const; // RNDD
    void upper(mpfr_t out) const; // RNDU
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    std::string mid_string() const; // exact hex-float, deterministic
    std::string rad_string() const;

private:
    static long effective(long prec) { return prec > 0 ? prec : Context::global().start_prec; }
    void bump_rounding(int ternary);

    mpfr_t mid_;
    mpfr_t rad_;
    long prec_;
};

// Rectangular complex enclosure built from two real balls. The serialized
// disk radius is sqrt(rad_re^2 + rad_im^2) rounded up, which contains the
// rectangle, so the disk form remains sound.
class ComplexBall {
public:
    ComplexBall() = default;
    ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit ComplexBall(RealBall re) : re_(std::move(re)), im_(RealBall::exact_si(0, re_.prec())) {}

    static ComplexBall exact_si(long re, long im = 0, long prec = 0);
    static ComplexBall from_mpq(const mpq_class& re, const mpq_class& im, long prec = 0);
    // Disk form: center (re, im) with radius rad; stored as the bounding rectangle.
    static ComplexBall disk(const RealBall& re, const RealBall& im, const mpq_class& rad);
    static ComplexBall root_of_unity(unsigned long k, unsigned long n, long prec = 0);

    const RealBall& re() const { return re_; }
    const RealBall& im() const { return im_; }
    RealBall& re() { return re_; }
    RealBall& im() { return im_; }

    ComplexBall& operator+=(const ComplexBall& o);
    ComplexBall& operator-=(const ComplexBall& o);
    ComplexBall& operator*=(const ComplexBall& o);
    friend ComplexBall operator+(ComplexBall a, const ComplexBall& b) { return a += b; }
    friend ComplexBall operator-(ComplexBall a, const ComplexBall& b) { return a -= b; }
    friend ComplexBall operator*(ComplexBall a, const ComplexBall& b) { return a *= b; }
    ComplexBall operator-() const;
    friend ComplexBall div(const ComplexBall& a, const ComplexBall& b);

    void mul_real(const RealBall& r);
    void mul_si(long v);
    ComplexBall conj() const;

    RealBall abs() const;
    RealBall abs_sq() const;
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool is_nonzero_certain() const { return !contains_zero(); }
    bool overlaps(const ComplexBall& o) const { return re_.overlaps(o.re()) && im_.overlaps(o.im()); }

    std::string to_string() const;

private:
    RealBall re_;
    RealBall im_;
};

} // namespace liouville
