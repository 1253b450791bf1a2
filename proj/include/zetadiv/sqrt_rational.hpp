#pragma once

#include <iomanip>
#include <sstream>

#include "zetadiv/common.hpp"

namespace zetadiv {

/// Exact arithmetic in Q(sqrt(s)) for a squarefree radicand s >= 1.
///
/// Values are stored as (u + v*sqrt(s))/w with arbitrary-precision integers,
/// w > 0 and gcd(u, v, w) = 1.  Perfect-square radicands collapse to
/// rationals at construction, so sqrt(16) is the integer 4 and q = 16
/// never drags an irrationality along.  All comparisons are exact: the
/// sign of u + v*sqrt(s) is decided by integer squaring with a case split
/// on the signs of u and v.
class SqrtRational {
public:
    SqrtRational() : u_(0), v_(0), w_(1), s_(1) {}
    SqrtRational(const Int& value) : u_(value), v_(0), w_(1), s_(1) {}
    SqrtRational(long value) : u_(value), v_(0), w_(1), s_(1) {}
    SqrtRational(int value) : u_(value), v_(0), w_(1), s_(1) {}
    SqrtRational(const Rat& value)
        : u_(boost::multiprecision::numerator(value)),
          v_(0),
          w_(boost::multiprecision::denominator(value)),
          s_(1) {}

    SqrtRational(Int u, Int v, Int w, Int s) : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), s_(std::move(s)) {
        if (w_ == 0) throw validation_error("SqrtRational: zero denominator");
        normalize();
    }

    /// sqrt(m) for m >= 0, with the square part pulled out of the radical.
    static SqrtRational sqrt_of(const Int& m) {
        if (m < 0) throw validation_error("SqrtRational::sqrt_of: negative radicand");
        if (m == 0) return SqrtRational(Int(0));
        Int square_root = 1, s = 1;
        Int rest = m;
        for (Int d = 2; d * d <= rest; ++d) {
            while (rest % (d * d) == 0) {
                rest /= d * d;
                square_root *= d;
            }
        }
        s = rest;
        if (s == 1) return SqrtRational(square_root);
        return SqrtRational(0, square_root, 1, s);
    }

    /// q^(k/2) for k >= 0: rational when k is even, q^((k-1)/2)*sqrt(q) otherwise.
    static SqrtRational pow_half(std::uint64_t q, int k) {
        if (k < 0) throw validation_error("SqrtRational::pow_half: negative exponent");
        Int whole = int_pow(Int(q), static_cast<unsigned>(k / 2));
        if (k % 2 == 0) return SqrtRational(whole);
        return SqrtRational(whole) * sqrt_of(Int(q));
    }

    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    const Int& w() const { return w_; }
    const Int& radicand() const { return s_; }

    bool is_rational() const { return v_ == 0; }
    Rat as_rational() const {
        if (!is_rational()) throw consistency_error("SqrtRational: irrational value used as rational");
        return Rat(u_, w_);
    }

    bool is_zero() const { return u_ == 0 && v_ == 0; }

    /// Exact sign of u + v*sqrt(s) (w > 0 never flips it).
    int sign() const {
        if (v_ == 0) return u_ == 0 ? 0 : (u_ > 0 ? 1 : -1);
        if (u_ == 0) return v_ > 0 ? 1 : -1;
        if (u_ > 0 && v_ > 0) return 1;
        if (u_ < 0 && v_ < 0) return -1;
        // opposite signs: compare u^2 against v^2 s
        Int lhs = u_ * u_, rhs = v_ * v_ * s_;
        if (lhs == rhs) return 0;  // cannot happen with squarefree s > 1, kept for safety
        bool u_dominates = lhs > rhs;
        return u_dominates ? (u_ > 0 ? 1 : -1) : (v_ > 0 ? 1 : -1);
    }

    SqrtRational operator-() const { return SqrtRational(-u_, -v_, w_, s_); }

    SqrtRational operator+(const SqrtRational& o) const {
        Int s = merged_radicand(o);
        return SqrtRational(u_ * o.w_ + o.u_ * w_, v_ * o.w_ + o.v_ * w_, w_ * o.w_, s);
    }
    SqrtRational operator-(const SqrtRational& o) const { return *this + (-o); }

    SqrtRational operator*(const SqrtRational& o) const {
        Int s = merged_radicand(o);
        return SqrtRational(u_ * o.u_ + v_ * o.v_ * s, u_ * o.v_ + v_ * o.u_, w_ * o.w_, s);
    }

    SqrtRational operator/(const SqrtRational& o) const {
        if (o.is_zero()) throw validation_error("SqrtRational: division by zero");
        Int s = merged_radicand(o);
        // 1/((u + v sqrt s)/w) = w (u - v sqrt s) / (u^2 - v^2 s); the
        // constructor renormalizes when the norm is negative.
        Int norm = o.u_ * o.u_ - o.v_ * o.v_ * s;
        return *this * SqrtRational(o.w_ * o.u_, -o.w_ * o.v_, norm, s);
    }

    bool operator==(const SqrtRational& o) const { return (*this - o).is_zero(); }
    bool operator!=(const SqrtRational& o) const { return !(*this == o); }
    bool operator<(const SqrtRational& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const SqrtRational& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const SqrtRational& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const SqrtRational& o) const { return (*this - o).sign() >= 0; }

    Int floor() const {
        // u + floor(v sqrt s) brackets u + v sqrt s within length-1 interval,
        // and (open) unit intervals with integer ends contain no integer.
        Int t = v_ * v_ * s_;
        Int r = boost::multiprecision::sqrt(t);
        Int fv;
        if (v_ >= 0)
            fv = r;
        else
            fv = (r * r == t) ? Int(-r) : Int(-r - 1);
        Int upper = u_ + fv;
        Int q = upper / w_;
        if (upper % w_ != 0 && upper < 0) --q;
        return q;
    }

    Int ceil() const { return -(-*this).floor(); }

    /// Canonical text form, e.g. "287/288", "6-4*sqrt(2)", "(1+sqrt(2))/3".
    std::string to_string() const {
        if (is_rational()) return rat_to_string(Rat(u_, w_));
        std::string radical = "sqrt(" + s_.str() + ")";
        std::string body;
        if (u_ == 0) {
            if (v_ == 1)
                body = radical;
            else if (v_ == -1)
                body = "-" + radical;
            else
                body = v_.str() + "*" + radical;
        } else {
            body = u_.str();
            Int av = v_ < 0 ? Int(-v_) : v_;
            body += (v_ < 0 ? "-" : "+");
            if (av != 1) body += av.str() + "*";
            body += radical;
        }
        if (w_ == 1) return body;
        return "(" + body + ")/" + w_.str();
    }

    Real to_real() const {
        Real r = Real(u_) + Real(v_) * boost::multiprecision::sqrt(Real(s_));
        return r / Real(w_);
    }

    /// Decimal rendering with the given number of significant digits.
    std::string decimal(int digits = 12) const {
        std::ostringstream os;
        os << std::setprecision(digits) << to_real();
        return os.str();
    }

private:
    Int u_, v_, w_, s_;

    Int merged_radicand(const SqrtRational& o) const {
        if (s_ == o.s_ || v_ == 0) return o.s_ == 1 ? s_ : o.s_;
        if (o.v_ == 0) return s_;
        throw consistency_error("SqrtRational: mixed radicands " + s_.str() + " and " + o.s_.str());
    }

    void normalize() {
        if (w_ < 0) {
            w_ = -w_;
            u_ = -u_;
            v_ = -v_;
        }
        if (v_ == 0) s_ = 1;
        if (s_ == 1) {
            u_ += v_;
            v_ = 0;
        }
        Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(u_), abs(v_)), w_);
        if (g > 1) {
            u_ /= g;
            v_ /= g;
            w_ /= g;
        }
    }
};

}  // namespace zetadiv
