/*
   Copyright 2026 The modrees Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MODREES_FIELD_HPP
#define MODREES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace modrees {

/// Exact rational number. Always stored canonicalized (reduced, positive
/// denominator); arithmetic is arbitrary precision.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational from_decimal_string(const std::string& s) {
        // integer or num/den literals
        mpq_class v(s, 10);
        v.canonicalize();
        return Rational(v);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    // context helpers so generic code can mint constants from any element
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational from_int_like(long n) const { return Rational(n); }

    bool is_negative() const { return v_ < 0; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

/// Prime-field element: value in [0, p) with the modulus carried alongside.
/// p must be prime and < 2^31; arithmetic uses 64-bit intermediates.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint32_t v, std::uint32_t p) : v_(p ? v % p : v), p_(p) {}
    static Fp from_long(long n, std::uint32_t p) {
        long r = n % static_cast<long>(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint32_t>(r), p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const { check(o); return Fp(static_cast<std::uint32_t>((std::uint64_t(v_) + o.v_) % p_), p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(static_cast<std::uint32_t>((std::uint64_t(v_) + p_ - o.v_) % p_), p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // Fermat: p prime
        std::uint64_t base = v_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return Fp(static_cast<std::uint32_t>(acc), p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }
    Fp from_int_like(long n) const { return from_long(n, p_); }

    // residues are printed as canonical nonnegative values
    bool is_negative() const { return false; }
    Fp abs() const { return *this; }

    std::string str() const { return std::to_string(v_); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("prime-field modulus mismatch");
    }
    std::uint32_t v_, p_;
};

/// Field descriptors: the runtime context needed to mint elements (parsing,
/// ring construction). The element types above stay self-contained.
struct RationalField {
    using Elem = Rational;
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    Rational from_string(const std::string& s) const { return Rational::from_decimal_string(s); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
    using Elem = Fp;
    std::uint32_t p = 0;

    explicit PrimeField(std::uint32_t prime = 0) : p(prime) {
        if (prime) validate(prime);
    }
    static void validate(std::uint32_t q) {
        if (q < 2 || q >= (1u << 31)) throw std::invalid_argument("prime-field modulus out of range");
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) throw std::invalid_argument("prime-field modulus is not prime");
    }
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long n) const { return Fp::from_long(n, p); }
    Fp from_string(const std::string& s) const {
        // accept a/b with b invertible mod p
        auto slash = s.find('/');
        if (slash == std::string::npos) return from_int(std::stol(s));
        return from_int(std::stol(s.substr(0, slash))) / from_int(std::stol(s.substr(slash + 1)));
    }
    std::string name() const { return "F" + std::to_string(p); }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace modrees

#endif
