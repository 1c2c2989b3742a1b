#ifndef WARING_BIGFLOAT_HPP
#define WARING_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "waring/rational.hpp"

namespace waring {

/// Owning MPFR value with an explicit per-object precision. Binary
/// operations round to the larger precision of their operands.
class BigFloat {
public:
    explicit BigFloat(int precision_bits = 128);
    BigFloat(const Rational& q, int precision_bits);
    BigFloat(long value, int precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

    BigFloat abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal scientific notation with enough digits for the precision.
    std::string to_string() const;

    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace waring

#endif  // WARING_BIGFLOAT_HPP
