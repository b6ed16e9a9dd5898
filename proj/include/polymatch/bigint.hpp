#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polymatch {

// Signed arbitrary-precision integer.
//
// Magnitude is little-endian base-2^32 with no leading zero limbs; sign is
// -1, 0 or +1 and the magnitude is empty exactly when the value is zero.
// Only the operations the exact linear algebra needs are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_unit() const { return sign_ != 0 && mag_.size() == 1 && mag_[0] == 1; }
    bool fits_int64() const;
    long long to_int64() const; // requires fits_int64()
    std::string to_string() const;
    static BigInt from_string(const std::string& s);

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator*=(const BigInt& o);

    // Truncated division: q = trunc(a/b), r = a - q*b, so sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b); // nonnegative

    int cmp(const BigInt& o) const;
    int cmp_abs(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires cmp_mag(a, b) >= 0
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    static uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d); // returns remainder
    size_t bit_length() const;
};

} // namespace polymatch
