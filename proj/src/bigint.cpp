#include "polymatch/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace polymatch {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<uint64_t>(INT64_MAX);
    return u <= static_cast<uint64_t>(INT64_MAX) + 1;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: value out of range");
    uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() > 1) u |= static_cast<uint64_t>(mag_[1]) << 32;
    if (sign_ < 0) return -static_cast<long long>(u - 1) - 1;
    return static_cast<long long>(u);
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp_abs(const BigInt& o) const { return cmp_mag(mag_, o.mag_); }

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? b : a;
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out;
    out.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = 0;
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        }
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            uint64_t cur = out.mag_[i + j] +
                           static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
            out.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry) {
            uint64_t cur = out.mag_[k] + carry;
            out.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = (mag_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& a, uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<uint32_t>(rem);
}

// Binary long division on magnitudes; simple and exact, adequate for the
// entry sizes elimination produces.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    BigInt bb;
    bb.sign_ = 1;
    bb.mag_ = b;
    BigInt rr;
    size_t nbits = 0;
    {
        BigInt aa;
        aa.sign_ = 1;
        aa.mag_ = a;
        nbits = aa.bit_length();
    }
    for (size_t i = nbits; i-- > 0;) {
        // rr = rr*2 + bit i of a
        uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
        for (size_t w = 0; w < rr.mag_.size(); ++w) {
            uint32_t next = rr.mag_[w] >> 31;
            rr.mag_[w] = (rr.mag_[w] << 1) | carry;
            carry = next;
        }
        if (carry) rr.mag_.push_back(carry);
        rr.sign_ = rr.mag_.empty() ? 0 : 1;
        if (cmp_mag(rr.mag_, b) >= 0) {
            rr.mag_ = sub_mag(rr.mag_, b);
            rr.sign_ = rr.mag_.empty() ? 0 : 1;
            q[i / 32] |= uint32_t(1) << (i % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rr.mag_;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    if (cmp_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rm);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        uint32_t rem = divmod_small(m, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt::from_string: empty digits");
    BigInt out;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
        out = out * BigInt(10) + BigInt(c - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

} // namespace polymatch
