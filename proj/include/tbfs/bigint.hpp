#pragma once

#include <array>
#include <cstring>
#include <string>

#include "tbfs/common.hpp"

namespace tbfs {

// Unsigned integer with a fixed limb capacity, value semantics, no heap.
// Sized for container values (< 3^q, q <= 320), spill node values and the
// base-conversion scratch buffers.
class BigUint {
  public:
    static constexpr int kCap = 18;  // 1152 bits

    BigUint() : n_(0) { w_.fill(0); }
    explicit BigUint(u64 v) : n_(v ? 1 : 0) {
        w_.fill(0);
        w_[0] = v;
    }

    static BigUint zero() { return BigUint(); }
    static BigUint one() { return BigUint(1); }

    bool is_zero() const { return n_ == 0; }
    int limbs() const { return n_; }
    u64 limb(int i) const { return i < n_ ? w_[i] : 0; }
    const u64* data() const { return w_.data(); }
    u64* mutable_data() { return w_.data(); }

    // number of significant bits; 0 for value 0
    int bit_length() const { return n_ == 0 ? 0 : (n_ - 1) * 64 + bit_length_u64(w_[n_ - 1]); }

    bool bit(int i) const {
        int l = i >> 6;
        return l < n_ && ((w_[l] >> (i & 63)) & 1);
    }

    u64 to_u64() const {
        TBFS_CHECK(n_ <= 1);
        return w_[0];
    }
    // low 64 bits, no range check
    u64 low_u64() const { return w_[0]; }

    // value mod 3 (2^64 = 1 mod 3, so the limb sum works)
    u32 mod3() const {
        u64 s = 0;
        for (int i = 0; i < n_; i++) s = (s + w_[i] % 3) % 3;
        return u32(s);
    }

    int cmp(const BigUint& o) const {
        if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
        for (int i = n_ - 1; i >= 0; i--)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i] ? -1 : 1;
        return 0;
    }
    bool operator==(const BigUint& o) const { return cmp(o) == 0; }
    bool operator!=(const BigUint& o) const { return cmp(o) != 0; }
    bool operator<(const BigUint& o) const { return cmp(o) < 0; }
    bool operator<=(const BigUint& o) const { return cmp(o) <= 0; }
    bool operator>(const BigUint& o) const { return cmp(o) > 0; }
    bool operator>=(const BigUint& o) const { return cmp(o) >= 0; }

    BigUint& add(const BigUint& o);
    BigUint& sub(const BigUint& o);  // requires *this >= o
    BigUint& add_u64(u64 v) { return add(BigUint(v)); }

    BigUint& shl(int k);
    BigUint& shr(int k);

    static BigUint mul(const BigUint& a, const BigUint& b);
    static BigUint mul_u64(const BigUint& a, u64 b);

    // quotient and remainder; d must be nonzero
    static void divmod(const BigUint& u, const BigUint& d, BigUint& q, BigUint& r);
    static u64 divmod_u64(const BigUint& u, u64 d, BigUint& q);  // returns remainder

    // read len (<=64) bits starting at bit pos
    u64 get_bits(int pos, int len) const;
    // write len (<=64) bits starting at bit pos; extends the value
    void set_bits(int pos, int len, u64 val);

    // low `bits` bits as a new value
    BigUint low_bits(int bits) const;

    std::string to_hex() const;
    std::string to_dec() const;
    static BigUint from_dec(const std::string& s);

    void normalize() {
        while (n_ > 0 && w_[n_ - 1] == 0) n_--;
    }
    void set_limbs(int n) { n_ = n; }

  private:
    std::array<u64, kCap> w_;
    int n_;
};

// 3^e by repeated squaring; counts squarings/multiplies if counters given
BigUint pow3_squaring(u32 e, Counters* c = nullptr);

// --- raw bit-span helpers over u64 arrays (payload storage, kernels) ---

// read len (<=64) bits at absolute bit position pos
inline u64 span_get_bits(const u64* base, u64 pos, int len) {
    if (len == 0) return 0;
    u64 l = pos >> 6;
    int off = int(pos & 63);
    u64 lo = base[l] >> off;
    if (off + len > 64) lo |= base[l + 1] << (64 - off);
    return len == 64 ? lo : (lo & ((u64(1) << len) - 1));
}

inline void span_set_bits(u64* base, u64 pos, int len, u64 val) {
    if (len == 0) return;
    u64 mask = len == 64 ? ~u64(0) : ((u64(1) << len) - 1);
    val &= mask;
    u64 l = pos >> 6;
    int off = int(pos & 63);
    base[l] = (base[l] & ~(mask << off)) | (val << off);
    if (off + len > 64) {
        int hi = off + len - 64;
        u64 himask = (u64(1) << hi) - 1;
        base[l + 1] = (base[l + 1] & ~himask) | (val >> (64 - off));
    }
}

}  // namespace tbfs
