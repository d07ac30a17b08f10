#include "pelp/gf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pelp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // coefficients low-to-high over GF(p)

constexpr u64 kOrderBudget = u64{1} << 63;
constexpr unsigned kMaxDegree = 63;

u64 mulmod(u64 a, u64 b, u64 mod) { return static_cast<u64>(static_cast<u128>(a) * b % mod); }

u64 powmod(u64 a, u64 e, u64 mod) {
    u64 r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mulmod(r, a, mod);
        a = mulmod(a, a, mod);
        e >>= 1;
    }
    return r;
}

// ---- polynomials over GF(p), used for modulus selection ----

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < df; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(lead, f[i], p)) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        const u64 inv = powmod(b.back(), p - 2, p);
        for (auto& c : b) c = mulmod(c, inv, p);
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f by k successive p-th powers
Poly frobenius_power_of_x(unsigned k, const Poly& f, u64 p) {
    Poly x = poly_mod(Poly{0, 1}, f, p);
    for (unsigned i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
    return x;
}

std::vector<u64> distinct_primes(u64 n) {
    auto f = factorize(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// ---- integer factorisation ----

u64 pollard_brent(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 y = seed % n, c = (seed * 6364136223846793005ULL + 1442695040888963407ULL) % n, m = 128;
    if (c == 0) c = 1;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 seed = 2;; ++seed) {
        const u64 d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
    std::vector<u64> out;
    for (u64 sp = 2; sp < 1000 && sp * sp <= n; ++sp) {
        while (n % sp == 0) {
            out.push_back(sp);
            n /= sp;
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic) {
    if (monic.size() < 2 || monic.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
    const auto m = static_cast<unsigned>(monic.size() - 1);
    if (m == 1) return true;
    const Poly x{0, 1};
    if (poly_sub(frobenius_power_of_x(m, monic, p), poly_mod(x, monic, p), p).size() != 0) return false;
    for (u64 r : distinct_primes(m)) {
        Poly h = poly_sub(frobenius_power_of_x(m / static_cast<unsigned>(r), monic, p), poly_mod(x, monic, p), p);
        if (poly_gcd(monic, h, p).size() != 1) return false;
    }
    return true;
}

// ---- Field ----

std::shared_ptr<const Field::Data> Field::make_data(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw std::invalid_argument("field: extension degree must be >= 1");
    const auto m = static_cast<unsigned>(modulus.size() - 1);
    if (m > kMaxDegree) throw std::invalid_argument("field: extension degree too large");
    u64 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > kOrderBudget / p) throw std::invalid_argument("field: p^m exceeds 2^63");
        q *= p;
    }
    for (u64 c : modulus) {
        if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw std::invalid_argument("field: modulus must be monic");
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("field: modulus is reducible");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = q;
    d->modulus = std::move(modulus);
    if (m == 1) {
        d->kind = Kind::prime;
    } else if (p == 2) {
        d->kind = Kind::binary;
        for (unsigned i = 0; i < m; ++i) d->binary_modulus |= d->modulus[i] << i;
    } else {
        d->kind = Kind::extension;
    }
    d->order_primes = distinct_primes(q - 1);
    const Field tmp(d);
    d->primitive = tmp.find_primitive();
    return d;
}

Field::Field(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    if (m > kMaxDegree) throw std::invalid_argument("field: extension degree too large");
    {
        u64 q = 1;
        for (unsigned i = 0; i < m; ++i) {
            if (q > kOrderBudget / p) throw std::invalid_argument("field: p^m exceeds 2^63");
            q *= p;
        }
    }
    // Enumerate monic candidates with c_0 most significant, c_{m-1} fastest.
    std::vector<u64> cand(m + 1, 0);
    cand[m] = 1;
    if (m >= 2) cand[0] = 1;  // c_0 = 0 means x | f
    for (;;) {
        if (is_irreducible(p, cand)) {
            d_ = make_data(p, cand);
            return;
        }
        int i = static_cast<int>(m) - 1;
        while (i >= 0) {
            if (++cand[i] < p) break;
            cand[i] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("field: no irreducible polynomial found");
    }
}

Field Field::from_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    return Field(make_data(p, modulus));
}

std::string Field::descriptor() const {
    std::ostringstream os;
    os << "GF(" << d_->p << '^' << d_->m << "; ";
    for (std::size_t i = 0; i < d_->modulus.size(); ++i) os << (i ? "," : "") << d_->modulus[i];
    os << ')';
    return os.str();
}

Field Field::parse_descriptor(const std::string& text) {
    // GF(p^m; c_0,...,c_m)
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    const auto bad = [&] { return std::invalid_argument("field: malformed descriptor '" + text + "'"); };
    if (s.rfind("GF(", 0) != 0 || s.back() != ')') throw bad();
    const auto caret = s.find('^'), semi = s.find(';');
    if (caret == std::string::npos || semi == std::string::npos || caret > semi) throw bad();
    try {
        const u64 p = std::stoull(s.substr(3, caret - 3));
        const unsigned long m = std::stoul(s.substr(caret + 1, semi - caret - 1));
        std::vector<u64> mod;
        std::stringstream ss(s.substr(semi + 1, s.size() - semi - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) mod.push_back(std::stoull(tok));
        if (mod.size() != m + 1) throw bad();
        return from_modulus(p, mod);
    } catch (const std::logic_error&) {
        throw bad();
    }
}

FieldElem Field::element(std::uint64_t index) const {
    if (index >= d_->q) throw std::out_of_range("field: element index " + std::to_string(index) + " not in " + descriptor());
    return {index};
}

FieldElem Field::from_int(std::int64_t v) const {
    // q <= 2^63 forces p < 2^63
    const auto p = static_cast<std::int64_t>(d_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return {static_cast<u64>(r)};
}

FieldElem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() != d_->m) throw std::invalid_argument("field: coefficient vector must have length m");
    u64 v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= d_->p) throw std::invalid_argument("field: coefficient out of range");
        v = v * d_->p + coeffs[i];
    }
    return {v};
}

std::vector<std::uint64_t> Field::coeffs(FieldElem a) const {
    std::vector<u64> c(d_->m, 0);
    u64 v = a.value;
    for (unsigned i = 0; i < d_->m; ++i) {
        c[i] = v % d_->p;
        v /= d_->p;
    }
    return c;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    switch (d_->kind) {
        case Kind::binary: return {a.value ^ b.value};
        case Kind::prime: {
            const u64 s = a.value + b.value;  // p < 2^63, no overflow
            return {s >= d_->p ? s - d_->p : s};
        }
        default: return add_extension(a, b, false);
    }
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
    switch (d_->kind) {
        case Kind::binary: return {a.value ^ b.value};
        case Kind::prime: return {a.value >= b.value ? a.value - b.value : a.value + (d_->p - b.value)};
        default: return add_extension(a, b, true);
    }
}

FieldElem Field::neg(FieldElem a) const { return sub(zero(), a); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (a.value == 0 || b.value == 0) return {0};
    switch (d_->kind) {
        case Kind::prime: return {mulmod(a.value, b.value, d_->p)};
        case Kind::binary: {
            const unsigned m = d_->m;
            const u64 top = u64{1} << (m - 1);
            const u64 mask = (m == 64) ? ~u64{0} : ((u64{1} << m) - 1);
            u64 x = a.value, y = b.value, r = 0;
            while (y) {
                if (y & 1) r ^= x;
                y >>= 1;
                const bool carry = (x & top) != 0;
                x = (x << 1) & mask;
                if (carry) x ^= d_->binary_modulus;
            }
            return {r};
        }
        default: return mul_extension(a, b);
    }
}

FieldElem Field::add_extension(FieldElem a, FieldElem b, bool subtract) const {
    const u64 p = d_->p;
    u64 x = a.value, y = b.value, out = 0, scale = 1;
    for (unsigned i = 0; i < d_->m; ++i) {
        const u64 xa = x % p, yb = y % p;
        x /= p;
        y /= p;
        const u64 c = subtract ? (xa + p - yb) % p : (xa + yb) % p;
        out += c * scale;
        scale *= p;
    }
    return {out};
}

FieldElem Field::mul_extension(FieldElem a, FieldElem b) const {
    const u64 p = d_->p;
    const unsigned m = d_->m;
    std::array<u64, kMaxDegree> x{}, y{};
    std::array<u64, 2 * kMaxDegree> r{};
    u64 va = a.value, vb = b.value;
    for (unsigned i = 0; i < m; ++i) {
        x[i] = va % p;
        va /= p;
        y[i] = vb % p;
        vb /= p;
    }
    // p^2 < 2^63 whenever m >= 2, so single products fit in 64 bits.
    for (unsigned i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    }
    const auto& f = d_->modulus;
    for (unsigned d = 2 * m - 2; d >= m; --d) {
        const u64 lead = r[d];
        if (lead == 0) continue;
        const unsigned shift = d - m;
        for (unsigned i = 0; i < m; ++i) r[shift + i] = (r[shift + i] + (p - f[i]) * lead) % p;
        r[d] = 0;
    }
    u64 out = 0;
    for (unsigned i = m; i-- > 0;) out = out * p + r[i];
    return {out};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

FieldElem Field::inv(FieldElem a) const {
    if (a.value == 0) throw std::domain_error("field: inverse of zero");
    return pow(a, d_->q - 2);
}

std::uint64_t Field::multiplicative_order(FieldElem a) const {
    if (a.value == 0) throw std::domain_error("field: zero has no multiplicative order");
    u64 order = d_->q - 1;
    for (u64 r : d_->order_primes) {
        while (order % r == 0 && pow(a, order / r) == one()) order /= r;
    }
    return order;
}

FieldElem Field::primitive_element() const { return d_->primitive; }

FieldElem Field::find_primitive() const {
    if (d_->q == 2) return one();
    for (u64 g = 2; g < d_->q; ++g) {
        bool generator = true;
        for (u64 r : d_->order_primes) {
            if (pow({g}, (d_->q - 1) / r) == one()) {
                generator = false;
                break;
            }
        }
        if (generator) return {g};
    }
    throw std::logic_error("field: no primitive element found");
}

FieldElem Field::nth_root_of_unity(std::uint64_t n) const {
    if (n == 0 || (d_->q - 1) % n != 0) {
        throw std::invalid_argument("field: " + std::to_string(n) + " does not divide |" + descriptor() + "^*| = " +
                                    std::to_string(d_->q - 1));
    }
    return pow(primitive_element(), (d_->q - 1) / n);
}

bool operator==(const Field& a, const Field& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
}

}  // namespace pelp
