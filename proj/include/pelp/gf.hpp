#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pelp {

/*
 * An element of GF(p^m), stored as the integer sum c_0 + c_1 p + ... + c_{m-1} p^{m-1}
 * of its coefficient vector in the modulus basis. The packing makes elements trivially
 * copyable and totally ordered; Field::coeffs() recovers the coefficient vector.
 */
struct FieldElem {
    std::uint64_t value = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

using Word = std::vector<FieldElem>;

/*
 * Exact arithmetic in GF(p^m).
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial of degree m
 * over GF(p), coefficients compared from the constant term upwards. Two Field objects built
 * from the same (p, m) are equal and share no mutable state, so a Field can be passed by
 * value and read from any number of threads.
 */
class Field {
  public:
    Field(std::uint64_t p, unsigned m);

    /// Builds GF(p^m) from an explicit monic modulus, listed low-to-high degree.
    static Field from_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

    /// Parses the textual descriptor `GF(p^m; c_0,...,c_m)`.
    static Field parse_descriptor(const std::string& text);

    std::uint64_t characteristic() const { return d_->p; }
    unsigned degree() const { return d_->m; }
    std::uint64_t order() const { return d_->q; }
    const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
    std::string descriptor() const;

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    bool contains(FieldElem a) const { return a.value < d_->q; }

    /// Range-checked construction from the packed index.
    FieldElem element(std::uint64_t index) const;
    /// Image of an integer under Z -> GF(p).
    FieldElem from_int(std::int64_t v) const;
    FieldElem from_coeffs(std::span<const std::uint64_t> coeffs) const;
    std::vector<std::uint64_t> coeffs(FieldElem a) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// The smallest (by packed index) generator of the multiplicative group.
    FieldElem primitive_element() const;
    /// primitive_element()^((q-1)/n); throws unless n divides q - 1.
    FieldElem nth_root_of_unity(std::uint64_t n) const;
    std::uint64_t multiplicative_order(FieldElem a) const;

    friend bool operator==(const Field& a, const Field& b);

  private:
    enum class Kind { prime, binary, extension };

    struct Data {
        std::uint64_t p = 0;
        unsigned m = 0;
        std::uint64_t q = 0;
        Kind kind = Kind::prime;
        std::vector<std::uint64_t> modulus;  // monic, low-to-high, length m + 1
        std::uint64_t binary_modulus = 0;     // modulus bits without the leading term
        std::vector<std::uint64_t> order_primes;  // distinct primes dividing q - 1
        FieldElem primitive{};
    };

    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static std::shared_ptr<const Data> make_data(std::uint64_t p, std::vector<std::uint64_t> modulus);

    FieldElem find_primitive() const;
    FieldElem mul_extension(FieldElem a, FieldElem b) const;
    FieldElem add_extension(FieldElem a, FieldElem b, bool subtract) const;

    std::shared_ptr<const Data> d_;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);
/// Prime factorisation with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Irreducibility test (Rabin) for a monic polynomial over GF(p), coefficients low-to-high.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic);

}  // namespace pelp
