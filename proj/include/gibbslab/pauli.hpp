#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gibbslab {

// Fixed-width bit vector indexed by a global qubit enumeration.
// Width is set at construction and never changes.
struct BitVec {
    std::size_t n_bits = 0;
    std::vector<std::uint64_t> words;

    BitVec() = default;
    explicit BitVec(std::size_t n) : n_bits(n), words((n + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words[i >> 6] |= mask;
        else
            words[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_assign(const BitVec& o);
    bool any() const;
    std::size_t popcount() const;
    // Index of the lowest set bit, or -1 if none.
    int lowest_set_bit() const;
    std::vector<std::size_t> set_bits() const;

    bool operator==(const BitVec&) const = default;
};

std::size_t and_popcount(const BitVec& a, const BitVec& b);
bool and_any(const BitVec& a, const BitVec& b);

// A Pauli operator i^phase_exp * X^x * Z^z over a fixed qubit set.
struct Pauli {
    std::uint8_t phase_exp = 0;  // exponent of i, mod 4
    BitVec x;
    BitVec z;

    Pauli() = default;
    explicit Pauli(std::size_t n) : x(n), z(n) {}

    std::size_t n_qubits() const { return x.n_bits; }
    bool is_identity_bits() const { return !x.any() && !z.any(); }

    static Pauli identity(std::size_t n) { return Pauli(n); }
    // Single-qubit X/Z embedded at position q.
    static Pauli single_x(std::size_t n, std::size_t q);
    static Pauli single_z(std::size_t n, std::size_t q);

    bool operator==(const Pauli&) const = default;
};

// Exact product pq with phase tracking. Throws on mismatched qubit sets.
Pauli mul(const Pauli& p, const Pauli& q);

// Hermitian conjugate.
Pauli adjoint(const Pauli& p);

// True iff the symplectic form (x_p.z_q + z_p.x_q) vanishes mod 2.
bool commutes(const Pauli& p, const Pauli& q);

// True iff phase_exp + |x & z| is even; equivalent to p^2 = +I.
bool is_hermitian(const Pauli& p);

// Conjugation by the rotation exp(i*pi/4*p): returns q if [p,q]=0,
// i*p*q if {p,q}=0. Requires p Hermitian (p^2 = I).
Pauli conjugate_by_rotation(const Pauli& p, const Pauli& q);

// Text form: sign prefix ("+", "i", "-", "-i") then one of I,X,Y,Z per qubit.
std::string to_string(const Pauli& p);
Pauli pauli_from_string(const std::string& s);

// Abelian-oriented group of Pauli operators held as a phase-tracked
// GF(2) echelon basis over the (x|z) symplectic representation.
class PauliGroup {
public:
    PauliGroup() = default;
    explicit PauliGroup(std::size_t n_qubits) : n_(n_qubits) {}
    explicit PauliGroup(const std::vector<Pauli>& generators);

    // Adds one generator, reducing it against the current basis.
    void add_generator(const Pauli& g);

    std::size_t rank() const { return rows_.size(); }
    std::size_t n_qubits() const { return n_; }
    bool contains_minus_identity() const { return has_minus_identity_; }

    // For Hermitian q: nullopt if q is not in the group up to sign,
    // otherwise the sign (+1/-1) with which q appears.
    // Sign semantics assume mutually commuting generators.
    std::optional<int> member(const Pauli& q) const;

    const std::vector<Pauli>& echelon_rows() const { return rows_; }

private:
    std::size_t n_ = 0;
    std::vector<Pauli> rows_;  // sorted by pivot over the 2n-bit (x|z) vector
    bool has_minus_identity_ = false;

    friend int symplectic_pivot(const Pauli& p);
};

// First set bit over the concatenated (x|z) vector, or -1 for identity bits.
int symplectic_pivot(const Pauli& p);

}  // namespace gibbslab
