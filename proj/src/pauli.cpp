#include "gibbslab/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace gibbslab {

void BitVec::xor_assign(const BitVec& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
}

bool BitVec::any() const {
    for (auto w : words)
        if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

int BitVec::lowest_set_bit() const {
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i]) return int(i * 64 + std::countr_zero(words[i]));
    return -1;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = words[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words.size(); ++i)
        c += std::popcount(a.words[i] & b.words[i]);
    return c;
}

bool and_any(const BitVec& a, const BitVec& b) {
    for (std::size_t i = 0; i < a.words.size(); ++i)
        if (a.words[i] & b.words[i]) return true;
    return false;
}

Pauli Pauli::single_x(std::size_t n, std::size_t q) {
    Pauli p(n);
    p.x.set(q, true);
    return p;
}

Pauli Pauli::single_z(std::size_t n, std::size_t q) {
    Pauli p(n);
    p.z.set(q, true);
    return p;
}

Pauli mul(const Pauli& p, const Pauli& q) {
    if (p.n_qubits() != q.n_qubits())
        throw std::invalid_argument("pauli mul: mismatched qubit index sets");
    Pauli r(p.n_qubits());
    // Moving Z^z1 across X^x2 picks up (-1)^{|z1 & x2|}.
    std::size_t swaps = and_popcount(p.z, q.x);
    r.phase_exp = std::uint8_t((p.phase_exp + q.phase_exp + 2 * (swaps & 1)) & 3);
    r.x = p.x;
    r.x.xor_assign(q.x);
    r.z = p.z;
    r.z.xor_assign(q.z);
    return r;
}

Pauli adjoint(const Pauli& p) {
    Pauli r = p;
    std::size_t y = and_popcount(p.x, p.z);
    r.phase_exp = std::uint8_t((4 - p.phase_exp + 2 * (y & 1)) & 3);
    return r;
}

bool commutes(const Pauli& p, const Pauli& q) {
    if (p.n_qubits() != q.n_qubits())
        throw std::invalid_argument("pauli commutes: mismatched qubit index sets");
    return ((and_popcount(p.x, q.z) + and_popcount(p.z, q.x)) & 1) == 0;
}

bool is_hermitian(const Pauli& p) {
    return ((p.phase_exp + and_popcount(p.x, p.z)) & 1) == 0;
}

Pauli conjugate_by_rotation(const Pauli& p, const Pauli& q) {
    if (!is_hermitian(p))
        throw std::invalid_argument("conjugate_by_rotation: generator must square to identity");
    if (commutes(p, q)) return q;
    Pauli r = mul(p, q);
    r.phase_exp = std::uint8_t((r.phase_exp + 1) & 3);  // i * p * q
    return r;
}

std::string to_string(const Pauli& p) {
    static const char* prefix[4] = {"+", "i", "-", "-i"};
    // Each Y letter carries one factor of i: i^k X^x Z^z = i^{k-ny} * prod(letters).
    std::size_t ny = and_popcount(p.x, p.z);
    int head = int((p.phase_exp + 8 - (ny % 4)) % 4);
    std::string s = prefix[head];
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        bool bx = p.x.get(q), bz = p.z.get(q);
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

Pauli pauli_from_string(const std::string& s) {
    std::size_t pos = 0;
    int head = 0;
    if (pos < s.size() && s[pos] == '+') {
        ++pos;
    } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        head = 2;
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            head = 3;
        }
    } else if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        head = 1;
    }
    std::size_t n = s.size() - pos;
    Pauli p(n);
    std::size_t ny = 0;
    for (std::size_t q = 0; q < n; ++q) {
        switch (s[pos + q]) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                ++ny;
                break;
            default:
                throw std::invalid_argument("pauli_from_string: bad letter in " + s);
        }
    }
    p.phase_exp = std::uint8_t((head + ny) & 3);
    return p;
}

int symplectic_pivot(const Pauli& p) {
    int bx = p.x.lowest_set_bit();
    if (bx >= 0) return bx;
    int bz = p.z.lowest_set_bit();
    if (bz >= 0) return int(p.n_qubits()) + bz;
    return -1;
}

PauliGroup::PauliGroup(const std::vector<Pauli>& generators) {
    if (!generators.empty()) n_ = generators.front().n_qubits();
    for (const auto& g : generators) add_generator(g);
}

void PauliGroup::add_generator(const Pauli& g) {
    if (n_ == 0 && rows_.empty()) n_ = g.n_qubits();
    if (g.n_qubits() != n_)
        throw std::invalid_argument("PauliGroup: mismatched qubit index sets");
    Pauli r = g;
    std::size_t at = 0;
    while (true) {
        int piv = symplectic_pivot(r);
        if (piv < 0) break;
        while (at < rows_.size() && symplectic_pivot(rows_[at]) < piv) ++at;
        if (at < rows_.size() && symplectic_pivot(rows_[at]) == piv) {
            r = mul(rows_[at], r);
            ++at;
        } else {
            rows_.insert(rows_.begin() + at, r);
            return;
        }
    }
    // Reduced to identity bits; phase 2 means -I is generated.
    if (r.phase_exp == 2) has_minus_identity_ = true;
}

std::optional<int> PauliGroup::member(const Pauli& q) const {
    if (!is_hermitian(q))
        throw std::invalid_argument("PauliGroup::member: non-Hermitian operator");
    Pauli r = q;
    std::size_t at = 0;
    while (true) {
        int piv = symplectic_pivot(r);
        if (piv < 0) break;
        while (at < rows_.size() && symplectic_pivot(rows_[at]) < piv) ++at;
        if (at < rows_.size() && symplectic_pivot(rows_[at]) == piv) {
            r = mul(rows_[at], r);
            ++at;
        } else {
            return std::nullopt;
        }
    }
    // r = (product of rows) * q up to the accumulated phase.
    if (r.phase_exp == 0) return 1;
    if (r.phase_exp == 2) return -1;
    // Possible only for non-Hermitian combinations; guarded above.
    throw std::logic_error("PauliGroup::member: non-real residual phase");
}

}  // namespace gibbslab
