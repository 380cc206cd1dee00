#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gibbslab/pauli.hpp"

namespace gibbslab {

// Phase-tracked GF(2) echelon basis over a fixed family of mutually
// commuting Hermitian generators, supporting single-generator activation
// and deactivation with O(rank) work per flip. Each echelon row records
// which active generators multiply to it, so removing a generator only
// rewrites bookkeeping (or re-reduces the few rows that involve it).
class IncrementalPauliGroup {
public:
    enum class Status { independent, dependent_plus, dependent_minus };

    explicit IncrementalPauliGroup(std::vector<Pauli> generators);

    std::size_t n_generators() const { return gens_.size(); }
    std::size_t rank() const { return rows_.size(); }
    bool active(int idx) const { return active_[idx]; }
    const Pauli& generator(int idx) const { return gens_[idx]; }

    // Relation of an inactive generator to the span of the active set.
    Status probe_inactive(int idx) const;

    // For an active generator: true iff the rank is unchanged when it is
    // removed (its operator remains a product of the other active ones).
    bool dependent_on_others(int idx) const;

    void activate(int idx);    // throws if the activation is inconsistent
    void deactivate(int idx);

    // Sign with which a Hermitian operator appears in the active group,
    // or nullopt when it is not a member.
    std::optional<int> member(const Pauli& q) const;

    // Full re-elimination cross-check (debug path).
    bool verify_against_rebuild() const;

private:
    struct Row {
        Pauli p;
        BitVec combo;  // over generator indices; product of those = p
        int pivot;
    };

    std::vector<Pauli> gens_;
    std::vector<Row> rows_;                // sorted by pivot, pivots unique
    std::map<int, BitVec> nonbasis_;       // active dependent generators
    std::vector<int> cover_count_;         // # nonbasis combos containing a term
    std::vector<char> active_, basis_;

    // Reduces p (and combo, if given) against the echelon; returns true
    // if a nonzero residual remains.
    bool reduce(Pauli& p, BitVec* combo) const;
    void insert_row(Pauli p, BitVec combo);
};

}  // namespace gibbslab
