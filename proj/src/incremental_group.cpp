#include "gibbslab/incremental_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace gibbslab {

IncrementalPauliGroup::IncrementalPauliGroup(std::vector<Pauli> generators)
    : gens_(std::move(generators)),
      cover_count_(gens_.size(), 0),
      active_(gens_.size(), 0),
      basis_(gens_.size(), 0) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!is_hermitian(gens_[i]))
            throw std::invalid_argument("IncrementalPauliGroup: generator must be Hermitian");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!commutes(gens_[i], gens_[j]))
                throw std::invalid_argument("IncrementalPauliGroup: generators must commute");
    }
}

bool IncrementalPauliGroup::reduce(Pauli& p, BitVec* combo) const {
    std::size_t at = 0;
    while (true) {
        int piv = symplectic_pivot(p);
        if (piv < 0) return false;
        while (at < rows_.size() && rows_[at].pivot < piv) ++at;
        if (at < rows_.size() && rows_[at].pivot == piv) {
            p = mul(rows_[at].p, p);
            if (combo) combo->xor_assign(rows_[at].combo);
            ++at;
        } else {
            return true;
        }
    }
}

void IncrementalPauliGroup::insert_row(Pauli p, BitVec combo) {
    Row row{std::move(p), std::move(combo), 0};
    row.pivot = symplectic_pivot(row.p);
    auto it = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                               [](const Row& r, int piv) { return r.pivot < piv; });
    rows_.insert(it, std::move(row));
}

IncrementalPauliGroup::Status IncrementalPauliGroup::probe_inactive(int idx) const {
    if (active_[idx]) throw std::logic_error("probe_inactive: generator is active");
    Pauli p = gens_[idx];
    if (reduce(p, nullptr)) return Status::independent;
    return (p.phase_exp == 0) ? Status::dependent_plus : Status::dependent_minus;
}

bool IncrementalPauliGroup::dependent_on_others(int idx) const {
    if (!active_[idx]) throw std::logic_error("dependent_on_others: generator is inactive");
    if (!basis_[idx]) return true;
    return cover_count_[idx] > 0;
}

void IncrementalPauliGroup::activate(int idx) {
    if (active_[idx]) throw std::logic_error("activate: already active");
    Pauli p = gens_[idx];
    BitVec combo(gens_.size());
    combo.set(idx, true);
    if (reduce(p, &combo)) {
        insert_row(std::move(p), std::move(combo));
        basis_[idx] = 1;
    } else {
        if (p.phase_exp != 0)
            throw std::domain_error("activate: generator is inconsistent with the active group");
        combo.set(idx, false);  // relation g_idx = prod of the other basis terms
        for (std::size_t t : combo.set_bits()) ++cover_count_[t];
        nonbasis_.emplace(idx, std::move(combo));
    }
    active_[idx] = 1;
}

void IncrementalPauliGroup::deactivate(int idx) {
    if (!active_[idx]) throw std::logic_error("deactivate: already inactive");
    active_[idx] = 0;
    if (!basis_[idx]) {
        auto it = nonbasis_.find(idx);
        for (std::size_t t : it->second.set_bits()) --cover_count_[t];
        nonbasis_.erase(it);
        return;
    }
    basis_[idx] = 0;
    if (cover_count_[idx] > 0) {
        // Swap in the smallest dependent generator whose relation uses idx.
        auto rit = nonbasis_.begin();
        while (rit != nonbasis_.end() && !rit->second.get(idx)) ++rit;
        if (rit == nonbasis_.end())
            throw std::logic_error("deactivate: cover bookkeeping is inconsistent");
        int r = rit->first;
        BitVec crel = rit->second;
        for (std::size_t t : crel.set_bits()) --cover_count_[t];
        nonbasis_.erase(rit);
        BitVec subst = crel;
        subst.set(r, true);  // combo' = combo ^ crel ^ {r}; idx in crel cancels
        for (auto& row : rows_)
            if (row.combo.get(idx)) row.combo.xor_assign(subst);
        for (auto& [t, c] : nonbasis_) {
            if (!c.get(idx)) continue;
            for (std::size_t b : subst.set_bits()) {
                if (c.get(b))
                    --cover_count_[b];
                else
                    ++cover_count_[b];
            }
            c.xor_assign(subst);
        }
        basis_[r] = 1;
        return;
    }
    // Rank drops: fold together the echelon rows that involve idx.
    std::vector<Row> involved;
    for (std::size_t i = rows_.size(); i-- > 0;) {
        if (rows_[i].combo.get(idx)) {
            involved.push_back(std::move(rows_[i]));
            rows_.erase(rows_.begin() + long(i));
        }
    }
    if (involved.empty())
        throw std::logic_error("deactivate: basis generator missing from every row");
    const Row& anchor = involved.back();
    for (std::size_t j = 0; j + 1 < involved.size(); ++j) {
        Pauli p = mul(anchor.p, involved[j].p);
        BitVec combo = anchor.combo;
        combo.xor_assign(involved[j].combo);
        if (!reduce(p, &combo))
            throw std::logic_error("deactivate: folded row unexpectedly dependent");
        insert_row(std::move(p), std::move(combo));
    }
}

std::optional<int> IncrementalPauliGroup::member(const Pauli& q) const {
    if (!is_hermitian(q))
        throw std::invalid_argument("IncrementalPauliGroup::member: non-Hermitian operator");
    Pauli p = q;
    if (reduce(p, nullptr)) return std::nullopt;
    if (p.phase_exp == 0) return 1;
    if (p.phase_exp == 2) return -1;
    throw std::logic_error("IncrementalPauliGroup::member: non-real residual phase");
}

bool IncrementalPauliGroup::verify_against_rebuild() const {
    std::vector<Pauli> act;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (active_[i]) act.push_back(gens_[i]);
    PauliGroup ref(act);
    if (ref.contains_minus_identity()) return false;
    if (ref.rank() != rank()) return false;
    for (const auto& row : rows_) {
        // Each row must be reproduced exactly by its recorded combination.
        Pauli prod = Pauli::identity(row.p.n_qubits());
        for (std::size_t t : row.combo.set_bits()) {
            if (!active_[t]) return false;
            prod = mul(prod, gens_[t]);
        }
        if (!(prod == row.p)) return false;
        if (ref.member(row.p) != std::optional<int>(1)) return false;
    }
    return true;
}

}  // namespace gibbslab
