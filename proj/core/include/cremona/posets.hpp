#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Set partition of a ground set I ⊆ [n], n <= 20. Elements are 1-based and
/// stored as bitmasks (bit k-1 = element k). Canonical form: blocks sorted
/// by their minimum element.
struct Partition {
    uint32_t ground = 0;
    std::vector<uint32_t> blocks;  // disjoint, nonempty, union = ground

    Partition() = default;
    Partition(uint32_t ground_mask, std::vector<uint32_t> blks);

    size_t block_count() const { return blocks.size(); }
    bool operator==(const Partition& o) const { return ground == o.ground && blocks == o.blocks; }

    /// Refinement: every block of *this contained in a block of coarser.
    bool refines(const Partition& coarser) const;

    /// {B ∩ I : B ∈ blocks, B ∩ I nonempty}; I must meet the ground set.
    Partition restricted_to(uint32_t mask) const;

    static Partition singletons(uint32_t ground_mask);
    static Partition one_block(uint32_t ground_mask);

    /// Blocks joined by "|"; elements concatenated when the ground set fits
    /// in single digits, comma-separated otherwise ("1|23", "1,10|2").
    std::string to_string() const;
    static Partition parse(const std::string& text);
};

constexpr int kMaxGroundSize = 20;

uint32_t full_mask(int n);
int popcount(uint32_t mask);
std::vector<int> mask_elements(uint32_t mask);

/// All set partitions of the ground set (Bell(|I|) of them), canonical, no
/// duplicates. Error on the empty set.
std::vector<Partition> all_partitions(uint32_t ground_mask);

/// Explicit finite poset of partitions under refinement, with Möbius values
/// computed at construction. Immutable afterwards; queries are read-only.
class PartitionPoset {
public:
    /// Elements must contain the minimal (all singletons) and maximal (one
    /// block) partitions of the ground set; duplicates are merged.
    PartitionPoset(uint32_t ground_mask, std::vector<Partition> elements);

    uint32_t ground() const { return ground_; }
    size_t size() const { return elems_.size(); }
    const std::vector<Partition>& elements() const { return elems_; }
    const Partition& element(size_t i) const { return elems_[i]; }
    std::optional<size_t> index_of(const Partition& p) const;
    size_t bottom_index() const { return bottom_; }  // all singletons
    size_t top_index() const { return top_; }        // one block

    bool leq(size_t a, size_t b) const { return leq_[a][b]; }

    /// Möbius value; error when either partition is not an element.
    long long mobius(const Partition& x, const Partition& y) const;
    long long mobius(size_t x, size_t y) const;
    long long mobius_to_top(size_t x) const { return mu_top_[x]; }

    /// Restriction poset L(I): every element restricted to the mask, merged.
    PartitionPoset restrict(uint32_t mask) const;

private:
    uint32_t ground_;
    std::vector<Partition> elems_;
    std::vector<std::vector<bool>> leq_;
    std::vector<long long> mu_top_;
    std::vector<std::vector<long long>> mu_;  // full table when size is small
    size_t bottom_ = 0, top_ = 0;
};

PartitionPoset full_partition_lattice(int n);
PartitionPoset interval_partitions(int n);     // 2^(n-1) elements
PartitionPoset one_cluster_partitions(int n);  // at most one block of size > 1
PartitionPoset min_max_poset(int n);           // {0-hat, 1-hat}

/// Sum of mu(x, 1-hat) over the poset; zero whenever |P| >= 2 with unique
/// extremes. Error on singleton posets.
long long mobius_sum(const PartitionPoset& p);

/// Exhaustively checks mu_{PxQ}((p,q),(p',q')) = mu_P(p,p') mu_Q(q,q') on
/// the coordinatewise-ordered product.
bool product_mobius_check(const PartitionPoset& p, const PartitionPoset& q);

}  // namespace cremona
