#include "cremona/posets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace cremona {

uint32_t full_mask(int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw error("ground set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxGroundSize) + "]");
    return (n == 32) ? ~0u : ((1u << n) - 1);
}

int popcount(uint32_t mask) { return std::popcount(mask); }

std::vector<int> mask_elements(uint32_t mask) {
    std::vector<int> out;
    for (int k = 1; k <= kMaxGroundSize + 12; ++k)
        if (mask & (1u << (k - 1))) out.push_back(k);
    return out;
}

Partition::Partition(uint32_t ground_mask, std::vector<uint32_t> blks)
    : ground(ground_mask), blocks(std::move(blks)) {
    uint32_t seen = 0;
    for (uint32_t b : blocks) {
        if (b == 0) throw error("empty block in partition");
        if (seen & b) throw error("overlapping blocks in partition");
        seen |= b;
    }
    if (seen != ground) throw error("partition blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(), [](uint32_t a, uint32_t b) {
        return (a & -a) < (b & -b);  // by minimum element
    });
}

bool Partition::refines(const Partition& coarser) const {
    for (uint32_t b : blocks) {
        uint32_t low = b & -b;
        bool ok = false;
        for (uint32_t c : coarser.blocks)
            if (c & low) {
                ok = (b & ~c) == 0;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

Partition Partition::restricted_to(uint32_t mask) const {
    std::vector<uint32_t> out;
    for (uint32_t b : blocks)
        if (uint32_t r = b & mask) out.push_back(r);
    return Partition(ground & mask, std::move(out));
}

Partition Partition::singletons(uint32_t ground_mask) {
    std::vector<uint32_t> blocks;
    for (uint32_t m = ground_mask; m; m &= m - 1) blocks.push_back(m & -m);
    return Partition(ground_mask, std::move(blocks));
}

Partition Partition::one_block(uint32_t ground_mask) {
    return Partition(ground_mask, {ground_mask});
}

std::string Partition::to_string() const {
    bool digits = mask_elements(ground).empty() || mask_elements(ground).back() <= 9;
    std::ostringstream os;
    bool first_block = true;
    for (uint32_t b : blocks) {
        if (!first_block) os << "|";
        first_block = false;
        bool first_el = true;
        for (int k : mask_elements(b)) {
            if (!first_el && !digits) os << ",";
            first_el = false;
            os << k;
        }
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<uint32_t> blocks;
    uint32_t ground = 0;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = text.find('|', i);
        if (j == std::string::npos) j = text.size();
        std::string blk = text.substr(i, j - i);
        if (blk.empty()) throw error("empty block in partition text '" + text + "'");
        uint32_t mask = 0;
        if (blk.find(',') != std::string::npos) {
            std::istringstream is(blk);
            std::string piece;
            while (std::getline(is, piece, ',')) {
                int k = std::stoi(piece);
                if (k < 1 || k > kMaxGroundSize) throw error("element out of range: " + piece);
                mask |= 1u << (k - 1);
            }
        } else {
            for (char ch : blk) {
                if (ch < '1' || ch > '9') throw error("bad element '" + std::string(1, ch) + "'");
                mask |= 1u << (ch - '1');
            }
        }
        blocks.push_back(mask);
        ground |= mask;
        if (j == text.size()) break;
        i = j + 1;
    }
    return Partition(ground, std::move(blocks));
}

std::vector<Partition> all_partitions(uint32_t ground_mask) {
    if (ground_mask == 0) throw error("all_partitions: empty ground set");
    std::vector<int> els = mask_elements(ground_mask);
    std::vector<Partition> out;
    std::vector<uint32_t> blocks;
    // Restricted-growth enumeration: each element joins an existing block or
    // opens a new one.
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == els.size()) {
            out.emplace_back(ground_mask, blocks);
            return;
        }
        uint32_t bit = 1u << (els[idx] - 1);
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b] |= bit;
            self(self, idx + 1);
            blocks[b] &= ~bit;
        }
        blocks.push_back(bit);
        self(self, idx + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    return out;
}

namespace {

std::vector<Partition> dedup(std::vector<Partition> elems) {
    std::sort(elems.begin(), elems.end(), [](const Partition& a, const Partition& b) {
        if (a.blocks.size() != b.blocks.size()) return a.blocks.size() > b.blocks.size();
        return a.blocks < b.blocks;
    });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

}  // namespace

PartitionPoset::PartitionPoset(uint32_t ground_mask, std::vector<Partition> elements)
    : ground_(ground_mask), elems_(dedup(std::move(elements))) {
    const size_t n = elems_.size();
    bool has_bottom = false, has_top = false;
    Partition bot = Partition::singletons(ground_);
    Partition top = Partition::one_block(ground_);
    for (size_t i = 0; i < n; ++i) {
        if (elems_[i].ground != ground_) throw error("poset element on a different ground set");
        if (elems_[i] == bot) bottom_ = i, has_bottom = true;
        if (elems_[i] == top) top_ = i, has_top = true;
    }
    if (!has_bottom || !has_top)
        throw error("partition poset must contain the minimal and maximal partitions");

    leq_.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) leq_[i][j] = elems_[i].refines(elems_[j]);
    // Refinement is a partial order; antisymmetry holds because elements are
    // deduplicated, and transitivity is intrinsic to containment of blocks.

    // mu(x, top) for all x, top-down over the dual recursion.
    mu_top_.assign(n, 0);
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return elems_[a].block_count() < elems_[b].block_count();
    });
    for (size_t x = 0; x < n; ++x) {
        if (x == top_) mu_top_[x] = 1;
    }
    for (size_t oi = 0; oi < n; ++oi) {
        size_t x = order[oi];
        if (x == top_) continue;
        if (!leq_[x][top_]) continue;
        long long s = 0;
        for (size_t z = 0; z < n; ++z)
            if (z != x && leq_[x][z] && leq_[z][top_]) s += mu_top_[z];
        mu_top_[x] = -s;
    }

    if (n <= 600) {
        mu_.assign(n, std::vector<long long>(n, 0));
        // mu(x, y) over intervals, bottom-up in y along the coarsening order.
        for (size_t yi = 0; yi < n; ++yi) {
            size_t y = order[n - 1 - yi];  // finest first
            for (size_t x = 0; x < n; ++x) {
                if (x == y) {
                    mu_[x][y] = 1;
                    continue;
                }
                if (!leq_[x][y]) continue;
                long long s = 0;
                for (size_t z = 0; z < n; ++z)
                    if (z != y && leq_[x][z] && leq_[z][y]) s += mu_[x][z];
                mu_[x][y] = -s;
            }
        }
    }
}

std::optional<size_t> PartitionPoset::index_of(const Partition& p) const {
    for (size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == p) return i;
    return std::nullopt;
}

long long PartitionPoset::mobius(size_t x, size_t y) const {
    if (x >= elems_.size() || y >= elems_.size()) throw error("mobius: index out of range");
    if (x == y) return 1;
    if (!leq_[x][y]) return 0;
    if (!mu_.empty()) return mu_[x][y];
    if (y == top_) return mu_top_[x];
    // No table for large posets: evaluate the recursion with a local memo.
    std::map<size_t, long long> memo;
    auto rec = [&](auto&& self, size_t z) -> long long {
        if (z == x) return 1;
        auto it = memo.find(z);
        if (it != memo.end()) return it->second;
        long long s = 0;
        for (size_t w = 0; w < elems_.size(); ++w)
            if (w != z && leq_[x][w] && leq_[w][z]) s += self(self, w);
        memo[z] = -s;
        return -s;
    };
    return rec(rec, y);
}

long long PartitionPoset::mobius(const Partition& x, const Partition& y) const {
    auto ix = index_of(x), iy = index_of(y);
    if (!ix || !iy) throw error("mobius: partition is not an element of the poset");
    return mobius(*ix, *iy);
}

PartitionPoset PartitionPoset::restrict(uint32_t mask) const {
    if ((mask & ground_) == 0) throw error("restrict: empty ground set");
    std::vector<Partition> out;
    out.reserve(elems_.size());
    for (auto& p : elems_) out.push_back(p.restricted_to(mask & ground_));
    return PartitionPoset(mask & ground_, std::move(out));
}

PartitionPoset full_partition_lattice(int n) {
    if (n > 8) throw error("full partition lattice capped at n = 8");
    uint32_t g = full_mask(n);
    return PartitionPoset(g, all_partitions(g));
}

PartitionPoset interval_partitions(int n) {
    if (n > 13) throw error("interval partition poset capped at n = 13");
    uint32_t g = full_mask(n);
    std::vector<Partition> elems;
    // Cut points between consecutive elements choose the interval blocks.
    for (uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::vector<uint32_t> blocks;
        uint32_t cur = 0;
        for (int k = 1; k <= n; ++k) {
            cur |= 1u << (k - 1);
            bool cut = (k == n) || (cuts & (1u << (k - 1)));
            if (cut) {
                blocks.push_back(cur);
                cur = 0;
            }
        }
        elems.emplace_back(g, std::move(blocks));
    }
    return PartitionPoset(g, std::move(elems));
}

PartitionPoset one_cluster_partitions(int n) {
    if (n > 12) throw error("one-cluster partition poset capped at n = 12");
    uint32_t g = full_mask(n);
    std::vector<Partition> elems;
    elems.push_back(Partition::singletons(g));
    for (uint32_t sub = g; sub; sub = (sub - 1) & g) {
        if (popcount(sub) < 2) continue;
        std::vector<uint32_t> blocks{sub};
        for (uint32_t m = g & ~sub; m; m &= m - 1) blocks.push_back(m & -m);
        elems.emplace_back(g, std::move(blocks));
    }
    return PartitionPoset(g, std::move(elems));
}

PartitionPoset min_max_poset(int n) {
    uint32_t g = full_mask(n);
    std::vector<Partition> elems{Partition::singletons(g), Partition::one_block(g)};
    return PartitionPoset(g, std::move(elems));
}

long long mobius_sum(const PartitionPoset& p) {
    if (p.size() < 2)
        throw error("mobius_sum requires a poset of size at least two");
    long long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += p.mobius_to_top(i);
    return s;
}

bool product_mobius_check(const PartitionPoset& p, const PartitionPoset& q) {
    size_t np = p.size(), nq = q.size(), n = np * nq;
    auto leq = [&](size_t a, size_t b) {
        return p.leq(a / nq, b / nq) && q.leq(a % nq, b % nq);
    };
    // Möbius of the product poset by the plain recursion in the second
    // argument, for every base point.
    for (size_t x = 0; x < n; ++x) {
        std::vector<long long> mu(n, 0);
        std::vector<size_t> above;
        for (size_t y = 0; y < n; ++y)
            if (leq(x, y)) above.push_back(y);
        // Topological order: sort by the number of elements below within the
        // set. Keys are precomputed; the comparator must not walk the vector
        // it is ordering.
        std::vector<size_t> below_count(n, 0);
        for (size_t y : above)
            for (size_t z : above)
                if (leq(z, y)) ++below_count[y];
        std::sort(above.begin(), above.end(),
                  [&](size_t a, size_t b) { return below_count[a] < below_count[b]; });
        for (size_t y : above) {
            if (y == x) {
                mu[y] = 1;
                continue;
            }
            long long s = 0;
            for (size_t z : above)
                if (z != y && leq(z, y)) s += mu[z];
            mu[y] = -s;
        }
        for (size_t y : above) {
            long long expect = p.mobius(x / nq, y / nq) * q.mobius(x % nq, y % nq);
            if (mu[y] != expect) return false;
        }
    }
    return true;
}

}  // namespace cremona
